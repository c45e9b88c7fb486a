// Copyright 2026 The impsel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IMPSEL_DIGRAPH_HPP_
#define IMPSEL_DIGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace impsel {

// Candidates are vertices 0..n-1; an arc u -> v is a vote from u for v.
using VertexId = std::uint32_t;

struct Arc {
  VertexId from;
  VertexId to;

  friend auto operator<=>(const Arc &, const Arc &) = default;
};

class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Immutable loopless simple digraph with CSR out- and in-adjacency.
// Arcs are stored in lexicographic order; neighbor lists are sorted.
class Digraph {
public:
  // Throws GraphError on n == 0, self-loops, duplicate arcs, or endpoints
  // outside [0, n).
  Digraph(std::size_t n, std::vector<Arc> arcs);

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_adj_.data() + out_offsets_[v],
            out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    return {in_adj_.data() + in_offsets_[v],
            in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::size_t out_degree(VertexId v) const {
    return out_offsets_[v + 1] - out_offsets_[v];
  }
  std::size_t in_degree(VertexId v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }

  std::size_t max_in_degree() const { return max_in_degree_; }

  bool has_arc(VertexId from, VertexId to) const;

  // Copy of this graph with the out-neighborhood of v replaced.
  Digraph with_out_neighbors(VertexId v,
                             std::span<const VertexId> new_out) const;

  // Copy of this graph with vertex v and its incident arcs removed;
  // vertices above v shift down by one.
  Digraph without_vertex(VertexId v) const;

  friend bool operator==(const Digraph &a, const Digraph &b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

private:
  std::size_t n_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_adj_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_adj_;
  std::size_t max_in_degree_ = 0;
};

inline Digraph build_digraph(std::size_t n, std::vector<Arc> arcs) {
  return Digraph(n, std::move(arcs));
}

inline std::size_t max_in_degree(const Digraph &g) { return g.max_in_degree(); }

// Number of in-neighbors of v lying in the set marked by `in_set`.
std::size_t in_degree_within(const Digraph &g, VertexId v,
                             const std::vector<bool> &in_set);

} // namespace impsel

#endif // IMPSEL_DIGRAPH_HPP_
