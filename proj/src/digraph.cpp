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

#include "impsel/digraph.hpp"

#include <algorithm>

namespace impsel {

namespace {

std::string arc_string(const Arc &a) {
  return "(" + std::to_string(a.from) + ", " + std::to_string(a.to) + ")";
}

} // namespace

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  if (n_ == 0) {
    throw GraphError("digraph needs at least one vertex");
  }
  for (const Arc &a : arcs_) {
    if (a.from >= n_ || a.to >= n_) {
      throw GraphError("arc " + arc_string(a) + " has an endpoint outside [0, " +
                       std::to_string(n_) + ")");
    }
    if (a.from == a.to) {
      throw GraphError("self-loop " + arc_string(a));
    }
  }
  std::sort(arcs_.begin(), arcs_.end());
  auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end()) {
    throw GraphError("duplicate arc " + arc_string(*dup));
  }

  out_offsets_.assign(n_ + 1, 0);
  in_offsets_.assign(n_ + 1, 0);
  for (const Arc &a : arcs_) {
    ++out_offsets_[a.from + 1];
    ++in_offsets_[a.to + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_adj_.resize(arcs_.size());
  in_adj_.resize(arcs_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // Lexicographic arc order leaves both adjacency lists sorted.
  for (const Arc &a : arcs_) {
    out_adj_[out_fill[a.from]++] = a.to;
    in_adj_[in_fill[a.to]++] = a.from;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    max_in_degree_ = std::max(max_in_degree_, in_offsets_[v + 1] - in_offsets_[v]);
  }
}

bool Digraph::has_arc(VertexId from, VertexId to) const {
  if (from >= n_ || to >= n_) {
    return false;
  }
  auto out = out_neighbors(from);
  return std::binary_search(out.begin(), out.end(), to);
}

Digraph Digraph::with_out_neighbors(VertexId v,
                                    std::span<const VertexId> new_out) const {
  if (v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size() + new_out.size());
  for (const Arc &a : arcs_) {
    if (a.from != v) {
      arcs.push_back(a);
    }
  }
  for (VertexId w : new_out) {
    arcs.push_back({v, w});
  }
  return Digraph(n_, std::move(arcs));
}

Digraph Digraph::without_vertex(VertexId v) const {
  if (v >= n_ || n_ == 1) {
    throw GraphError("cannot remove vertex " + std::to_string(v));
  }
  auto shift = [v](VertexId u) { return u > v ? u - 1 : u; };
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const Arc &a : arcs_) {
    if (a.from != v && a.to != v) {
      arcs.push_back({shift(a.from), shift(a.to)});
    }
  }
  return Digraph(n_ - 1, std::move(arcs));
}

std::size_t in_degree_within(const Digraph &g, VertexId v,
                             const std::vector<bool> &in_set) {
  std::size_t count = 0;
  for (VertexId u : g.in_neighbors(v)) {
    count += in_set[u] ? 1 : 0;
  }
  return count;
}

} // namespace impsel
