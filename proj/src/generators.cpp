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

#include "impsel/generators.hpp"

#include <cmath>
#include <string>

#include "impsel/random.hpp"

namespace impsel {

Digraph single_arc(std::size_t n) {
  if (n < 2) {
    throw GraphError("single-arc graph needs n >= 2");
  }
  return Digraph(n, {{0, 1}});
}

Digraph complete_digraph(std::size_t n) {
  std::vector<Arc> arcs;
  arcs.reserve(n * (n - 1));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) {
        arcs.push_back({u, v});
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph circulant_regular(std::size_t n, std::size_t degree) {
  if (degree < 1 || n <= degree) {
    throw GraphError("circulant needs n > N >= 1 (got n = " + std::to_string(n) +
                     ", N = " + std::to_string(degree) + ")");
  }
  std::vector<Arc> arcs;
  arcs.reserve(n * degree);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= degree; ++j) {
      arcs.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + j) % n)});
    }
  }
  return Digraph(n, std::move(arcs));
}

std::size_t tight_example_regular_size(std::size_t degree, double eps) {
  if (degree < 1 || !(eps > 0.0 && eps < 0.25)) {
    throw GraphError("tight example needs N >= 1 and 0 < eps < 1/4");
  }
  const double d = static_cast<double>(degree);
  return static_cast<std::size_t>(
      std::ceil((d + 1.0) * (d * d + d + 1.0) * std::log(1.0 / eps)));
}

Digraph tight_example(std::size_t degree, double eps) {
  const std::size_t regular = tight_example_regular_size(degree, eps);
  Digraph base = circulant_regular(regular, degree);
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  const auto sink = static_cast<VertexId>(regular);
  for (VertexId u = 0; u < 2 * degree - 1; ++u) {
    arcs.push_back({u, sink});
  }
  return Digraph(regular + 1, std::move(arcs));
}

Digraph planted_star(std::size_t leaves) {
  std::vector<Arc> arcs;
  arcs.reserve(leaves);
  for (VertexId u = 1; u <= leaves; ++u) {
    arcs.push_back({u, 0});
  }
  return Digraph(leaves + 1, std::move(arcs));
}

Digraph two_star(std::size_t leaves_a, std::size_t leaves_b) {
  std::vector<Arc> arcs;
  arcs.reserve(leaves_a + leaves_b);
  VertexId next = 2;
  for (std::size_t i = 0; i < leaves_a; ++i) {
    arcs.push_back({next++, 0});
  }
  for (std::size_t i = 0; i < leaves_b; ++i) {
    arcs.push_back({next++, 1});
  }
  return Digraph(next, std::move(arcs));
}

Digraph uniform_digraph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw GraphError("arc probability must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && rng.bernoulli(p)) {
        arcs.push_back({u, v});
      }
    }
  }
  return Digraph(n, std::move(arcs));
}

std::vector<VertexId> greedy_witness_set(const Digraph &g, std::size_t degree) {
  const std::size_t n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (g.in_degree(v) != degree || g.out_degree(v) != degree) {
      throw GraphError("greedy witness set needs a " + std::to_string(degree) +
                       "-in/out-regular graph; vertex " + std::to_string(v) +
                       " differs");
    }
  }
  std::vector<bool> removed(n, false);
  std::vector<VertexId> witness;
  for (VertexId z = 0; z < n; ++z) {
    if (removed[z]) {
      continue;
    }
    witness.push_back(z);
    removed[z] = true;
    for (VertexId w : g.out_neighbors(z)) {
      removed[w] = true;
    }
    for (VertexId u : g.in_neighbors(z)) {
      removed[u] = true;
      for (VertexId w : g.out_neighbors(u)) {
        removed[w] = true;
      }
    }
  }
  return witness;
}

} // namespace impsel
