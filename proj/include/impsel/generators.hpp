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

#ifndef IMPSEL_GENERATORS_HPP_
#define IMPSEL_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "impsel/digraph.hpp"

namespace impsel {

// n vertices and the single arc 0 -> 1.
Digraph single_arc(std::size_t n);

Digraph complete_digraph(std::size_t n);

// Arcs i -> (i + j) mod n for j = 1..degree. Every vertex has in- and
// out-degree exactly `degree`. Requires n > degree >= 1.
Digraph circulant_regular(std::size_t n, std::size_t degree);

// Number of regular vertices used by tight_example:
// ceil((N + 1)(N^2 + N + 1) ln(1 / eps)).
std::size_t tight_example_regular_size(std::size_t degree, double eps);

// circulant_regular(n', N) plus a sink v0 = n' receiving 2N - 1 arcs from
// vertices 0..2N-2. On this family the permutation mechanism cannot do
// better than roughly 3/4 of the maximum in-degree.
// Requires N >= 1 and 0 < eps < 1/4.
Digraph tight_example(std::size_t degree, double eps);

// Center 0 with in-arcs from leaves 1..leaves; no other arcs.
Digraph planted_star(std::size_t leaves);

// Centers 0 and 1 with disjoint leaf sets of the given sizes.
Digraph two_star(std::size_t leaves_a, std::size_t leaves_b);

// Each ordered pair (u, v), u != v, is an arc independently with
// probability p.
Digraph uniform_digraph(std::size_t n, double p, std::uint64_t seed);

// Z from the greedy procedure on an N-in/out-regular graph: pick the lowest
// surviving vertex z, then discard z, its in- and out-neighbors, and the
// out-neighbors of its in-neighbors. No two members of Z are adjacent or
// share an in-neighbor, and |Z| >= n / (N^2 + N + 1).
// Throws GraphError if g is not `degree`-regular.
std::vector<VertexId> greedy_witness_set(const Digraph &g, std::size_t degree);

} // namespace impsel

#endif // IMPSEL_GENERATORS_HPP_
