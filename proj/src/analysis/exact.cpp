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

#include "impsel/analysis/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "impsel/mechanisms.hpp"

namespace impsel {

Rational exact_expected_winner_degree_permutation(const Digraph &g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxExactPermutationVertices) {
    throw std::invalid_argument("exact permutation oracle supports n <= 9");
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::int64_t total = 0;
  std::int64_t count = 0;
  do {
    total += static_cast<std::int64_t>(g.in_degree(permutation_winner(g, order)));
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return {total, count};
}

Rational exact_expected_winner_degree_two_partition(const Digraph &g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxExactPartitionVertices) {
    throw std::invalid_argument("exact two-partition oracle supports n <= 20");
  }
  const std::uint64_t splits = std::uint64_t{1} << n;
  std::vector<bool> candidate(n);
  std::int64_t total = 0;
  for (std::uint64_t mask = 1; mask < splits; ++mask) {
    for (std::size_t v = 0; v < n; ++v) {
      candidate[v] = ((mask >> v) & 1U) != 0;
    }
    total += static_cast<std::int64_t>(g.in_degree(*two_partition_winner(g, candidate)));
  }
  // mask 0 leaves V2 empty and elects vertex 0.
  total += static_cast<std::int64_t>(g.in_degree(0));
  return Rational(total, static_cast<std::int64_t>(splits));
}

std::string to_decimal_string(const Rational &r, int max_fraction_digits) {
  std::int64_t num = r.numerator();
  const std::int64_t den = r.denominator();
  std::string out;
  if (num < 0) {
    out += '-';
    num = -num;
  }
  out += std::to_string(num / den);
  std::int64_t rem = num % den;
  if (rem == 0) {
    return out;
  }
  out += '.';
  for (int i = 0; i < max_fraction_digits && rem != 0; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  while (out.back() == '0') {
    out.pop_back();
  }
  return out;
}

} // namespace impsel
