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

#ifndef IMPSEL_ANALYSIS_CONCENTRATION_HPP_
#define IMPSEL_ANALYSIS_CONCENTRATION_HPP_

#include <cstdint>
#include <span>

#include "impsel/digraph.hpp"

namespace impsel {

// Empirical checkers for the concentration facts behind the mechanisms'
// guarantees. All samplers are deterministic in `seed`.

// True iff every prefix of length k (0 <= k <= n) holds at least
// (k/n - eps) * delta of the distinguished elements {0, .., delta-1}.
// Throws std::invalid_argument if delta > n.
bool is_balanced_permutation(std::span<const VertexId> pi, std::size_t delta, double eps);

// Fraction of `trials` uniform permutations of [n] that are balanced.
double balanced_fraction(std::size_t n, std::size_t delta, double eps, std::size_t trials,
                         std::uint64_t seed);

// Empirical Pr[ | |X cap [k]| - k delta / n | >= eps1 delta ] over uniform
// delta-subsets X of [n]. Throws on eps1 <= 0, delta > n, k > n.
double hypergeometric_tail(std::size_t n, std::size_t delta, std::size_t k, double eps1,
                           std::size_t trials, std::uint64_t seed);

struct ChernoffCheck {
  double empirical = 0.0; // Pr[ |sum X_i - pn| >= delta p n ]
  double bound = 1.0;     // exp(-delta^2 p n / 3)
};

ChernoffCheck chernoff_empirical(std::size_t n, double p, double delta, std::size_t trials,
                                 std::uint64_t seed);

// |d_e - d| <= eps_hat * d
inline bool well_estimated(double estimated, std::size_t degree, double eps_hat) {
  const double d = static_cast<double>(degree);
  const double gap = estimated > d ? estimated - d : d - estimated;
  return gap <= eps_hat * d;
}

} // namespace impsel

#endif // IMPSEL_ANALYSIS_CONCENTRATION_HPP_
