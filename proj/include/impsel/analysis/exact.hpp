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

#ifndef IMPSEL_ANALYSIS_EXACT_HPP_
#define IMPSEL_ANALYSIS_EXACT_HPP_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "impsel/digraph.hpp"

namespace impsel {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t kMaxExactPermutationVertices = 9;
inline constexpr std::size_t kMaxExactPartitionVertices = 20;

// (1/n!) * sum over all orders of the permutation-mechanism winner's
// in-degree. Throws std::invalid_argument for n > 9.
Rational exact_expected_winner_degree_permutation(const Digraph &g);

// (1/2^n) * sum over all splits of the two-partition winner's in-degree; the
// split with V2 empty contributes the mean in-degree (uniform fallback).
// Throws std::invalid_argument for n > 20.
Rational exact_expected_winner_degree_two_partition(const Digraph &g);

// Decimal expansion with at most `max_fraction_digits` digits after the
// point (truncated), trailing zeros removed: 1/2 -> "0.5", 2 -> "2".
std::string to_decimal_string(const Rational &r, int max_fraction_digits = 12);

} // namespace impsel

#endif // IMPSEL_ANALYSIS_EXACT_HPP_
