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

#ifndef IMPSEL_ANALYSIS_MONTE_CARLO_HPP_
#define IMPSEL_ANALYSIS_MONTE_CARLO_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "impsel/analysis/exact.hpp"
#include "impsel/digraph.hpp"
#include "impsel/mechanisms.hpp"

namespace impsel {

// Estimate of E[d^-(winner)] / Delta. For multi-winner mechanisms the
// per-trial value is the mean in-degree of the winners.
struct AlphaEstimate {
  double mean_winner_degree = 0.0;
  std::size_t delta = 0;
  double ratio = 1.0; // 1 when delta == 0
  std::size_t trials = 0;
  double ci_halfwidth = 0.0; // 95%, normal approximation
  bool exact = false;
};

// Runs `fn(trial)` for trial in [0, trials) on up to `jobs` threads. Each
// index is visited exactly once; callers write results by index so the
// outcome does not depend on scheduling.
void parallel_for_trials(std::size_t trials, std::size_t jobs,
                         const std::function<void(std::size_t)> &fn);

// Sum of winner in-degrees for each trial; trial t uses
// RandomTape::for_trial(seed, t).
std::vector<std::size_t> winner_degree_samples(const MechanismSpec &spec,
                                               const Digraph &g, std::size_t trials,
                                               std::uint64_t seed, std::size_t jobs = 1);

// Throws std::invalid_argument on trials == 0 or an invalid spec.
AlphaEstimate monte_carlo_alpha(const MechanismSpec &spec, const Digraph &g,
                                std::size_t trials, std::uint64_t seed,
                                std::size_t jobs = 1);

// Exact expectation where an oracle exists (baseline, permutation,
// two-partition); `trials` reports the number of outcomes enumerated.
// Throws std::invalid_argument for other mechanisms or oversized graphs.
struct ExactAlpha {
  AlphaEstimate estimate;
  Rational mean;
  Rational ratio;
};
ExactAlpha exact_alpha(const MechanismSpec &spec, const Digraph &g);

} // namespace impsel

#endif // IMPSEL_ANALYSIS_MONTE_CARLO_HPP_
