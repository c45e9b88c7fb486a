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

#include "impsel/analysis/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace impsel {

void parallel_for_trials(std::size_t trials, std::size_t jobs,
                         const std::function<void(std::size_t)> &fn) {
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(trials, 1));
  if (jobs == 1) {
    for (std::size_t t = 0; t < trials; ++t) {
      fn(t);
    }
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const std::size_t chunk = (trials + jobs - 1) / jobs;
  for (std::size_t j = 0; j < jobs; ++j) {
    const std::size_t begin = j * chunk;
    const std::size_t end = std::min(trials, begin + chunk);
    workers.emplace_back([&fn, begin, end] {
      for (std::size_t t = begin; t < end; ++t) {
        fn(t);
      }
    });
  }
  for (auto &w : workers) {
    w.join();
  }
}

std::vector<std::size_t> winner_degree_samples(const MechanismSpec &spec,
                                               const Digraph &g, std::size_t trials,
                                               std::uint64_t seed, std::size_t jobs) {
  validate(spec);
  std::vector<std::size_t> samples(trials, 0);
  parallel_for_trials(trials, jobs, [&](std::size_t t) {
    samples[t] = run_mechanism(spec, g, RandomTape::for_trial(seed, t))
                     .total_winner_in_degree();
  });
  return samples;
}

AlphaEstimate monte_carlo_alpha(const MechanismSpec &spec, const Digraph &g,
                                std::size_t trials, std::uint64_t seed,
                                std::size_t jobs) {
  if (trials == 0) {
    throw std::invalid_argument("trials must be at least 1");
  }
  const std::vector<std::size_t> samples = winner_degree_samples(spec, g, trials, seed, jobs);
  // Integer sums make the aggregate independent of evaluation order.
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for (std::size_t s : samples) {
    sum += s;
    sum_sq += static_cast<std::uint64_t>(s) * s;
  }
  const double per_trial = spec.kind == MechanismKind::slicing_multiwinner
                               ? static_cast<double>(spec.winners)
                               : 1.0;
  const double t = static_cast<double>(trials);
  AlphaEstimate est;
  est.trials = trials;
  est.delta = g.max_in_degree();
  est.mean_winner_degree = static_cast<double>(sum) / t / per_trial;
  if (trials > 1) {
    // Sample variance of the per-trial value s / per_trial, computed from
    // integers: (T * sum_sq - sum^2) / (T (T - 1)).
    const double tt = t;
    const double numer = tt * static_cast<double>(sum_sq) -
                         static_cast<double>(sum) * static_cast<double>(sum);
    const double var = std::max(0.0, numer / (tt * (tt - 1.0))) / (per_trial * per_trial);
    est.ci_halfwidth = 1.96 * std::sqrt(var) / std::sqrt(t);
  }
  est.ratio = est.delta == 0 ? 1.0 : est.mean_winner_degree / static_cast<double>(est.delta);
  return est;
}

ExactAlpha exact_alpha(const MechanismSpec &spec, const Digraph &g) {
  validate(spec);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  ExactAlpha out;
  switch (spec.kind) {
  case MechanismKind::baseline:
    out.mean = Rational(static_cast<std::int64_t>(g.max_in_degree()));
    out.estimate.trials = 1;
    break;
  case MechanismKind::permutation: {
    out.mean = exact_expected_winner_degree_permutation(g);
    std::int64_t orders = 1;
    for (std::int64_t k = 2; k <= n; ++k) {
      orders *= k;
    }
    out.estimate.trials = static_cast<std::size_t>(orders);
    break;
  }
  case MechanismKind::two_partition:
    out.mean = exact_expected_winner_degree_two_partition(g);
    out.estimate.trials = std::size_t{1} << g.vertex_count();
    break;
  default:
    throw std::invalid_argument("no exact oracle for mechanism '" +
                                std::string(mechanism_name(spec.kind)) + "'");
  }
  const auto delta = static_cast<std::int64_t>(g.max_in_degree());
  out.ratio = delta == 0 ? Rational(1) : out.mean / delta;
  out.estimate.exact = true;
  out.estimate.delta = g.max_in_degree();
  out.estimate.mean_winner_degree = boost::rational_cast<double>(out.mean);
  out.estimate.ratio = boost::rational_cast<double>(out.ratio);
  out.estimate.ci_halfwidth = 0.0;
  return out;
}

} // namespace impsel
