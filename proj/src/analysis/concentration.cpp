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

#include "impsel/analysis/concentration.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "impsel/random.hpp"

namespace impsel {

namespace {

void require_trials(std::size_t trials) {
  if (trials == 0) {
    throw std::invalid_argument("trials must be at least 1");
  }
}

} // namespace

bool is_balanced_permutation(std::span<const VertexId> pi, std::size_t delta, double eps) {
  const std::size_t n = pi.size();
  if (delta > n) {
    throw std::invalid_argument("delta must not exceed n");
  }
  const double d = static_cast<double>(delta);
  std::size_t hits = 0;
  // k = 0 gives -eps * delta <= 0, always met.
  for (std::size_t k = 1; k <= n; ++k) {
    hits += pi[k - 1] < delta ? 1 : 0;
    const double need = (static_cast<double>(k) / static_cast<double>(n) - eps) * d;
    if (static_cast<double>(hits) < need) {
      return false;
    }
  }
  return true;
}

double balanced_fraction(std::size_t n, std::size_t delta, double eps, std::size_t trials,
                         std::uint64_t seed) {
  if (delta > n) {
    throw std::invalid_argument("delta must not exceed n");
  }
  require_trials(trials);
  Rng rng(seed);
  std::vector<VertexId> pi(n);
  std::iota(pi.begin(), pi.end(), VertexId{0});
  std::size_t balanced = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    shuffle(std::span<VertexId>(pi), rng);
    balanced += is_balanced_permutation(pi, delta, eps) ? 1 : 0;
  }
  return static_cast<double>(balanced) / static_cast<double>(trials);
}

double hypergeometric_tail(std::size_t n, std::size_t delta, std::size_t k, double eps1,
                           std::size_t trials, std::uint64_t seed) {
  if (!(eps1 > 0.0)) {
    throw std::invalid_argument("eps1 must be positive");
  }
  if (delta > n || k > n) {
    throw std::invalid_argument("delta and k must not exceed n");
  }
  require_trials(trials);
  Rng rng(seed);
  std::vector<VertexId> pool(n);
  std::iota(pool.begin(), pool.end(), VertexId{0});
  const double center = static_cast<double>(k) * static_cast<double>(delta) /
                        static_cast<double>(n);
  const double radius = eps1 * static_cast<double>(delta);
  std::size_t deviations = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    partial_shuffle(std::span<VertexId>(pool), delta, rng);
    std::size_t overlap = 0;
    for (std::size_t i = 0; i < delta; ++i) {
      overlap += pool[i] < k ? 1 : 0;
    }
    deviations += std::abs(static_cast<double>(overlap) - center) >= radius ? 1 : 0;
  }
  return static_cast<double>(deviations) / static_cast<double>(trials);
}

ChernoffCheck chernoff_empirical(std::size_t n, double p, double delta, std::size_t trials,
                                 std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0) || !(delta >= 0.0)) {
    throw std::invalid_argument("need 0 <= p <= 1 and delta >= 0");
  }
  require_trials(trials);
  Rng rng(seed);
  const double mean = p * static_cast<double>(n);
  const double radius = delta * mean;
  std::size_t deviations = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += rng.bernoulli(p) ? 1 : 0;
    }
    deviations += std::abs(static_cast<double>(sum) - mean) >= radius ? 1 : 0;
  }
  ChernoffCheck check;
  check.empirical = static_cast<double>(deviations) / static_cast<double>(trials);
  check.bound = std::exp(-delta * delta * mean / 3.0);
  return check;
}

} // namespace impsel
