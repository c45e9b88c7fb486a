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

#include "impsel/analysis/impartiality.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "impsel/generators.hpp"
#include "impsel/random.hpp"

namespace impsel {

void ImpartialityReport::merge(const ImpartialityReport &other) {
  tapes_tested += other.tapes_tested;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  trace_violations += other.trace_violations;
}

ImpartialityReport impartiality_coupling_test(const MechanismSpec &spec, const Digraph &g,
                                              VertexId v,
                                              std::span<const VertexId> new_out,
                                              std::span<const std::uint64_t> seeds) {
  validate(spec);
  if (seeds.empty()) {
    throw std::invalid_argument("coupling test needs at least one seed");
  }
  if (v >= g.vertex_count()) {
    throw std::invalid_argument("perturbed vertex out of range");
  }
  if (std::find(new_out.begin(), new_out.end(), v) != new_out.end()) {
    throw std::invalid_argument("replacement out-neighborhood contains the vertex itself");
  }
  const Digraph modified = g.with_out_neighbors(v, new_out);

  ImpartialityReport report;
  for (std::uint64_t seed : seeds) {
    const RandomTape tape(seed);
    const Selection before = run_mechanism(spec, g, tape);
    const Selection after = run_mechanism(spec, modified, tape);
    ++report.tapes_tested;
    for (const Selection *s : {&before, &after}) {
      if (!s->fallback_used && s->winner_in_trace()) {
        ++report.trace_violations;
      }
    }
    const bool won_before = before.has_winner(v);
    const bool won_after = after.has_winner(v);
    if (won_before != won_after) {
      report.violations.push_back({seed, v, won_before, won_after});
    }
  }
  return report;
}

std::vector<std::uint64_t> derive_seeds(std::uint64_t base, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (std::size_t i = 0; i < count; ++i) {
    seeds[i] = mix_seed(base, i);
  }
  return seeds;
}

PerturbationCase random_perturbation_case(std::uint64_t seed) {
  constexpr std::array<double, 5> kDensities = {0.05, 0.1, 0.2, 0.4, 0.7};
  Rng rng(seed);
  const std::size_t n = 2 + rng.below(39);
  const double p = kDensities[rng.below(kDensities.size())];
  Digraph g = uniform_digraph(n, p, rng.next());
  const auto v = static_cast<VertexId>(rng.below(n));
  const double q = kDensities[rng.below(kDensities.size())];
  std::vector<VertexId> new_out;
  for (VertexId w = 0; w < n; ++w) {
    if (w != v && rng.bernoulli(q)) {
      new_out.push_back(w);
    }
  }
  return {std::move(g), v, std::move(new_out)};
}

} // namespace impsel
