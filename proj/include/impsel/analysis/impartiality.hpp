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

#ifndef IMPSEL_ANALYSIS_IMPARTIALITY_HPP_
#define IMPSEL_ANALYSIS_IMPARTIALITY_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "impsel/digraph.hpp"
#include "impsel/mechanisms.hpp"

namespace impsel {

struct ImpartialityViolation {
  std::uint64_t seed;
  VertexId vertex;
  bool original_wins;
  bool modified_wins;
};

struct ImpartialityReport {
  std::size_t tapes_tested = 0;
  std::vector<ImpartialityViolation> violations;
  // Runs (on either graph) where a winner's own votes were read although no
  // fallback was taken.
  std::size_t trace_violations = 0;

  bool passed() const { return violations.empty(); }

  void merge(const ImpartialityReport &other);
};

// Replays every seed's tape on g and on g with v's out-neighborhood replaced
// by `new_out`, and records each tape where v's win status differs.
// Throws std::invalid_argument if new_out contains v or seeds is empty.
ImpartialityReport impartiality_coupling_test(const MechanismSpec &spec, const Digraph &g,
                                              VertexId v,
                                              std::span<const VertexId> new_out,
                                              std::span<const std::uint64_t> seeds);

// seeds[i] = mix_seed(base, i)
std::vector<std::uint64_t> derive_seeds(std::uint64_t base, std::size_t count);

// A random (graph, vertex, replacement out-neighborhood) triple.
struct PerturbationCase {
  Digraph graph;
  VertexId vertex;
  std::vector<VertexId> new_out;
};

PerturbationCase random_perturbation_case(std::uint64_t seed);

} // namespace impsel

#endif // IMPSEL_ANALYSIS_IMPARTIALITY_HPP_
