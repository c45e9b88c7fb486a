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

#ifndef IMPSEL_MECHANISMS_HPP_
#define IMPSEL_MECHANISMS_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "impsel/digraph.hpp"
#include "impsel/random_tape.hpp"
#include "impsel/selection.hpp"

namespace impsel {

// Examines vertices in a uniformly random order, keeping a provisional
// leader. A newly examined vertex takes over when its in-degree from the
// already examined non-leader vertices is at least the leader's (ties go to
// the newcomer). A vertex's votes are counted only once it is behind the
// leader, i.e. eliminated.
Selection permutation_mechanism(const Digraph &g, const RandomTape &tape);

// Final leader for a fixed examination order. Each voter whose votes get
// counted is appended to `trace` when given.
VertexId permutation_winner(const Digraph &g, std::span<const VertexId> order,
                            VoteReadTrace *trace = nullptr);

// Splits V into voters V1 and candidates V2 by the partition coins and
// elects the V2 vertex with the most votes from V1 (lowest index on ties).
// An empty V2 falls back to a uniform vertex.
Selection two_partition_mechanism(const Digraph &g, const RandomTape &tape);

// Winner for a fixed split (`candidate[v]` places v in V2); nullopt when V2
// is empty.
std::optional<VertexId> two_partition_winner(const Digraph &g,
                                             const std::vector<bool> &candidate,
                                             VoteReadTrace *trace = nullptr);

// Sample / slice / elect with sampling rate eps in (0, 1). Argmax ties go
// to the lowest vertex index. If every vertex is sampled the winner is a
// uniform vertex and fallback_used is set.
Selection slicing_mechanism(const Digraph &g, double eps, const RandomTape &tape);

// Slicing with every provisional-winner step taking the top `winners`
// unrevealed vertices by revealed in-degree. When fewer than `winners`
// vertices are unsampled the result is padded with uniformly chosen sampled
// vertices and fallback_used is set.
Selection slicing_multiwinner(const Digraph &g, double eps, std::size_t winners,
                              const RandomTape &tape);

// Non-impartial reference: the maximum in-degree vertex, lowest index first.
Selection max_indegree_baseline(const Digraph &g);

enum class MechanismKind {
  baseline,
  permutation,
  two_partition,
  slicing,
  slicing_multiwinner,
};

struct MechanismSpec {
  MechanismKind kind = MechanismKind::permutation;
  double eps = 0.1;
  std::size_t winners = 1;
};

std::string_view mechanism_name(MechanismKind kind);

// Accepts the names produced by mechanism_name; throws std::invalid_argument
// on anything else.
MechanismKind parse_mechanism_kind(std::string_view name);

// Throws std::invalid_argument on eps outside (0, 1) for the slicing family
// or on winners < 1.
void validate(const MechanismSpec &spec);

// Impartial mechanisms; the baseline is the only one that is not.
bool claims_impartial(MechanismKind kind);

Selection run_mechanism(const MechanismSpec &spec, const Digraph &g,
                        const RandomTape &tape);

} // namespace impsel

#endif // IMPSEL_MECHANISMS_HPP_
