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

#ifndef IMPSEL_SELECTION_HPP_
#define IMPSEL_SELECTION_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "impsel/digraph.hpp"

namespace impsel {

enum class Phase : std::uint8_t {
  examine,      // permutation mechanism: votes counted once the voter is behind
  voter_group,  // two-partition: member of V1
  sample,       // slicing: drawn into X
  slice_reveal, // slicing: revealed by its coin while its slice is processed
  slice_update, // slicing: revealed by the R bookkeeping after an argmax
  full_scan,    // non-impartial baseline reads everything
};

struct TraceEvent {
  VertexId voter;
  Phase phase;
  std::uint32_t round;

  friend bool operator==(const TraceEvent &, const TraceEvent &) = default;
};

// Append-only log of every vertex whose out-arcs a mechanism read.
class VoteReadTrace {
public:
  void record(VertexId voter, Phase phase, std::uint32_t round) {
    events_.push_back({voter, phase, round});
  }

  const std::vector<TraceEvent> &events() const { return events_; }
  std::size_t size() const { return events_.size(); }

  bool contains(VertexId v) const {
    return std::any_of(events_.begin(), events_.end(),
                       [v](const TraceEvent &e) { return e.voter == v; });
  }

  friend bool operator==(const VoteReadTrace &, const VoteReadTrace &) = default;

private:
  std::vector<TraceEvent> events_;
};

struct Selection {
  std::vector<VertexId> winners;
  std::vector<std::size_t> winner_in_degrees;
  VoteReadTrace trace;
  bool fallback_used = false;

  VertexId winner() const { return winners.front(); }
  std::size_t winner_in_degree() const { return winner_in_degrees.front(); }

  bool has_winner(VertexId v) const {
    return std::find(winners.begin(), winners.end(), v) != winners.end();
  }

  std::size_t total_winner_in_degree() const {
    std::size_t total = 0;
    for (std::size_t d : winner_in_degrees) {
      total += d;
    }
    return total;
  }

  // True when some winner's own votes were read. Impartial mechanisms never
  // do this outside the fallback path.
  bool winner_in_trace() const {
    return std::any_of(winners.begin(), winners.end(),
                       [this](VertexId w) { return trace.contains(w); });
  }

  void add_winner(const Digraph &g, VertexId v) {
    winners.push_back(v);
    winner_in_degrees.push_back(g.in_degree(v));
  }

  friend bool operator==(const Selection &, const Selection &) = default;
};

} // namespace impsel

#endif // IMPSEL_SELECTION_HPP_
