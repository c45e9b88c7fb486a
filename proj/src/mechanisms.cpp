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

#include "impsel/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "impsel/slicing.hpp"

namespace impsel {

VertexId permutation_winner(const Digraph &g, std::span<const VertexId> order,
                            VoteReadTrace *trace) {
  const std::size_t n = g.vertex_count();
  // counted[u] = d^-_{Pi_i \ {y_i}}(u)
  std::vector<std::size_t> counted(n, 0);
  auto count_votes_of = [&](VertexId voter, std::uint32_t round) {
    if (trace != nullptr) {
      trace->record(voter, Phase::examine, round);
    }
    for (VertexId w : g.out_neighbors(voter)) {
      ++counted[w];
    }
  };
  VertexId leader = order[0];
  for (std::size_t i = 1; i < order.size(); ++i) {
    const VertexId next = order[i];
    const auto round = static_cast<std::uint32_t>(i);
    if (counted[next] >= counted[leader]) {
      count_votes_of(leader, round);
      leader = next;
    } else {
      count_votes_of(next, round);
    }
  }
  return leader;
}

Selection permutation_mechanism(const Digraph &g, const RandomTape &tape) {
  const std::vector<VertexId> order = tape.permutation(g.vertex_count());
  Selection sel;
  sel.add_winner(g, permutation_winner(g, order, &sel.trace));
  return sel;
}

std::optional<VertexId> two_partition_winner(const Digraph &g,
                                             const std::vector<bool> &candidate,
                                             VoteReadTrace *trace) {
  const std::size_t n = g.vertex_count();
  if (std::none_of(candidate.begin(), candidate.end(), [](bool c) { return c; })) {
    return std::nullopt;
  }
  std::vector<std::size_t> counted(n, 0);
  for (VertexId u = 0; u < n; ++u) {
    if (candidate[u]) {
      continue;
    }
    if (trace != nullptr) {
      trace->record(u, Phase::voter_group, 0);
    }
    for (VertexId w : g.out_neighbors(u)) {
      if (candidate[w]) {
        ++counted[w];
      }
    }
  }
  std::optional<VertexId> best;
  for (VertexId v = 0; v < n; ++v) {
    if (candidate[v] && (!best || counted[v] > counted[*best])) {
      best = v;
    }
  }
  return best;
}

Selection two_partition_mechanism(const Digraph &g, const RandomTape &tape) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> candidate(n, false);
  for (VertexId v = 0; v < n; ++v) {
    candidate[v] = tape.partition_coin(v);
  }
  Selection sel;
  if (auto winner = two_partition_winner(g, candidate, &sel.trace)) {
    sel.add_winner(g, *winner);
  } else {
    // V2 empty: every vertex ties at zero counted votes; lowest index wins.
    sel.fallback_used = true;
    sel.add_winner(g, 0);
  }
  return sel;
}

namespace {

// Election state for the slicing family: the revealed set R and the
// revealed in-degree d^-_R of every vertex. R only ever grows.
class RevealedSet {
public:
  RevealedSet(const Digraph &g, VoteReadTrace &trace)
      : g_(g), trace_(trace), revealed_(g.vertex_count(), false),
        revealed_in_degree_(g.vertex_count(), 0) {}

  bool contains(VertexId v) const { return revealed_[v]; }

  void reveal(VertexId v, Phase phase, std::uint32_t round) {
    if (revealed_[v]) {
      return;
    }
    revealed_[v] = true;
    trace_.record(v, phase, round);
    for (VertexId w : g_.out_neighbors(v)) {
      ++revealed_in_degree_[w];
    }
  }

  // Up to k unrevealed vertices maximizing d^-_R, best first, ties by
  // lowest index.
  std::vector<VertexId> top(std::size_t k) const {
    std::vector<VertexId> pool;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (!revealed_[v]) {
        pool.push_back(v);
      }
    }
    const std::size_t take = std::min(k, pool.size());
    auto better = [this](VertexId a, VertexId b) {
      if (revealed_in_degree_[a] != revealed_in_degree_[b]) {
        return revealed_in_degree_[a] > revealed_in_degree_[b];
      }
      return a < b;
    };
    std::partial_sort(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take),
                      pool.end(), better);
    pool.resize(take);
    return pool;
  }

private:
  const Digraph &g_;
  VoteReadTrace &trace_;
  std::vector<bool> revealed_;
  std::vector<std::size_t> revealed_in_degree_;
};

bool contains(const std::vector<VertexId> &set, VertexId v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

Selection run_slicing(const Digraph &g, double eps, std::size_t winners,
                      const RandomTape &tape) {
  if (winners < 1) {
    throw std::invalid_argument("slicing needs at least one winner");
  }
  const SampleResult sample = sample_phase(g, eps, tape);
  const SliceAssignment slicing = slice_sample(sample);

  Selection sel;
  RevealedSet revealed(g, sel.trace);
  for (VertexId x : sample.sampled) {
    revealed.reveal(x, Phase::sample, 0);
  }

  std::vector<VertexId> leaders = revealed.top(winners);
  for (std::size_t i = 1; i <= slicing.tau; ++i) {
    const auto round = static_cast<std::uint32_t>(i);
    const std::vector<VertexId> &slice = slicing.slice(i);
    for (VertexId v : slice) {
      if (!contains(leaders, v) && tape.reveal_coin(v, eps)) {
        revealed.reveal(v, Phase::slice_reveal, round);
      }
    }
    const std::vector<VertexId> interim = revealed.top(winners);
    // R <- (R + S_i + Y_{i-1}) - Y'_i
    for (VertexId v : slice) {
      if (!contains(interim, v)) {
        revealed.reveal(v, Phase::slice_update, round);
      }
    }
    for (VertexId v : leaders) {
      if (!contains(interim, v)) {
        revealed.reveal(v, Phase::slice_update, round);
      }
    }
    std::vector<VertexId> next = revealed.top(winners);
    // R <- (R + Y'_i) - Y_i
    for (VertexId v : interim) {
      if (!contains(next, v)) {
        revealed.reveal(v, Phase::slice_update, round);
      }
    }
    leaders = std::move(next);
  }

  for (VertexId v : leaders) {
    sel.add_winner(g, v);
  }
  if (leaders.size() < winners) {
    // Only possible when |V \ X| < winners, in which case every unsampled
    // vertex already leads and the padding is drawn from X alone.
    sel.fallback_used = true;
    for (VertexId v : tape.fallback_order(g.vertex_count())) {
      if (sel.winners.size() == winners) {
        break;
      }
      if (!sel.has_winner(v)) {
        sel.add_winner(g, v);
      }
    }
  }
  return sel;
}

} // namespace

Selection slicing_mechanism(const Digraph &g, double eps, const RandomTape &tape) {
  return run_slicing(g, eps, 1, tape);
}

Selection slicing_multiwinner(const Digraph &g, double eps, std::size_t winners,
                              const RandomTape &tape) {
  return run_slicing(g, eps, winners, tape);
}

Selection max_indegree_baseline(const Digraph &g) {
  Selection sel;
  VertexId best = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    sel.trace.record(v, Phase::full_scan, 0);
    if (g.in_degree(v) > g.in_degree(best)) {
      best = v;
    }
  }
  sel.add_winner(g, best);
  return sel;
}

std::string_view mechanism_name(MechanismKind kind) {
  switch (kind) {
  case MechanismKind::baseline:
    return "baseline";
  case MechanismKind::permutation:
    return "permutation";
  case MechanismKind::two_partition:
    return "two-partition";
  case MechanismKind::slicing:
    return "slicing";
  case MechanismKind::slicing_multiwinner:
    return "slicing-multi";
  }
  return "unknown";
}

MechanismKind parse_mechanism_kind(std::string_view name) {
  for (MechanismKind kind :
       {MechanismKind::baseline, MechanismKind::permutation, MechanismKind::two_partition,
        MechanismKind::slicing, MechanismKind::slicing_multiwinner}) {
    if (name == mechanism_name(kind)) {
      return kind;
    }
  }
  throw std::invalid_argument("unknown mechanism '" + std::string(name) + "'");
}

void validate(const MechanismSpec &spec) {
  const bool sliced = spec.kind == MechanismKind::slicing ||
                      spec.kind == MechanismKind::slicing_multiwinner;
  if (sliced && !(spec.eps > 0.0 && spec.eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
  if (spec.winners < 1) {
    throw std::invalid_argument("winner count must be at least 1");
  }
}

bool claims_impartial(MechanismKind kind) { return kind != MechanismKind::baseline; }

Selection run_mechanism(const MechanismSpec &spec, const Digraph &g,
                        const RandomTape &tape) {
  switch (spec.kind) {
  case MechanismKind::baseline:
    return max_indegree_baseline(g);
  case MechanismKind::permutation:
    return permutation_mechanism(g, tape);
  case MechanismKind::two_partition:
    return two_partition_mechanism(g, tape);
  case MechanismKind::slicing:
    return slicing_mechanism(g, spec.eps, tape);
  case MechanismKind::slicing_multiwinner:
    return slicing_multiwinner(g, spec.eps, spec.winners, tape);
  }
  throw std::invalid_argument("unknown mechanism");
}

} // namespace impsel
