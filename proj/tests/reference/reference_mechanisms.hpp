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

#ifndef IMPSEL_TESTS_REFERENCE_MECHANISMS_HPP_
#define IMPSEL_TESTS_REFERENCE_MECHANISMS_HPP_

// Literal, slow re-statements of the selection procedures. They share only
// the Digraph container and the RandomTape coins with the library and
// recompute every restricted in-degree from scratch, so they serve as an
// independent oracle for the incremental implementations.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "impsel/digraph.hpp"
#include "impsel/random_tape.hpp"

namespace impsel::reference {

inline std::size_t in_degree_from(const Digraph &g, VertexId v, const std::set<VertexId> &from) {
  std::size_t d = 0;
  for (const Arc &a : g.arcs()) {
    if (a.to == v && from.count(a.from) > 0) {
      ++d;
    }
  }
  return d;
}

struct PermutationRun {
  VertexId winner;
  // d^-_{Pi_i \ {y_i}}(y_i) for i = 1..n
  std::vector<std::size_t> leader_counted_degree;
};

inline PermutationRun permutation(const Digraph &g, const std::vector<VertexId> &order) {
  PermutationRun run;
  VertexId leader = order[0];
  run.leader_counted_degree.push_back(0);
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::set<VertexId> counted(order.begin(), order.begin() + static_cast<long>(i));
    counted.erase(leader);
    if (in_degree_from(g, order[i], counted) >= in_degree_from(g, leader, counted)) {
      leader = order[i];
    }
    std::set<VertexId> next(order.begin(), order.begin() + static_cast<long>(i) + 1);
    next.erase(leader);
    run.leader_counted_degree.push_back(in_degree_from(g, leader, next));
  }
  run.winner = leader;
  return run;
}

inline std::optional<VertexId> two_partition(const Digraph &g, const std::vector<bool> &candidate) {
  std::optional<VertexId> best;
  std::size_t best_votes = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!candidate[v]) {
      continue;
    }
    std::size_t votes = 0;
    for (const Arc &a : g.arcs()) {
      votes += (a.to == v && !candidate[a.from]) ? 1 : 0;
    }
    if (!best || votes > best_votes) {
      best = v;
      best_votes = votes;
    }
  }
  return best;
}

// eps as a decimal fraction with six digits; every eps used in tests is one.
inline boost::rational<std::int64_t> decimal_eps(double eps) {
  return {std::llround(eps * 1e6), 1000000};
}

inline std::size_t tau_for(double eps) {
  // smallest integer t with t * eps^2 >= 1
  const auto e2 = decimal_eps(eps) * decimal_eps(eps);
  std::size_t t = 1;
  while (e2 * static_cast<std::int64_t>(t) < 1) {
    ++t;
  }
  return t;
}

struct SlicingRun {
  std::vector<VertexId> winners;
  std::set<VertexId> sample;
  std::vector<std::set<VertexId>> slices;
  bool fallback_used = false;
};

// Top-c vertices of V \ R by d^-_R, lowest index first on ties.
inline std::vector<VertexId> top_unrevealed(const Digraph &g, const std::set<VertexId> &revealed,
                                            std::size_t c) {
  // one scan of the arc list: d^-_R for every vertex
  std::vector<std::size_t> d(g.vertex_count(), 0);
  for (const Arc &a : g.arcs()) {
    if (revealed.count(a.from) > 0) {
      ++d[a.to];
    }
  }
  std::vector<std::pair<std::size_t, VertexId>> scored;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (revealed.count(u) == 0) {
      scored.emplace_back(d[u], u);
    }
  }
  std::sort(scored.begin(), scored.end(), [](const auto &a, const auto &b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<VertexId> top;
  for (std::size_t i = 0; i < scored.size() && i < c; ++i) {
    top.push_back(scored[i].second);
  }
  return top;
}

inline SlicingRun slicing(const Digraph &g, double eps, std::size_t c, const RandomTape &tape) {
  SlicingRun run;
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> unsampled;
  for (VertexId v = 0; v < n; ++v) {
    if (tape.sample_coin(v, eps)) {
      run.sample.insert(v);
    } else {
      unsampled.push_back(v);
    }
  }
  // Band on the sampled in-degree; d_e = count / eps shares the 1/eps factor.
  std::vector<std::size_t> count(n, 0);
  for (const Arc &a : g.arcs()) {
    if (run.sample.count(a.from) > 0) {
      ++count[a.to];
    }
  }
  std::size_t max_count = 0;
  for (VertexId v : unsampled) {
    max_count = std::max(max_count, count[v]);
  }
  const std::size_t tau = tau_for(eps);
  const auto width = decimal_eps(eps) * decimal_eps(eps) * static_cast<std::int64_t>(max_count);
  run.slices.assign(tau, {});
  for (VertexId v : unsampled) {
    const auto value = static_cast<std::int64_t>(count[v]);
    std::size_t band = 1;
    if (width > 0) {
      for (std::size_t i = 1; i <= tau; ++i) {
        const auto lo = width * static_cast<std::int64_t>(i - 1);
        const auto hi = width * static_cast<std::int64_t>(i);
        const bool above_lower = lo <= value;
        const bool below_upper = i == tau ? true : value < hi;
        if (above_lower && below_upper) {
          band = i;
          break;
        }
      }
    }
    run.slices[band - 1].insert(v);
  }

  std::set<VertexId> revealed = run.sample;
  std::vector<VertexId> y = top_unrevealed(g, revealed, c);
  for (std::size_t i = 1; i <= tau; ++i) {
    const std::set<VertexId> &slice = run.slices[i - 1];
    for (VertexId v : slice) {
      if (std::find(y.begin(), y.end(), v) == y.end() && tape.reveal_coin(v, eps)) {
        revealed.insert(v);
      }
    }
    const std::vector<VertexId> y_interim = top_unrevealed(g, revealed, c);
    revealed.insert(slice.begin(), slice.end());
    revealed.insert(y.begin(), y.end());
    for (VertexId v : y_interim) {
      revealed.erase(v);
    }
    const std::vector<VertexId> y_next = top_unrevealed(g, revealed, c);
    revealed.insert(y_interim.begin(), y_interim.end());
    for (VertexId v : y_next) {
      revealed.erase(v);
    }
    y = y_next;
  }
  run.winners = y;
  if (run.winners.size() < c) {
    run.fallback_used = true;
    for (VertexId v : tape.fallback_order(n)) {
      if (run.winners.size() == c) {
        break;
      }
      if (std::find(run.winners.begin(), run.winners.end(), v) == run.winners.end()) {
        run.winners.push_back(v);
      }
    }
  }
  return run;
}

} // namespace impsel::reference

#endif // IMPSEL_TESTS_REFERENCE_MECHANISMS_HPP_
