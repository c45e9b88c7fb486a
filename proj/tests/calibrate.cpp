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

// One-shot oracle runs that fix the calibrated acceptance thresholds.
//
// Everything here is independent of the library's mechanism code: the
// permutation mechanism is re-implemented with its own counters and std
// randomness, and slicing runs through the literal reference procedure.
// Output is pasted into tests/calibration.hpp together with the seeds.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "impsel/generators.hpp"
#include "reference/reference_mechanisms.hpp"

using namespace impsel;

namespace {

// Winner in-degree under one uniformly random order. all[v] counts votes
// for v from examined vertices; the leader never votes for itself, so its
// count is all[leader], and a newcomer x loses the leader's vote if any.
std::size_t permutation_once(const Digraph &g, std::vector<VertexId> &order,
                             std::mt19937_64 &rng) {
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> all(g.vertex_count(), 0);
  VertexId leader = order[0];
  for (VertexId w : g.out_neighbors(leader)) {
    ++all[w];
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    const VertexId x = order[i];
    const std::size_t x_count = all[x] - (g.has_arc(leader, x) ? 1 : 0);
    if (x_count >= all[leader]) {
      leader = x;
    }
    for (VertexId w : g.out_neighbors(x)) {
      ++all[w];
    }
  }
  return g.in_degree(leader);
}

void tight_ratio(std::size_t degree, std::size_t trials, std::uint64_t seed) {
  const Digraph g = tight_example(degree, 0.1);
  std::vector<VertexId> order(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = static_cast<VertexId>(i);
  }
  std::mt19937_64 rng(seed);
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto d = static_cast<double>(permutation_once(g, order, rng));
    sum += d;
    sum_sq += d * d;
  }
  const double n = static_cast<double>(trials);
  const double mean = sum / n;
  const double sd = std::sqrt((sum_sq - n * mean * mean) / (n - 1));
  const double delta = static_cast<double>(g.max_in_degree());
  std::printf("tight N=%zu eps=0.1 n=%zu delta=%zu trials=%zu seed=%llu ratio=%.6f ci=%.6f\n",
              degree, g.vertex_count(), g.max_in_degree(), trials,
              static_cast<unsigned long long>(seed), mean / delta,
              1.96 * sd / std::sqrt(n) / delta);
}

template <typename Pred>
void slicing_fraction(const char *name, const Digraph &g, double eps, std::size_t c,
                      std::size_t trials, std::uint64_t seed, Pred success) {
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto run = reference::slicing(g, eps, c, RandomTape(mix_seed(seed, t)));
    hits += success(run.winners) ? 1 : 0;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  std::printf("%s eps=%.2f c=%zu trials=%zu seed=%llu fraction=%.6f sigma=%.6f\n", name, eps, c,
              trials, static_cast<unsigned long long>(seed), p,
              std::sqrt(p * (1 - p) / static_cast<double>(trials)));
}

} // namespace

int main() {
  constexpr std::uint64_t kSeed = 20260101;
  for (std::size_t degree : {2, 4, 8}) {
    tight_ratio(degree, 100000, kSeed + degree);
  }

  const Digraph star = planted_star(500);
  slicing_fraction("star leaves=500 (center wins)", star, 0.2, 1, 100000, kSeed + 100,
                   [](const std::vector<VertexId> &w) { return w[0] == 0; });
  slicing_fraction("star leaves=500 (degree >= 0)", star, 0.2, 1, 100000, kSeed + 100,
                   [&](const std::vector<VertexId> &w) { return star.in_degree(w[0]) >= 0; });

  const Digraph two = two_star(50, 48);
  slicing_fraction("two-star 50/48 (both centers)", two, 0.2, 2, 100000, kSeed + 200,
                   [](const std::vector<VertexId> &w) {
                     return (w[0] == 0 && w[1] == 1) || (w[0] == 1 && w[1] == 0);
                   });
  return 0;
}
