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

#include "doctest.h"

#include <array>
#include <cmath>
#include <set>

#include "impsel/analysis/concentration.hpp"
#include "impsel/generators.hpp"
#include "impsel/random.hpp"
#include "impsel/slicing.hpp"

using namespace impsel;

namespace {

// Star on `leaves` leaves plus sparse uniform noise among all vertices.
Digraph noisy_star(std::size_t leaves, double p, std::uint64_t seed) {
  Digraph base = planted_star(leaves);
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  Digraph noise = uniform_digraph(base.vertex_count(), p, seed);
  for (const Arc &a : noise.arcs()) {
    if (!base.has_arc(a.from, a.to)) {
      arcs.push_back(a);
    }
  }
  return Digraph(base.vertex_count(), arcs);
}

} // namespace

TEST_CASE("sample_phase estimator") {
  // Vertex 3 receives votes from 0, 1, 2.
  Digraph g = build_digraph(4, {{0, 3}, {1, 3}, {2, 3}});
  RandomTape tape = [] {
    for (std::uint64_t s = 0;; ++s) {
      RandomTape t(s);
      if (t.sample_coin(0, 0.1) && t.sample_coin(1, 0.1) && t.sample_coin(2, 0.1) &&
          !t.sample_coin(3, 0.1)) {
        return t;
      }
    }
  }();
  SampleResult s = sample_phase(g, 0.1, tape);
  CHECK(s.sampled == std::vector<VertexId>{0, 1, 2});
  CHECK(s.estimated_degree(3) == doctest::Approx(30.0));
  auto d_e = s.estimated_degrees();
  CHECK(d_e.size() == 1);
  CHECK(d_e.count(0) == 0);

  RandomTape none = [] {
    for (std::uint64_t s = 0;; ++s) {
      RandomTape t(s);
      bool any = false;
      for (VertexId v = 0; v < 4; ++v) {
        any = any || t.sample_coin(v, 0.1);
      }
      if (!any) {
        return t;
      }
    }
  }();
  SampleResult empty = sample_phase(g, 0.1, none);
  CHECK(empty.sampled.empty());
  for (const auto &[v, value] : empty.estimated_degrees()) {
    CHECK(value == 0.0);
  }
  CHECK(empty.estimated_degrees().size() == 4);

  CHECK_THROWS(sample_phase(g, 0.0, tape));
  CHECK_THROWS(sample_phase(g, 1.0, tape));
}

TEST_CASE("slice_count") {
  CHECK(slice_count(0.5) == 4);
  CHECK(slice_count(0.1) == 100);
  CHECK(slice_count(0.2) == 25);
  CHECK(slice_count(0.3) == 12); // 11.11...
  CHECK(slice_count(0.7) == 3);  // 2.04...
}

TEST_CASE("slice_assign examples") {
  std::map<VertexId, double> d_e = {{0, 10.0}, {1, 0.0}, {2, 2.5}, {3, 2.4}, {4, 7.5}};
  SliceAssignment a = slice_assign(d_e, 0.5, 10.0);
  CHECK(a.tau == 4);
  CHECK(a.width == doctest::Approx(2.5));
  CHECK(a.slice_of(0) == 4);
  CHECK(a.slice_of(1) == 1);
  CHECK(a.slice_of(2) == 2);
  CHECK(a.slice_of(3) == 1);
  CHECK(a.slice_of(4) == 4); // 7.5 = 3 * 2.5 opens band 4
  CHECK(a.slice_of(9) == 0);

  SliceAssignment flat = slice_assign({{0, 0.0}, {5, 0.0}}, 0.3, 0.0);
  CHECK(flat.slice(1).size() == 2);

  SliceAssignment none = slice_assign({}, 0.3, 0.0);
  CHECK(none.tau == 12);
  for (std::size_t i = 1; i <= none.tau; ++i) {
    CHECK(none.slice(i).empty());
  }
}

TEST_CASE("eps_fraction") {
  CHECK(eps_fraction(0.1).num == 1);
  CHECK(eps_fraction(0.1).den == 10);
  CHECK(eps_fraction(0.2).den == 5);
  CHECK(eps_fraction(0.3).num == 3);
  CHECK(eps_fraction(0.3).den == 10);
  CHECK(eps_fraction(0.125).den == 8);
  const EpsFraction e = eps_fraction(0.123456789);
  CHECK(static_cast<double>(e.num) / static_cast<double>(e.den) ==
        doctest::Approx(0.123456789).epsilon(1e-9));
  CHECK_THROWS(eps_fraction(0.0));
}

TEST_CASE("integer banding is exact on band boundaries") {
  // eps = 0.2, max count 25: the width eps^2 * 25 is exactly 1 count, but
  // 0.2 * 0.2 * 25 rounds to 1.0000000000000002 in floating point.
  SampleResult s;
  s.eps = 0.2;
  for (VertexId v = 0; v <= 25; ++v) {
    s.unsampled.push_back(v);
    s.sampled_in_degree.push_back(v);
    s.in_sample.push_back(false);
  }
  SliceAssignment a = slice_sample(s);
  REQUIRE(a.tau == 25);
  for (VertexId v = 0; v < 25; ++v) {
    CHECK(a.slice_of(v) == v + 1);
  }
  CHECK(a.slice_of(25) == 25);
  CHECK(band_index(3.0, 0.0, 25) == 1);
  CHECK(band_index(2.5, 2.5, 4) == 2);
}

TEST_CASE("slices partition the unsampled vertices and respect the bands") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    Digraph g = uniform_digraph(1 + rng.below(60), rng.unit() * 0.7, rng.next());
    const double eps = std::array{0.1, 0.2, 0.3, 0.45, 0.5, 0.8}[rng.below(6)];
    RandomTape tape(rng.next());
    SampleResult s = sample_phase(g, eps, tape);
    SliceAssignment a = slice_sample(s);
    REQUIRE(a.slices.size() == slice_count(eps));

    std::multiset<VertexId> covered;
    for (std::size_t b = 1; b <= a.tau; ++b) {
      for (VertexId v : a.slice(b)) {
        covered.insert(v);
        CHECK_FALSE(s.contains(v));
        const double value = a.d_e.at(v);
        CHECK(value == static_cast<double>(s.sampled_in_degree[v]));
        if (a.width > 0.0) {
          // (b-1) eps^2 max <= count < b eps^2 max, scaled by den^2
          const EpsFraction e = eps_fraction(eps);
          const auto step = static_cast<std::int64_t>(a.delta_e) * e.num * e.num;
          const auto scaled = static_cast<std::int64_t>(value) * e.den * e.den;
          const auto band = static_cast<std::int64_t>(b);
          CHECK((band - 1) * step <= scaled);
          if (b < a.tau) {
            CHECK(scaled < band * step);
          } else {
            CHECK(scaled <= band * step);
          }
        } else {
          CHECK(b == 1);
        }
      }
    }
    CHECK(covered == std::multiset<VertexId>(s.unsampled.begin(), s.unsampled.end()));

    // Banding the real estimates d_e = count / eps gives the same slices.
    double delta_e = 0.0;
    for (const auto &[v, value] : s.estimated_degrees()) {
      delta_e = std::max(delta_e, value);
    }
    SliceAssignment real = slice_assign(s.estimated_degrees(), eps, delta_e);
    for (VertexId v : s.unsampled) {
      const std::size_t by_count = a.slice_of(v);
      const std::size_t by_real = real.slice_of(v);
      // Floating division can only move a vertex that sits on a boundary.
      if (by_count != by_real) {
        const double ratio = a.d_e.at(v) / a.width;
        CHECK(std::abs(ratio - std::round(ratio)) < 1e-9);
      }
    }
  }
}

TEST_CASE("slice width when the top vertex is well estimated") {
  // eps = 0.5, eps_hat = eps^2 / 4; widths measured in estimated-degree units.
  const double eps = 0.5;
  const double eps_hat = eps * eps / 4.0;
  const std::size_t delta = 2000;
  Digraph g = noisy_star(delta, 0.0005, 99);
  REQUIRE(g.max_in_degree() == delta);
  REQUIRE(g.in_degree(0) == delta);

  std::size_t checked = 0;
  std::size_t excluded = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    RandomTape tape(seed);
    SampleResult s = sample_phase(g, eps, tape);
    if (s.contains(0) || !well_estimated(s.estimated_degree(0), delta, eps_hat)) {
      ++excluded;
      continue;
    }
    ++checked;
    SliceAssignment a = slice_sample(s);
    const double width = a.width / eps; // count units -> estimated-degree units
    CHECK(width >= (1.0 - eps_hat) * eps * eps * static_cast<double>(delta));
    CHECK(width <= eps * static_cast<double>(delta));
  }
  MESSAGE("slice width: checked=" << checked << " excluded=" << excluded);
  CHECK(checked > 150);
}
