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

#include "impsel/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace impsel {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must lie in (0, 1)");
  }
}

} // namespace

std::map<VertexId, double> SampleResult::estimated_degrees() const {
  std::map<VertexId, double> d_e;
  for (VertexId v : unsampled) {
    d_e.emplace(v, estimated_degree(v));
  }
  return d_e;
}

SampleResult sample_phase(const Digraph &g, double eps, const RandomTape &tape) {
  check_eps(eps);
  const std::size_t n = g.vertex_count();
  SampleResult s;
  s.eps = eps;
  s.in_sample.assign(n, false);
  s.sampled_in_degree.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (tape.sample_coin(v, eps)) {
      s.in_sample[v] = true;
      s.sampled.push_back(v);
    } else {
      s.unsampled.push_back(v);
    }
  }
  for (VertexId u : s.sampled) {
    for (VertexId w : g.out_neighbors(u)) {
      ++s.sampled_in_degree[w];
    }
  }
  return s;
}

EpsFraction eps_fraction(double eps) {
  check_eps(eps);
  constexpr std::int64_t kMaxDen = 1000000;
  // continued-fraction convergents of eps
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double x = eps;
  EpsFraction best{1, kMaxDen};
  for (int step = 0; step < 64; ++step) {
    const double a = std::floor(x);
    const auto ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > kMaxDen) {
      break;
    }
    best = {p2, q2};
    if (std::abs(static_cast<double>(p2) / static_cast<double>(q2) - eps) <= 1e-12 * eps) {
      break;
    }
    const double frac = x - a;
    if (frac <= 0.0) {
      break;
    }
    x = 1.0 / frac;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  if (best.num <= 0) {
    best = {1, kMaxDen};
  }
  return best;
}

std::size_t slice_count(double eps) {
  const EpsFraction e = eps_fraction(eps);
  const std::int64_t den2 = e.den * e.den;
  const std::int64_t num2 = e.num * e.num;
  return static_cast<std::size_t>((den2 + num2 - 1) / num2);
}

std::size_t band_index(double value, double width, std::size_t tau) {
  if (!(width > 0.0)) {
    return 1;
  }
  double q = std::floor(value / width);
  if (q < 0.0) {
    q = 0.0;
  }
  auto k = static_cast<std::size_t>(std::min(q, static_cast<double>(tau)));
  // Settle k against the exact products used by the band inequalities.
  while (k > 0 && static_cast<double>(k) * width > value) {
    --k;
  }
  while (k < tau && static_cast<double>(k + 1) * width <= value) {
    ++k;
  }
  return std::min(k + 1, tau);
}

std::size_t SliceAssignment::slice_of(VertexId v) const {
  for (std::size_t i = 0; i < slices.size(); ++i) {
    if (std::find(slices[i].begin(), slices[i].end(), v) != slices[i].end()) {
      return i + 1;
    }
  }
  return 0;
}

SliceAssignment slice_assign(const std::map<VertexId, double> &d_e, double eps,
                             double delta_e) {
  SliceAssignment a;
  a.tau = slice_count(eps);
  a.delta_e = delta_e;
  a.width = eps * eps * delta_e;
  a.slices.resize(a.tau);
  a.d_e = d_e;
  for (const auto &[v, value] : d_e) {
    a.slices[band_index(value, a.width, a.tau) - 1].push_back(v);
  }
  return a;
}

SliceAssignment slice_sample(const SampleResult &sample) {
  SliceAssignment a;
  a.tau = slice_count(sample.eps);
  a.slices.resize(a.tau);
  std::size_t max_count = 0;
  for (VertexId v : sample.unsampled) {
    a.d_e.emplace(v, static_cast<double>(sample.sampled_in_degree[v]));
    max_count = std::max(max_count, sample.sampled_in_degree[v]);
  }
  a.delta_e = static_cast<double>(max_count);
  a.width = sample.eps * sample.eps * a.delta_e;

  // v is in band k + 1 for the largest k with k num^2 max <= count den^2.
  const EpsFraction e = eps_fraction(sample.eps);
  __extension__ using Wide = unsigned __int128;
  const Wide step = static_cast<Wide>(e.num) * static_cast<Wide>(e.num) * max_count;
  const Wide scale = static_cast<Wide>(e.den) * static_cast<Wide>(e.den);
  for (VertexId v : sample.unsampled) {
    std::size_t band = 1;
    if (step > 0) {
      const Wide k = static_cast<Wide>(sample.sampled_in_degree[v]) * scale / step;
      band = k >= a.tau ? a.tau : static_cast<std::size_t>(k) + 1;
    }
    a.slices[band - 1].push_back(v);
  }
  return a;
}

} // namespace impsel
