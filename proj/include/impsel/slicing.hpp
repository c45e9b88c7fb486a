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

#ifndef IMPSEL_SLICING_HPP_
#define IMPSEL_SLICING_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "impsel/digraph.hpp"
#include "impsel/random_tape.hpp"

namespace impsel {

// Outcome of the sampling phase: the sample X (each vertex independently
// with probability eps) and, for every vertex, how many of its in-neighbors
// landed in X.
struct SampleResult {
  double eps = 0.0;
  std::vector<bool> in_sample;
  std::vector<VertexId> sampled;
  std::vector<VertexId> unsampled;
  std::vector<std::size_t> sampled_in_degree; // d^-_X(v), every v

  bool contains(VertexId v) const { return in_sample[v]; }

  // d_e(v) = d^-_X(v) / eps for v outside X.
  double estimated_degree(VertexId v) const {
    return static_cast<double>(sampled_in_degree[v]) / eps;
  }

  // d_e over V \ X; sampled vertices have no entry.
  std::map<VertexId, double> estimated_degrees() const;
};

SampleResult sample_phase(const Digraph &g, double eps, const RandomTape &tape);

// eps as num / den: the simplest fraction within 1e-12 relative error
// (den <= 10^6). 0.1 becomes exactly 1/10.
struct EpsFraction {
  std::int64_t num = 1;
  std::int64_t den = 1;
};
EpsFraction eps_fraction(double eps);

// ceil(1 / eps^2), computed on eps_fraction(eps).
std::size_t slice_count(double eps);

// Partition of V \ X into tau estimated-degree bands of width
// eps^2 * delta_e. Band i (1-based) holds [(i-1) w, i w); the top band is
// closed above. With delta_e == 0 everything lands in band 1.
struct SliceAssignment {
  std::size_t tau = 0;
  double delta_e = 0.0;
  double width = 0.0;
  std::vector<std::vector<VertexId>> slices; // slices[i - 1] is band i
  std::map<VertexId, double> d_e;

  const std::vector<VertexId> &slice(std::size_t i) const { return slices.at(i - 1); }

  // 1-based band of v; 0 if v was not assigned.
  std::size_t slice_of(VertexId v) const;
};

// 1-based band for `value` given band width `width`; clamps into [1, tau].
std::size_t band_index(double value, double width, std::size_t tau);

// Throws std::invalid_argument if eps is outside (0, 1).
SliceAssignment slice_assign(const std::map<VertexId, double> &d_e, double eps,
                             double delta_e);

// Slices the unsampled vertices of a sampling phase. Banding runs on the
// integer counts d^-_X(v): the common 1/eps factor cancels and the band
// thresholds (i-1) eps^2 max d^-_X are compared in integer arithmetic.
SliceAssignment slice_sample(const SampleResult &sample);

} // namespace impsel

#endif // IMPSEL_SLICING_HPP_
