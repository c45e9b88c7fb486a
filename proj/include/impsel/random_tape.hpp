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

#ifndef IMPSEL_RANDOM_TAPE_HPP_
#define IMPSEL_RANDOM_TAPE_HPP_

#include <cstdint>
#include <vector>

#include "impsel/digraph.hpp"
#include "impsel/random.hpp"

namespace impsel {

// Seeded randomness source for one mechanism run.
//
// Per-vertex coins are pure functions of (master seed, purpose, vertex):
// they never depend on the graph's arcs or on the order in which they are
// consulted. Running two graphs that differ only in one vertex's votes on
// the same tape therefore couples every other random choice exactly.
class RandomTape {
public:
  enum class Stream : std::uint64_t {
    permutation = 1,
    sample = 2,
    reveal = 3,
    partition = 4,
    fallback = 5,
  };

  explicit RandomTape(std::uint64_t master_seed) : seed_(master_seed) {}

  // Tape for trial `trial` of an experiment seeded with `seed`.
  static RandomTape for_trial(std::uint64_t seed, std::uint64_t trial) {
    return RandomTape(mix_seed(seed, trial));
  }

  std::uint64_t seed() const { return seed_; }

  double uniform(Stream stream, std::uint64_t key) const {
    return unit_from_bits(
        mix_seed(mix_seed(seed_, static_cast<std::uint64_t>(stream)), key));
  }

  // v joins the sample X with probability eps.
  bool sample_coin(VertexId v, double eps) const {
    return uniform(Stream::sample, v) < eps;
  }
  // v is revealed during its slice with probability 1 - eps.
  bool reveal_coin(VertexId v, double eps) const {
    return uniform(Stream::reveal, v) < 1.0 - eps;
  }
  // true places v in the candidate group V2, false in the voter group V1.
  bool partition_coin(VertexId v) const {
    return uniform(Stream::partition, v) < 0.5;
  }

  // Uniform permutation of 0..n-1 (Fisher-Yates on the permutation stream).
  std::vector<VertexId> permutation(std::size_t n) const {
    return shuffled(Stream::permutation, n);
  }

  // Uniform ordering of 0..n-1 on the fallback stream.
  std::vector<VertexId> fallback_order(std::size_t n) const {
    return shuffled(Stream::fallback, n);
  }

private:
  std::vector<VertexId> shuffled(Stream stream, std::size_t n) const {
    std::vector<VertexId> order(n);
    for (std::size_t i = 0; i < n; ++i) {
      order[i] = static_cast<VertexId>(i);
    }
    Rng rng(mix_seed(seed_, static_cast<std::uint64_t>(stream)));
    shuffle(std::span<VertexId>(order), rng);
    return order;
  }

  std::uint64_t seed_;
};

} // namespace impsel

#endif // IMPSEL_RANDOM_TAPE_HPP_
