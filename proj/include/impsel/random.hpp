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

#ifndef IMPSEL_RANDOM_HPP_
#define IMPSEL_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace impsel {

// The standard distributions are implementation-defined, so every draw that
// feeds an output goes through these helpers on top of std::mt19937_64,
// whose output sequence is fixed by the standard.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (b + 0x632be59bd9b4e019ULL));
}

// 53-bit uniform in [0, 1).
constexpr double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double unit() { return unit_from_bits(engine_()); }

  // Uniform integer in [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
      x = engine_();
    }
    return x % bound;
  }

  bool bernoulli(double p) { return unit() < p; }

private:
  std::mt19937_64 engine_;
};

// Fisher-Yates.
template <typename T> void shuffle(std::span<T> items, Rng &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(items[i - 1], items[j]);
  }
}

// Moves a uniform random k-subset of `items` into its first k slots. The
// remaining slots stay a permutation of the rest, so the buffer can be
// reused across draws without reinitialization.
template <typename T>
void partial_shuffle(std::span<T> items, std::size_t k, Rng &rng) {
  const std::size_t n = items.size();
  for (std::size_t i = 0; i < k && i < n; ++i) {
    std::size_t j = i + rng.below(n - i);
    std::swap(items[i], items[j]);
  }
}

} // namespace impsel

#endif // IMPSEL_RANDOM_HPP_
