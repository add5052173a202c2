// Copyright 2026 The locft developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace locft {

// Mixes seed material into one 64-bit stream seed (splitmix64 finalizer).
inline uint64_t mix_seed(uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1) + 0xbf58476d1ce4e5b9ULL * (c + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG wrapper. std distributions are not used anywhere because
// their output is implementation-defined; all derived draws go through the
// explicit bit arithmetic below so replays are bit-identical.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t word() { return gen_(); }

  // Uniform in [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  uint32_t below(uint32_t n) {
    // Rejection sampling on the top bits keeps the draw unbiased.
    uint64_t threshold = (~uint64_t{0}) - (~uint64_t{0}) % n;
    uint64_t v;
    do {
      v = gen_();
    } while (v >= threshold);
    return static_cast<uint32_t>(v % n);
  }

  // Number of failures before the next success of a Bernoulli(p) stream.
  // Returns a large sentinel when p == 0.
  uint64_t geometric_skip(double p) {
    if (p <= 0.0) return UINT64_MAX;
    if (p >= 1.0) return 0;
    double u = u01();
    // u == 0 would send log to -inf; nudge to the smallest representable draw.
    if (u <= 0.0) u = 0x1.0p-53;
    return static_cast<uint64_t>(std::log(u) / std::log1p(-p));
  }

  // 64 independent Bernoulli(p) bits packed in one word (bit i = trial i).
  uint64_t bernoulli_word(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return ~uint64_t{0};
    uint64_t w = 0;
    uint64_t i = geometric_skip(p);
    while (i < 64) {
      w |= uint64_t{1} << i;
      uint64_t j = geometric_skip(p);
      if (j >= 64 - i) break;
      i += 1 + j;
    }
    return w;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace locft
