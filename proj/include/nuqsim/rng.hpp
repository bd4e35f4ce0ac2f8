// Copyright 2026 The nuqsim Authors
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

#ifndef NUQSIM_RNG_HPP
#define NUQSIM_RNG_HPP

// Deterministic random number generation for sampling and noise.
//
// The standard library distributions are not bit-reproducible across
// implementations, so sampling uses a hand-rolled xoshiro256** generator
// seeded through SplitMix64. Identical seeds give identical measurement
// records on every platform and compiler.

#include <array>
#include <cstdint>

namespace nuqsim {

// SplitMix64 step; also usable as a 64-bit mixing function.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256** (Blackman/Vigna), state expanded from a 64-bit seed.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& word : state_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound >= 1, unbiased via rejection.
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

// Avalanches a (seed, stream index) pair into a fresh sub-seed, so
// numbered streams (shots, grid points) are decorrelated and independent
// of batching or evaluation order.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 sm{seed};
  SplitMix64 sm2{sm.next() ^ (stream + 0x9e3779b97f4a7c15ULL)};
  return sm2.next();
}

// Generator for one shot of a sampling run: drawing shot k alone gives
// the same stream as drawing it inside a loop over all shots.
inline Xoshiro256 rng_for_shot(std::uint64_t seed, std::uint64_t shot) {
  return Xoshiro256(derive_stream(seed, shot));
}

}  // namespace nuqsim

#endif  // NUQSIM_RNG_HPP
