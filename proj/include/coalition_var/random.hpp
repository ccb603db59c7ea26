/*
 * Copyright 2026 The coalition-var Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * \file coalition_var/random.hpp
 *
 * \brief Reproducible random streams.
 *
 * xoshiro256** (Blackman and Vigna) seeded through splitmix64. Independent
 * streams come from the generator's jump function, which advances the state
 * by 2^128 draws; stream k of a seed is the base state jumped k times.
 * Bounded integers use Lemire's multiply-and-reject method so results are
 * identical across standard libraries (unlike std::uniform_int_distribution).
 */

#ifndef COALITION_VAR_RANDOM_HPP
#define COALITION_VAR_RANDOM_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <limits>

namespace coalition_var {

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
  }

  /// The k-th independent stream of `seed`.
  static constexpr Xoshiro256 stream(std::uint64_t seed,
                                     std::uint64_t k) noexcept {
    Xoshiro256 rng(seed);
    for (std::uint64_t j = 0; j < k; ++j) rng.jump();
    return rng;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
  }

  /// Equivalent to 2^128 calls of operator().
  constexpr void jump() noexcept {
    constexpr std::array<std::uint64_t, 4> kJump = {
        0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL,
        0x39abdc4529b1661cULL};
    std::array<std::uint64_t, 4> acc{};
    for (std::uint64_t word : kJump) {
      for (int b = 0; b < 64; ++b) {
        if ((word >> b) & 1U) {
          for (std::size_t k = 0; k < 4; ++k) acc[k] ^= s_[k];
        }
        (*this)();
      }
    }
    s_ = acc;
  }

  /// Uniform integer in [0, bound), bound >= 1.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    __extension__ using u128 = unsigned __int128;
    u128 product = static_cast<u128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<u128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  constexpr double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  friend constexpr bool operator==(const Xoshiro256&,
                                   const Xoshiro256&) noexcept = default;

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace coalition_var

#endif  // COALITION_VAR_RANDOM_HPP
