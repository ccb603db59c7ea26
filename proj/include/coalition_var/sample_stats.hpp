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

#ifndef COALITION_VAR_SAMPLE_STATS_HPP
#define COALITION_VAR_SAMPLE_STATS_HPP

#include <cstdint>
#include <limits>

namespace coalition_var {

/// Streaming mean and sum of squared deviations (Welford), with the
/// Chan et al. pairwise merge for combining independent streams.
class SampleStats {
 public:
  constexpr void push(double x) noexcept {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  constexpr void merge(const SampleStats& other) noexcept {
    if (other.count_ == 0) return;
    if (count_ == 0) {
      *this = other;
      return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(other.count_);
    const double total = na + nb;
    const double delta = other.mean_ - mean_;
    mean_ += delta * (nb / total);
    m2_ += other.m2_ + delta * delta * (na * nb / total);
    count_ += other.count_;
  }

  [[nodiscard]] constexpr std::uint64_t count() const noexcept { return count_; }
  [[nodiscard]] constexpr double mean() const noexcept { return mean_; }
  [[nodiscard]] constexpr double m2() const noexcept { return m2_; }

  /// Bessel-corrected; NaN below two samples.
  [[nodiscard]] constexpr double variance() const noexcept {
    if (count_ < 2) return std::numeric_limits<double>::quiet_NaN();
    const double v = m2_ / static_cast<double>(count_ - 1);
    return v < 0.0 ? 0.0 : v;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace coalition_var

#endif  // COALITION_VAR_SAMPLE_STATS_HPP
