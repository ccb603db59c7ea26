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

#ifndef COALITION_VAR_WEIGHTING_HPP
#define COALITION_VAR_WEIGHTING_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalition_var/error.hpp"

namespace coalition_var {

/// Probability that player i joins one particular coalition of size s,
/// s!(n-s-1)!/n!, by the recurrence w(0) = 1/n, w(s+1) = w(s)(s+1)/(n-s-1).
inline double shapley_weight(int s, int n) {
  if (n < 1 || s < 0 || s > n - 1) {
    throw Error(ErrorKind::kOutOfRange,
                "coalition size " + std::to_string(s) + " invalid for " +
                    std::to_string(n) + " players");
  }
  double w = 1.0 / n;
  for (int k = 0; k < s; ++k) {
    w *= static_cast<double>(k + 1) / static_cast<double>(n - k - 1);
  }
  return w;
}

/// shapley_weight(s, n) for s = 0..n-1.
inline std::vector<double> shapley_weights(int n) {
  if (n < 1) throw Error(ErrorKind::kOutOfRange, "need at least 1 player");
  std::vector<double> w(static_cast<std::size_t>(n));
  w[0] = 1.0 / n;
  for (int s = 0; s + 1 < n; ++s) {
    w[static_cast<std::size_t>(s) + 1] =
        w[static_cast<std::size_t>(s)] * static_cast<double>(s + 1) /
        static_cast<double>(n - s - 1);
  }
  return w;
}

/// 2^-(n-1): every coalition of the other players is equally likely.
inline double banzhaf_weight(int n) {
  if (n < 1) throw Error(ErrorKind::kOutOfRange, "need at least 1 player");
  return std::ldexp(1.0, -(n - 1));
}

/// Binomial(n, 1/2)-shaped pmf, built by ratio recurrence from the mode
/// and normalized, so it stays finite for large n.
inline std::vector<double> binomial_half_pmf(int n) {
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  const int mode = n / 2;
  p[static_cast<std::size_t>(mode)] = 1.0;
  for (int k = mode; k < n; ++k) {
    p[static_cast<std::size_t>(k) + 1] = p[static_cast<std::size_t>(k)] *
                                         static_cast<double>(n - k) /
                                         static_cast<double>(k + 1);
  }
  for (int k = mode; k > 0; --k) {
    p[static_cast<std::size_t>(k) - 1] = p[static_cast<std::size_t>(k)] *
                                         static_cast<double>(k) /
                                         static_cast<double>(n - k + 1);
  }
  double total = 0.0;
  for (double x : p) total += x;
  for (double& x : p) x /= total;
  return p;
}

inline double binomial_coefficient(int n, int k) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                             std::lgamma(n - k + 1.0)));
}

enum class WeightingKind { kShapley, kBanzhaf, kCustom };

/// Distribution over the coalitions a player may join. All supported
/// weightings depend on coalition size only.
class Weighting {
 public:
  static Weighting shapley() { return Weighting(WeightingKind::kShapley, {}); }
  static Weighting banzhaf() { return Weighting(WeightingKind::kBanzhaf, {}); }

  /// per_coalition[s] is the probability of each single coalition of size
  /// s, for a game of per_coalition.size() players.
  static Weighting custom(std::vector<double> per_coalition,
                          double tolerance = 1e-9) {
    const int n = static_cast<int>(per_coalition.size());
    if (n < 1) {
      throw Error(ErrorKind::kInvalidWeighting, "custom weighting is empty");
    }
    double total = 0.0;
    for (int s = 0; s < n; ++s) {
      const double p = per_coalition[static_cast<std::size_t>(s)];
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw Error(ErrorKind::kInvalidWeighting,
                    "weight for size " + std::to_string(s) + " is negative");
      }
      total += binomial_coefficient(n - 1, s) * p;
    }
    if (std::abs(total - 1.0) > tolerance) {
      throw Error(ErrorKind::kInvalidWeighting,
                  "weights sum to " + std::to_string(total) + ", not 1");
    }
    return Weighting(WeightingKind::kCustom, std::move(per_coalition));
  }

  [[nodiscard]] WeightingKind kind() const noexcept { return kind_; }

  [[nodiscard]] std::string_view name() const noexcept {
    switch (kind_) {
      case WeightingKind::kShapley: return "shapley";
      case WeightingKind::kBanzhaf: return "banzhaf";
      case WeightingKind::kCustom: return "custom";
    }
    return "custom";
  }

  /// Probability of each coalition of size s = 0..n-1.
  [[nodiscard]] std::vector<double> per_coalition(int n) const {
    switch (kind_) {
      case WeightingKind::kShapley:
        return shapley_weights(n);
      case WeightingKind::kBanzhaf:
        return std::vector<double>(static_cast<std::size_t>(n),
                                   banzhaf_weight(n));
      case WeightingKind::kCustom:
        check_size(n);
        return custom_;
    }
    return {};
  }

  /// Law of the joined coalition's size: C(n-1, s) * per_coalition[s].
  [[nodiscard]] std::vector<double> size_law(int n) const {
    if (n < 1) throw Error(ErrorKind::kOutOfRange, "need at least 1 player");
    switch (kind_) {
      case WeightingKind::kShapley:
        return std::vector<double>(static_cast<std::size_t>(n), 1.0 / n);
      case WeightingKind::kBanzhaf:
        return binomial_half_pmf(n - 1);
      case WeightingKind::kCustom: {
        check_size(n);
        std::vector<double> q(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s) {
          q[static_cast<std::size_t>(s)] =
              binomial_coefficient(n - 1, s) * custom_[static_cast<std::size_t>(s)];
        }
        return q;
      }
    }
    return {};
  }

  /// Shapley puts equal mass on every coalition size.
  [[nodiscard]] bool uniform_over_sizes() const noexcept {
    return kind_ == WeightingKind::kShapley;
  }

 private:
  Weighting(WeightingKind kind, std::vector<double> custom)
      : kind_(kind), custom_(std::move(custom)) {}

  void check_size(int n) const {
    if (static_cast<std::size_t>(n) != custom_.size()) {
      throw Error(ErrorKind::kPlayerCountMismatch,
                  "custom weighting built for " +
                      std::to_string(custom_.size()) + " players, game has " +
                      std::to_string(n));
    }
  }

  WeightingKind kind_;
  std::vector<double> custom_;
};

}  // namespace coalition_var

#endif  // COALITION_VAR_WEIGHTING_HPP
