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

#ifndef COALITION_VAR_ANALYSIS_HPP
#define COALITION_VAR_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "coalition_var/error.hpp"

namespace coalition_var {

inline constexpr double kDefaultZCritical = 1.96;

/// Weight alpha of the realized marginal in a payoff
/// pi = alpha * d + (1 - alpha) * V.
class MixtureParams {
 public:
  explicit MixtureParams(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw Error(ErrorKind::kOutOfRange, "alpha must lie in [0, 1]");
    }
  }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Var(pi) = alpha^2 R.
inline double mixture_variance(MixtureParams p, double r) {
  if (r < 0.0) throw Error(ErrorKind::kNegativeVariance, "R must be >= 0");
  return p.alpha() * p.alpha() * r;
}

/// Chebyshev bound on Pr{|pi/V - 1| >= c}: min(1, alpha^2 R / (c^2 V^2)).
inline double chebyshev_bound(MixtureParams p, double v, double r, double c) {
  if (v == 0.0) {
    throw Error(ErrorKind::kZeroValue, "relative deviation undefined at V = 0");
  }
  if (!(c > 0.0)) throw Error(ErrorKind::kOutOfRange, "c must be positive");
  if (r < 0.0) throw Error(ErrorKind::kNegativeVariance, "R must be >= 0");
  const double bound = mixture_variance(p, r) / (c * c * v * v);
  return std::min(1.0, bound);
}

/// Half-width 1.96 alpha sqrt(R) of the approximate 95% payoff band.
inline double normal_deviation_band(MixtureParams p, double r) {
  if (r < 0.0) throw Error(ErrorKind::kNegativeVariance, "R must be >= 0");
  return kDefaultZCritical * p.alpha() * std::sqrt(r);
}

struct SignificanceInput {
  std::string label;
  double v = 0.0;
  double r = 0.0;
};

struct SignificanceRow {
  std::string label;
  double v = 0.0;
  double sd = 0.0;
  double z = 0.0;
  bool significant_5pct = false;
};

/// Two-sided z = |V| / sqrt(R) against z_crit. A zero sd gives z = +inf
/// (significant) unless V is also 0, which gives z = 0.
inline std::vector<SignificanceRow> significance_table(
    const std::vector<SignificanceInput>& rows,
    double z_crit = kDefaultZCritical) {
  std::vector<SignificanceRow> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.r < 0.0 || std::isnan(row.r)) {
      throw Error(ErrorKind::kNegativeUncertainty,
                  "uncertainty for '" + row.label + "' is negative");
    }
    SignificanceRow s;
    s.label = row.label;
    s.v = row.v;
    s.sd = std::sqrt(row.r);
    if (s.sd > 0.0) {
      s.z = std::abs(row.v) / s.sd;
    } else {
      s.z = row.v != 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    s.significant_5pct = s.z > z_crit;
    out.push_back(s);
  }
  return out;
}

/// Rows whose z falls within `margin` of the threshold, where the verdict
/// hinges on the choice of test.
inline std::vector<std::string> borderline_notes(
    const std::vector<SignificanceRow>& rows,
    double z_crit = kDefaultZCritical, double margin = 0.05) {
  std::vector<std::string> notes;
  for (const auto& row : rows) {
    if (std::isfinite(row.z) && std::abs(row.z - z_crit) < margin) {
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "note: %s has z = %.3f within %.2f of the %.2f threshold; "
                    "the verdict (%s) depends on the test convention "
                    "(one- vs two-sided, payoff mixing)",
                    row.label.c_str(), row.z, margin, z_crit,
                    row.significant_5pct ? "significant" : "not significant");
      notes.emplace_back(buf);
    }
  }
  return notes;
}

}  // namespace coalition_var

#endif  // COALITION_VAR_ANALYSIS_HPP
