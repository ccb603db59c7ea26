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
 * \file coalition_var/sweep.hpp
 *
 * \brief Exact (V, R) of large structured games across a range of sizes,
 *  next to the scaling each family is expected to follow.
 *
 * Majority games are reported as R/N (reference 1). Production and market
 * economies with worth sqrt(a * b) are reported as R N / ln N, against
 * 1/(16 (1-k)^3) for workers and 1/(16 k^3) for capitalists and apple
 * traders. Convergence to these constants is slow, so the sweep reports a
 * trend diagnostic rather than asserting a limit.
 */

#ifndef COALITION_VAR_SWEEP_HPP
#define COALITION_VAR_SWEEP_HPP

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coalition_var/error.hpp"
#include "coalition_var/exact.hpp"
#include "coalition_var/game.hpp"

namespace coalition_var {

enum class SweepFamily {
  kMajority,
  kProductionWorker,
  kProductionCapitalist,
  kMarketTrader,
};

constexpr std::string_view sweep_family_name(SweepFamily f) noexcept {
  switch (f) {
    case SweepFamily::kMajority: return "majority";
    case SweepFamily::kProductionWorker: return "production-worker";
    case SweepFamily::kProductionCapitalist: return "production-capitalist";
    case SweepFamily::kMarketTrader: return "market-trader";
  }
  return "unknown";
}

inline std::optional<SweepFamily> parse_sweep_family(std::string_view name) {
  for (SweepFamily f :
       {SweepFamily::kMajority, SweepFamily::kProductionWorker,
        SweepFamily::kProductionCapitalist, SweepFamily::kMarketTrader}) {
    if (sweep_family_name(f) == name) return f;
  }
  return std::nullopt;
}

/// Utility sqrt(apples * bread) of a pooled endowment; with one unit per
/// trader this is the worth of a coalition of traders.
inline double market_worth(int apple_traders, int bread_traders) {
  const double apples = apple_traders;
  const double bread = bread_traders;
  return std::sqrt(apples * bread);
}

/// Production economy: k*N capitalists (type A) and the rest workers.
inline Game production_economy(int n_capitalists, int n_workers) {
  return generate_two_type(n_capitalists, n_workers, sqrt_product_worth);
}

/// Exchange economy: k*N apple traders (type A) and the rest bread traders.
inline Game market_economy(int n_apple, int n_bread) {
  return generate_two_type(n_apple, n_bread, market_worth);
}

struct SweepRow {
  int n = 0;
  int n_a = 0;
  int n_b = 0;
  double k_actual = 0.0;
  double v = 0.0;
  double r = 0.0;
  double scaled = 0.0;
};

struct TrendDiagnostic {
  bool monotone = false;     // scaled column moves in one direction
  bool approaching = false;  // |scaled - reference| never grows
  double final_relative_gap = 0.0;
  bool within_tolerance = false;

  [[nodiscard]] bool passed() const noexcept {
    return approaching && within_tolerance;
  }
};

struct SweepResult {
  SweepFamily family = SweepFamily::kMajority;
  double k = 0.0;
  double reference = 0.0;
  std::string scaled_label;
  std::vector<SweepRow> rows;
  TrendDiagnostic trend;
};

/// Reference constant for the scaled column.
inline double sweep_reference(SweepFamily family, double k) {
  switch (family) {
    case SweepFamily::kMajority:
      return 1.0;
    case SweepFamily::kProductionWorker:
      return 1.0 / (16.0 * std::pow(1.0 - k, 3));
    case SweepFamily::kProductionCapitalist:
    case SweepFamily::kMarketTrader:
      return 1.0 / (16.0 * std::pow(k, 3));
  }
  return 0.0;
}

inline TrendDiagnostic trend_of(const std::vector<SweepRow>& rows,
                                double reference, double tolerance) {
  TrendDiagnostic t;
  if (rows.empty()) return t;
  bool up = true;
  bool down = true;
  t.approaching = true;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const double prev = rows[k - 1].scaled;
    const double cur = rows[k].scaled;
    up = up && cur >= prev;
    down = down && cur <= prev;
    const double slack = 1e-12 * std::max(1.0, std::abs(reference));
    if (std::abs(cur - reference) > std::abs(prev - reference) + slack) {
      t.approaching = false;
    }
  }
  t.monotone = up || down;
  t.final_relative_gap =
      std::abs(rows.back().scaled - reference) / std::abs(reference);
  t.within_tolerance = t.final_relative_gap <= tolerance;
  return t;
}

/// Exact rows for each size via the closed-form fast paths. For the economy
/// families the type-A count is round(k N); the realized k is recorded.
inline SweepResult asymptotic_sweep(SweepFamily family, double k,
                                    const std::vector<int>& sizes,
                                    double tolerance = 0.25) {
  if (sizes.empty()) throw Error(ErrorKind::kEmptyInput, "no sizes to sweep");
  const bool majority = family == SweepFamily::kMajority;
  if (!majority && !(k > 0.0 && k < 1.0)) {
    throw Error(ErrorKind::kOutOfRange, "k must lie in (0, 1)");
  }
  SweepResult out;
  out.family = family;
  out.k = k;
  out.reference = sweep_reference(family, k);
  out.scaled_label = majority ? "R/N" : "R*N/lnN";
  for (int n : sizes) {
    SweepRow row;
    row.n = n;
    if (majority) {
      if (n < 1) {
        throw Error(ErrorKind::kSizeNotRepresentable,
                    "majority game needs N >= 1, got " + std::to_string(n));
      }
      const Game g = generate_majority(n);
      const PlayerProfile p = profile(g, 0);
      row.n_a = n;
      row.k_actual = 1.0;
      row.v = p.v;
      row.r = p.r;
      row.scaled = p.r / n;
    } else {
      const int n_a = static_cast<int>(std::lround(k * n));
      const int n_b = n - n_a;
      if (n < 2 || n_a < 1 || n_b < 1) {
        throw Error(ErrorKind::kSizeNotRepresentable,
                    "N = " + std::to_string(n) + " with k = " +
                        std::to_string(k) + " leaves a type empty");
      }
      const Game g = family == SweepFamily::kMarketTrader
                         ? market_economy(n_a, n_b)
                         : production_economy(n_a, n_b);
      const TypeTag type = family == SweepFamily::kProductionWorker
                               ? TypeTag::kB
                               : TypeTag::kA;
      const PlayerProfile p =
          two_type_profile(*g.as<TwoTypeForm>(), type);
      row.n_a = n_a;
      row.n_b = n_b;
      row.k_actual = static_cast<double>(n_a) / n;
      row.v = p.v;
      row.r = p.r;
      row.scaled = p.r * n / std::log(static_cast<double>(n));
    }
    out.rows.push_back(row);
  }
  out.trend = trend_of(out.rows, out.reference, tolerance);
  return out;
}

}  // namespace coalition_var

#endif  // COALITION_VAR_SWEEP_HPP
