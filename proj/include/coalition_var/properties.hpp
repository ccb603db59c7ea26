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
 * \file coalition_var/properties.hpp
 *
 * \brief Randomized checks of the structural laws of the uncertainty R_i,
 *  and an empirical probe of the superadditive lower-bound ratio.
 *
 * Every trial draws from its own stream derived from (seed, trial), so a
 * report is reproducible from its seed alone. Games are unit scale (values
 * in [-1, 1]) and gaps are measured relative to max(1, |rhs|).
 */

#ifndef COALITION_VAR_PROPERTIES_HPP
#define COALITION_VAR_PROPERTIES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coalition_var/error.hpp"
#include "coalition_var/exact.hpp"
#include "coalition_var/game.hpp"
#include "coalition_var/random.hpp"
#include "coalition_var/sampling.hpp"

namespace coalition_var {

enum class Property {
  kScaling,
  kDummy,
  kSymmetry,
  kStrongSymmetry2P,
  kVarianceSumBound,
  kConvexity,
  kCorollarySum,
  kSymmetricConvexSuperadd,
  kMonotoneCovarianceLemma,
  kEfficiencyPerOrdering,
};

inline constexpr std::array<Property, 10> kAllProperties = {
    Property::kScaling,          Property::kDummy,
    Property::kSymmetry,         Property::kStrongSymmetry2P,
    Property::kVarianceSumBound, Property::kConvexity,
    Property::kCorollarySum,     Property::kSymmetricConvexSuperadd,
    Property::kMonotoneCovarianceLemma, Property::kEfficiencyPerOrdering,
};

constexpr std::string_view property_name(Property p) noexcept {
  switch (p) {
    case Property::kScaling: return "scaling";
    case Property::kDummy: return "dummy";
    case Property::kSymmetry: return "symmetry";
    case Property::kStrongSymmetry2P: return "strong-symmetry";
    case Property::kVarianceSumBound: return "variance-sum-bound";
    case Property::kConvexity: return "convexity";
    case Property::kCorollarySum: return "corollary-sum";
    case Property::kSymmetricConvexSuperadd: return "symmetric-convex-superadd";
    case Property::kMonotoneCovarianceLemma: return "monotone-covariance-lemma";
    case Property::kEfficiencyPerOrdering: return "efficiency-per-ordering";
  }
  return "unknown";
}

inline std::optional<Property> parse_property(std::string_view name) {
  for (Property p : kAllProperties) {
    if (property_name(p) == name) return p;
  }
  return std::nullopt;
}

struct Violation {
  std::string fingerprint;
  std::string witness;
  PlayerId player = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

struct PropertyReport {
  std::string property;
  std::uint64_t instances = 0;
  std::uint64_t checks = 0;
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;  // first few, with witnesses
  double max_gap = 0.0;
  double tolerance = 0.0;

  [[nodiscard]] bool passed() const noexcept { return violation_count == 0; }
};

struct SuiteOptions {
  int min_players = 2;
  int max_players = 6;
  double tolerance = 1e-9;
  std::size_t max_recorded = 10;
};

/// Profiles of every player under the Shapley weighting. Swappable so the
/// harness itself can be tested against a deliberately broken engine.
using ProfileFn = std::function<std::vector<PlayerProfile>(const Game&)>;

inline ProfileFn exact_profiles() {
  return [](const Game& g) { return all_profiles(g); };
}

/// Per-trial seed: splitmix64 of the suite seed offset by the trial index.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 sm(seed ^ (0xd1b54a32d192ed03ULL * (trial + 1)));
  return sm.next();
}

// --- random games -----------------------------------------------------------

/// Tabular game with G(empty) = 0 and other values i.i.d. uniform on [-1, 1].
inline Game random_tabular_game(int n, Xoshiro256& rng) {
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (std::size_t m = 1; m < v.size(); ++m) v[m] = rng.uniform(-1.0, 1.0);
  return make_tabular(n, std::move(v));
}

/// Superadditive game drawn constructively: singletons uniform on [-1, 1],
/// every larger coalition gets its best split plus uniform [0, 1) slack.
/// Every superadditive game has this form for some slack values.
inline Game random_superadditive_game(int n, Xoshiro256& rng) {
  std::vector<double> v(std::size_t{1} << n, 0.0);
  for (std::size_t m = 1; m < v.size(); ++m) {
    if (std::has_single_bit(m)) {
      v[m] = rng.uniform(-1.0, 1.0);
      continue;
    }
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t t = (m - 1) & m; t != 0; t = (t - 1) & m) {
      best = std::max(best, v[t] + v[m & ~t]);
    }
    v[m] = best + rng.uniform();
  }
  return make_tabular(n, std::move(v));
}

/// Size profile with g(0) = 0 and non-negative, non-decreasing integer steps.
inline std::vector<double> random_convex_profile(int n, Xoshiro256& rng) {
  std::vector<double> g(static_cast<std::size_t>(n) + 1, 0.0);
  double step = static_cast<double>(rng.below(3));
  for (std::size_t s = 0; s < static_cast<std::size_t>(n); ++s) {
    g[s + 1] = g[s] + step;
    step += static_cast<double>(rng.below(4));
  }
  return g;
}

/// Compact human-readable dump, enough to rebuild the game.
inline std::string describe_game(const Game& game) {
  std::string out;
  char buf[64];
  auto list = [&](const std::vector<double>& xs) {
    out += "[";
    for (std::size_t k = 0; k < xs.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%s%.17g", k == 0 ? "" : ",", xs[k]);
      out += buf;
    }
    out += "]";
  };
  out += "n=" + std::to_string(game.n_players()) + " ";
  if (const auto* tab = game.as<TabularForm>()) {
    out += "tabular ";
    list(tab->values);
  } else if (const auto* sym = game.as<SymmetricForm>()) {
    out += "symmetric ";
    list(sym->by_size);
  } else if (const auto* add = game.as<AdditiveForm>()) {
    out += "additive ";
    list(add->weights);
  } else if (const auto* tt = game.as<TwoTypeForm>()) {
    out += "two-type " + std::to_string(tt->n_a) + "x" + std::to_string(tt->n_b) + " ";
    list(tt->worth);
  }
  return out;
}

namespace detail {

class ReportBuilder {
 public:
  ReportBuilder(Property p, const SuiteOptions& options) : options_(options) {
    report_.property = std::string(property_name(p));
    report_.tolerance = options.tolerance;
    report_.max_gap = -std::numeric_limits<double>::infinity();
  }

  // lhs == rhs, up to tolerance relative to max(1, |rhs|).
  void equal(double lhs, double rhs, PlayerId player,
             const std::function<std::string()>& witness) {
    record(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)), lhs, rhs,
           player, witness);
  }

  // lhs <= rhs, up to tolerance relative to max(1, |rhs|).
  void at_most(double lhs, double rhs, PlayerId player,
               const std::function<std::string()>& witness) {
    record((lhs - rhs) / std::max(1.0, std::abs(rhs)), lhs, rhs, player,
           witness);
  }

  void instance() { ++report_.instances; }

  PropertyReport finish() {
    if (report_.checks == 0) report_.max_gap = 0.0;
    return std::move(report_);
  }

 private:
  void record(double gap, double lhs, double rhs, PlayerId player,
              const std::function<std::string()>& witness) {
    ++report_.checks;
    // NaN must count as a violation.
    if (!(gap <= report_.max_gap)) report_.max_gap = gap;
    if (!(gap <= options_.tolerance)) {
      ++report_.violation_count;
      if (report_.violations.size() < options_.max_recorded) {
        const std::string w = witness();
        report_.violations.push_back(
            Violation{w.substr(0, w.find('|')), w, player, lhs, rhs, gap});
      }
    }
  }

  SuiteOptions options_;
  PropertyReport report_;
};

inline std::function<std::string()> witness_of(const Game& g) {
  return [&g] { return fingerprint(g) + "|" + describe_game(g); };
}

inline std::function<std::string()> witness_of(const Game& g, const Game& h) {
  return [&g, &h] {
    return fingerprint(g) + "+" + fingerprint(h) + "|G: " + describe_game(g) +
           " H: " + describe_game(h);
  };
}

// Swaps bits i and j of a mask.
inline std::size_t swap_bits(std::size_t m, PlayerId i, PlayerId j) {
  const std::size_t bi = (m >> i) & 1U;
  const std::size_t bj = (m >> j) & 1U;
  if (bi == bj) return m;
  return m ^ ((std::size_t{1} << i) | (std::size_t{1} << j));
}

inline void check_scaling(ReportBuilder& out, const ProfileFn& profiles,
                          int n, Xoshiro256& rng) {
  const Game g = random_tabular_game(n, rng);
  const double t = rng.uniform(-10.0, 10.0);
  const Game tg = scale_game(g, t);
  const auto base = profiles(g);
  const auto scaled = profiles(tg);
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.equal(scaled[i].v, t * base[i].v, i, witness_of(g));
    out.equal(scaled[i].r, t * t * base[i].r, i, witness_of(g));
  }
}

inline void check_dummy(ReportBuilder& out, const ProfileFn& profiles, int n,
                        Xoshiro256& rng) {
  // Player n-1 adds exactly c to every coalition it joins.
  const Game base = random_tabular_game(n - 1, rng);
  const double c = rng.uniform(-1.0, 1.0);
  const auto& bv = base.as<TabularForm>()->values;
  std::vector<double> v(std::size_t{1} << n);
  const std::size_t dummy_bit = std::size_t{1} << (n - 1);
  for (std::size_t m = 0; m < v.size(); ++m) {
    v[m] = bv[m & ~dummy_bit] + ((m & dummy_bit) != 0 ? c : 0.0);
  }
  const Game g = make_tabular(n, std::move(v));
  const auto p = profiles(g);
  const auto dummy = static_cast<PlayerId>(n - 1);
  out.equal(p[dummy].r, 0.0, dummy, witness_of(g));
  out.equal(p[dummy].v, c, dummy, witness_of(g));
}

inline void check_symmetry(ReportBuilder& out, const ProfileFn& profiles,
                           int n, Xoshiro256& rng) {
  const Game raw = random_tabular_game(n, rng);
  const auto i = static_cast<PlayerId>(rng.below(static_cast<std::uint64_t>(n)));
  auto j = static_cast<PlayerId>(rng.below(static_cast<std::uint64_t>(n - 1)));
  if (j >= i) ++j;
  std::vector<double> v = raw.as<TabularForm>()->values;
  for (std::size_t m = 0; m < v.size(); ++m) {
    const std::size_t partner = swap_bits(m, i, j);
    v[m] = v[std::min(m, partner)];
  }
  const Game g = make_tabular(n, std::move(v));
  const auto p = profiles(g);
  out.equal(p[i].v, p[j].v, i, witness_of(g));
  out.equal(p[i].r, p[j].r, i, witness_of(g));
}

inline void check_strong_symmetry(ReportBuilder& out,
                                  const ProfileFn& profiles,
                                  Xoshiro256& rng) {
  const Game g = random_tabular_game(2, rng);
  const auto p = profiles(g);
  out.equal(p[0].r, p[1].r, 0, witness_of(g));
}

inline void check_variance_sum(ReportBuilder& out, const ProfileFn& profiles,
                               int n, Xoshiro256& rng) {
  const Game g = random_tabular_game(n, rng);
  const auto p = profiles(g);
  double total = 0.0;
  for (const auto& row : p) total += row.r;
  for (const auto& row : p) {
    out.at_most(row.r, (n - 1) * (total - row.r), row.player, witness_of(g));
  }
}

inline void check_convexity(ReportBuilder& out, const ProfileFn& profiles,
                            int n, Xoshiro256& rng) {
  const Game g = random_tabular_game(n, rng);
  const Game h = random_tabular_game(n, rng);
  const auto pg = profiles(g);
  const auto ph = profiles(h);
  for (int k = 0; k <= 10; ++k) {
    const double alpha = k / 10.0;
    const auto pm = profiles(mix_games(g, h, alpha));
    for (std::size_t i = 0; i < pm.size(); ++i) {
      out.at_most(pm[i].r, alpha * pg[i].r + (1.0 - alpha) * ph[i].r, i,
                  witness_of(g, h));
    }
  }
}

inline void check_corollary(ReportBuilder& out, const ProfileFn& profiles,
                            int n, Xoshiro256& rng) {
  const Game g = random_tabular_game(n, rng);
  const Game h = random_tabular_game(n, rng);
  const auto pg = profiles(g);
  const auto ph = profiles(h);
  const auto ps = profiles(add_games(g, h));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out.at_most(ps[i].r, 2.0 * (pg[i].r + ph[i].r), i, witness_of(g, h));
  }
}

inline void check_symmetric_convex(ReportBuilder& out,
                                   const ProfileFn& profiles, int n,
                                   Xoshiro256& rng) {
  const Game g = generate_symmetric(n, random_convex_profile(n, rng));
  const Game h = generate_symmetric(n, random_convex_profile(n, rng));
  const auto pg = profiles(g);
  const auto ph = profiles(h);
  const auto ps = profiles(add_games(g, h));
  // R(G+H) >= R(G) + R(H), written as an upper bound on the right side.
  out.at_most(pg[0].r + ph[0].r, ps[0].r, 0, witness_of(g, h));
  out.at_most(0.0, marginal_covariance(g, h, 0), 0, witness_of(g, h));
}

inline void check_lemma(ReportBuilder& out, Xoshiro256& rng) {
  // Two non-negative, non-decreasing functions on a random finite law.
  const auto points = static_cast<std::size_t>(2 + rng.below(9));
  std::vector<double> mass(points);
  for (double& m : mass) m = rng.uniform() + 1e-3;
  const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
  for (double& m : mass) m /= total;
  auto monotone = [&] {
    std::vector<double> f(points);
    double level = rng.below(2) == 0 ? 0.0 : rng.uniform();
    for (double& x : f) {
      // Step functions (flat runs) show up often.
      if (rng.below(3) != 0) level += rng.uniform();
      x = level;
    }
    return f;
  };
  const std::vector<double> f1 = monotone();
  const std::vector<double> f2 = monotone();
  double e1 = 0.0;
  double e2 = 0.0;
  double e12 = 0.0;
  for (std::size_t k = 0; k < points; ++k) {
    e1 += mass[k] * f1[k];
    e2 += mass[k] * f2[k];
    e12 += mass[k] * f1[k] * f2[k];
  }
  out.at_most(e1 * e2, e12, 0, [] { return std::string("lemma|"); });
}

inline void check_efficiency(ReportBuilder& out, const ProfileFn& profiles,
                             int n, Xoshiro256& rng) {
  const Game g = random_tabular_game(n, rng);
  const auto& v = g.as<TabularForm>()->values;
  const double total = v.back() - v.front();
  const Ordering order = sample_ordering(n, rng);
  out.equal(ordering_marginal_sum(g, order), total, 0, witness_of(g));
  const auto p = profiles(g);
  double sum_v = 0.0;
  for (const auto& row : p) sum_v += row.v;
  out.equal(sum_v, total, 0, witness_of(g));
}

}  // namespace detail

/// Runs `trials` random instances of one law. Player counts cycle through
/// [min_players, max_players]; the two-player law always uses 2.
inline PropertyReport run_property_suite(Property property,
                                         std::uint64_t trials,
                                         std::uint64_t seed,
                                         const SuiteOptions& options = {},
                                         const ProfileFn& profiles =
                                             exact_profiles()) {
  if (trials < 1) throw Error(ErrorKind::kInvalidArgument, "trials must be >= 1");
  if (options.min_players < 2 || options.max_players < options.min_players ||
      options.max_players > 16) {
    throw Error(ErrorKind::kInvalidArgument,
                "player range must satisfy 2 <= min <= max <= 16");
  }
  detail::ReportBuilder out(property, options);
  const auto span = static_cast<std::uint64_t>(options.max_players -
                                               options.min_players + 1);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Xoshiro256 rng(trial_seed(seed, t));
    const int n = options.min_players + static_cast<int>(t % span);
    switch (property) {
      case Property::kScaling: detail::check_scaling(out, profiles, n, rng); break;
      case Property::kDummy: detail::check_dummy(out, profiles, n, rng); break;
      case Property::kSymmetry: detail::check_symmetry(out, profiles, n, rng); break;
      case Property::kStrongSymmetry2P:
        detail::check_strong_symmetry(out, profiles, rng);
        break;
      case Property::kVarianceSumBound:
        detail::check_variance_sum(out, profiles, n, rng);
        break;
      case Property::kConvexity: detail::check_convexity(out, profiles, n, rng); break;
      case Property::kCorollarySum: detail::check_corollary(out, profiles, n, rng); break;
      case Property::kSymmetricConvexSuperadd:
        detail::check_symmetric_convex(out, profiles, n, rng);
        break;
      case Property::kMonotoneCovarianceLemma: detail::check_lemma(out, rng); break;
      case Property::kEfficiencyPerOrdering:
        detail::check_efficiency(out, profiles, n, rng);
        break;
    }
    out.instance();
  }
  return out.finish();
}

// --- conjecture probe -------------------------------------------------------

struct ConjectureWitness {
  Game g;
  Game h;
  PlayerId player = 0;
  double r_g = 0.0;
  double r_h = 0.0;
  double r_sum = 0.0;
  double ratio = 0.0;
  std::uint64_t trial = 0;
};

struct ConjectureProbeResult {
  int n = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t skipped = 0;   // player terms with a vanishing denominator
  std::uint64_t rejected = 0;  // candidates failing the superadditivity filter
  double worst_ratio = std::numeric_limits<double>::infinity();
  std::optional<ConjectureWitness> witness;
};

/// Smallest observed R_i(G+H) / (R_i(G) + R_i(H)) over random superadditive
/// pairs and all players. An empirical candidate for a lower bound, not a
/// proof of one.
inline ConjectureProbeResult conjecture_probe(int n, std::uint64_t trials,
                                              std::uint64_t seed,
                                              const ProfileFn& profiles =
                                                  exact_profiles()) {
  if (n < 2 || n > 7) {
    throw Error(ErrorKind::kOutOfRange, "conjecture probe supports 2 <= n <= 7");
  }
  if (trials < 1) throw Error(ErrorKind::kInvalidArgument, "trials must be >= 1");
  ConjectureProbeResult out;
  out.n = n;
  out.trials = trials;
  out.seed = seed;
  auto draw = [&](Xoshiro256& rng) {
    while (true) {
      Game g = random_superadditive_game(n, rng);
      if (is_superadditive(g)) return g;
      ++out.rejected;
    }
  };
  for (std::uint64_t t = 0; t < trials; ++t) {
    Xoshiro256 rng(trial_seed(seed, t));
    const Game g = draw(rng);
    const Game h = draw(rng);
    const auto pg = profiles(g);
    const auto ph = profiles(h);
    const auto ps = profiles(add_games(g, h));
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const double denom = pg[i].r + ph[i].r;
      if (denom < 1e-12) {
        ++out.skipped;
        continue;
      }
      const double ratio = ps[i].r / denom;
      if (ratio < out.worst_ratio) {
        out.worst_ratio = ratio;
        out.witness = ConjectureWitness{g, h, i, pg[i].r, ph[i].r, ps[i].r,
                                        ratio, t};
      }
    }
  }
  if (!out.witness) {
    throw Error(ErrorKind::kDegenerateDenominators,
                "every trial had R_i(G) + R_i(H) below 1e-12");
  }
  return out;
}

}  // namespace coalition_var

#endif  // COALITION_VAR_PROPERTIES_HPP
