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
 * \file coalition_var/exact.hpp
 *
 * \brief Exact value and uncertainty of probabilistic values.
 *
 * For player i the joined coalition S is random with a size-dependent law
 * (Shapley, Banzhaf or custom). The value is V_i = E[d_i(S)] and the
 * uncertainty is R_i = Var[d_i(S)], with d_i(S) = G(S + i) - G(S).
 *
 * Tabular games are enumerated subset by subset. Symmetric games reduce to
 * a distribution over coalition size, O(n). Two-type games reduce to size
 * plus a hypergeometric count of type-A members, O(n^2). The permutation
 * oracle walks all n! orderings and shares no code with the weighted paths.
 */

#ifndef COALITION_VAR_EXACT_HPP
#define COALITION_VAR_EXACT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "coalition_var/coalition.hpp"
#include "coalition_var/error.hpp"
#include "coalition_var/game.hpp"
#include "coalition_var/weighting.hpp"

namespace coalition_var {

inline constexpr int kDefaultExactLimit = 25;
inline constexpr int kOracleLimit = 10;

/// Exact-enumeration cutoff, overridable with COALITION_VAR_EXACT_LIMIT.
inline int exact_limit_from_environment() {
  const char* raw = std::getenv("COALITION_VAR_EXACT_LIMIT");
  if (raw == nullptr || *raw == '\0') return kDefaultExactLimit;
  char* end = nullptr;
  const long parsed = std::strtol(raw, &end, 10);
  if (*end != '\0' || parsed < 1 || parsed > Coalition::kMaxPlayers) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("COALITION_VAR_EXACT_LIMIT must be an integer in "
                            "[1, 62], got '") + raw + "'");
  }
  return static_cast<int>(parsed);
}

struct ExactOptions {
  int max_players = kDefaultExactLimit;
};

struct PlayerProfile {
  PlayerId player = 0;
  double v = 0.0;   // expected marginal contribution
  double r = 0.0;   // variance of the marginal contribution
  double sd = 0.0;  // sqrt(r)
};

/// Neumaier-compensated running sum.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  [[nodiscard]] double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

namespace detail {

// Turns E[d - K] and E[(d - K)^2] into (V, R). Tiny negative variances from
// cancellation clamp to 0; anything below the floor is an error.
inline PlayerProfile finish_profile(PlayerId player, double shift,
                                    double centered_mean,
                                    double centered_second) {
  PlayerProfile out;
  out.player = player;
  out.v = shift + centered_mean;
  double r = centered_second - centered_mean * centered_mean;
  if (r < 0.0) {
    if (r > -1e-9 * std::max(1.0, out.v * out.v)) {
      r = 0.0;
    } else {
      throw Error(ErrorKind::kNumericalInstability,
                  "negative variance " + std::to_string(r) + " for player " +
                      std::to_string(player));
    }
  }
  out.r = r;
  out.sd = std::sqrt(r);
  return out;
}

// Per-size compensated sums of d - K and (d - K)^2.
struct SizeBuckets {
  explicit SizeBuckets(std::size_t sizes) : first(sizes), second(sizes) {}

  void add(std::size_t size, double centered) {
    first[size].add(centered);
    second[size].add(centered * centered);
  }

  // Combine with per-coalition weights p(s).
  [[nodiscard]] std::pair<double, double> weighted(
      const std::vector<double>& per_coalition) const {
    KahanSum m1;
    KahanSum m2;
    for (std::size_t s = 0; s < first.size(); ++s) {
      m1.add(per_coalition[s] * first[s].value());
      m2.add(per_coalition[s] * second[s].value());
    }
    return {m1.value(), m2.value()};
  }

  std::vector<KahanSum> first;
  std::vector<KahanSum> second;
};

inline void require_enumerable(const Game& game, const ExactOptions& options) {
  const int limit = std::min(options.max_players, Coalition::kMaxPlayers);
  if (game.n_players() > limit) {
    throw Error(ErrorKind::kGameTooLargeForExact,
                std::to_string(game.n_players()) +
                    " players exceeds the exact limit of " +
                    std::to_string(limit) + "; use Monte Carlo sampling");
  }
}

// Moments of a size-indexed marginal d(s) under the size law q.
inline PlayerProfile profile_over_sizes(PlayerId player,
                                        const std::vector<double>& d,
                                        const Weighting& weighting) {
  const int n = static_cast<int>(d.size());
  const double shift = d[0];
  if (weighting.uniform_over_sizes()) {
    // Sum first and divide once: integer-valued steps stay exact.
    KahanSum m1;
    KahanSum m2;
    for (double x : d) {
      m1.add(x - shift);
      m2.add((x - shift) * (x - shift));
    }
    return finish_profile(player, shift, m1.value() / n, m2.value() / n);
  }
  const std::vector<double> q = weighting.size_law(n);
  KahanSum m1;
  KahanSum m2;
  for (std::size_t s = 0; s < d.size(); ++s) {
    m1.add(q[s] * (d[s] - shift));
    m2.add(q[s] * (d[s] - shift) * (d[s] - shift));
  }
  return finish_profile(player, shift, m1.value(), m2.value());
}

}  // namespace detail

/// P(A = a) for a = lo..hi, where A counts successes when drawing `draws`
/// of `population` items containing `successes` successes without
/// replacement. Built by ratio recurrence outward from the mode and
/// normalized, so no binomial coefficient is ever formed.
struct HypergeometricPmf {
  int lo = 0;
  int hi = 0;
  std::vector<double> p;
};

inline HypergeometricPmf hypergeometric_pmf(int population, int successes,
                                            int draws) {
  if (population < 0 || successes < 0 || successes > population ||
      draws < 0 || draws > population) {
    throw Error(ErrorKind::kOutOfRange, "invalid hypergeometric parameters");
  }
  const int failures = population - successes;
  HypergeometricPmf out;
  out.lo = std::max(0, draws - failures);
  out.hi = std::min(draws, successes);
  const auto width = static_cast<std::size_t>(out.hi - out.lo + 1);
  out.p.assign(width, 0.0);

  // P(a+1)/P(a) = (K-a)(s-a) / ((a+1)(N-K-s+a+1))
  auto ratio_up = [&](int a) {
    return (static_cast<double>(successes - a) * static_cast<double>(draws - a)) /
           (static_cast<double>(a + 1) *
            static_cast<double>(failures - draws + a + 1));
  };
  const double mode_real = (static_cast<double>(draws) + 1.0) *
                           (static_cast<double>(successes) + 1.0) /
                           (static_cast<double>(population) + 2.0);
  const int mode = std::clamp(static_cast<int>(std::floor(mode_real)),
                              out.lo, out.hi);
  auto at = [&](int a) -> double& {
    return out.p[static_cast<std::size_t>(a - out.lo)];
  };
  at(mode) = 1.0;
  for (int a = mode; a < out.hi; ++a) at(a + 1) = at(a) * ratio_up(a);
  for (int a = mode; a > out.lo; --a) at(a - 1) = at(a) / ratio_up(a - 1);
  KahanSum total;
  for (double x : out.p) total.add(x);
  const double norm = total.value();
  for (double& x : out.p) x /= norm;
  return out;
}

/// Weighted subset enumeration for one player, whatever the game's form.
inline PlayerProfile enumerated_profile(const Game& game, PlayerId i,
                                        const Weighting& weighting =
                                            Weighting::shapley(),
                                        const ExactOptions& options = {}) {
  game.check_player(i);
  detail::require_enumerable(game, options);
  const int n = game.n_players();
  const std::vector<double> per_coalition = weighting.per_coalition(n);
  const Coalition::mask_type count = Coalition::mask_type{1} << (n - 1);
  const Coalition::mask_type bit = Coalition::mask_type{1} << i;
  detail::SizeBuckets buckets(static_cast<std::size_t>(n));

  if (const auto* tab = game.as<TabularForm>()) {
    const auto& v = tab->values;
    const double shift = v[bit] - v[0];
    for (Coalition::mask_type r = 0; r < count; ++r) {
      const Coalition::mask_type s = insert_zero_bit(r, i);
      const double d = v[s | bit] - v[s];
      buckets.add(static_cast<std::size_t>(std::popcount(r)), d - shift);
    }
    const auto [m1, m2] = buckets.weighted(per_coalition);
    return detail::finish_profile(i, shift, m1, m2);
  }
  const double shift = game.marginal(i, Coalition{});
  for (Coalition::mask_type r = 0; r < count; ++r) {
    const Coalition s = Coalition::from_mask(insert_zero_bit(r, i));
    buckets.add(static_cast<std::size_t>(std::popcount(r)),
                game.marginal(i, s) - shift);
  }
  const auto [m1, m2] = buckets.weighted(per_coalition);
  return detail::finish_profile(i, shift, m1, m2);
}

/// O(n) profile of a symmetric game with size profile g (n+1 entries).
/// The joined coalition's size alone determines the marginal g(s+1)-g(s).
inline PlayerProfile symmetric_profile(int n, std::span<const double> g,
                                       const Weighting& weighting =
                                           Weighting::shapley(),
                                       PlayerId player = 0) {
  if (n < 1 || g.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorKind::kLengthMismatch,
                "symmetric profile needs n+1 size values");
  }
  std::vector<double> step(static_cast<std::size_t>(n));
  for (std::size_t s = 0; s < step.size(); ++s) step[s] = g[s + 1] - g[s];
  return detail::profile_over_sizes(player, step, weighting);
}

/// O(n^2) profile of a player of type `type` in a two-type game. Given the
/// joined coalition's size s, its type-A count is hypergeometric over the
/// other n-1 players.
inline PlayerProfile two_type_profile(const TwoTypeForm& form, TypeTag type,
                                      const Weighting& weighting =
                                          Weighting::shapley(),
                                      PlayerId player = 0) {
  const int n = form.n_a + form.n_b;
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "empty two-type game");
  const bool is_a = type == TypeTag::kA;
  if ((is_a && form.n_a == 0) || (!is_a && form.n_b == 0)) {
    throw Error(ErrorKind::kOutOfRange, "no player of the requested type");
  }
  const int other_a = form.n_a - (is_a ? 1 : 0);
  const int delta_a = is_a ? 1 : 0;
  const int delta_b = is_a ? 0 : 1;
  auto marginal = [&](int a, int b) {
    return form.at(a + delta_a, b + delta_b) - form.at(a, b);
  };

  const double shift = marginal(0, 0);
  const bool uniform = weighting.uniform_over_sizes();
  const std::vector<double> q = uniform ? std::vector<double>{}
                                        : weighting.size_law(n);
  KahanSum m1;
  KahanSum m2;
  for (int s = 0; s < n; ++s) {
    const HypergeometricPmf law = hypergeometric_pmf(n - 1, other_a, s);
    KahanSum c1;
    KahanSum c2;
    for (int a = law.lo; a <= law.hi; ++a) {
      const double p = law.p[static_cast<std::size_t>(a - law.lo)];
      const double d = marginal(a, s - a) - shift;
      c1.add(p * d);
      c2.add(p * d * d);
    }
    const double w = uniform ? 1.0 : q[static_cast<std::size_t>(s)];
    m1.add(w * c1.value());
    m2.add(w * c2.value());
  }
  const double scale = uniform ? 1.0 / n : 1.0;
  return detail::finish_profile(player, shift, m1.value() * scale,
                                m2.value() * scale);
}

inline PlayerProfile two_type_profile(
    int n_a, int n_b, const std::vector<std::vector<double>>& worth,
    TypeTag type, const Weighting& weighting = Weighting::shapley()) {
  const Game game = generate_two_type(n_a, n_b, worth);
  return two_type_profile(*game.as<TwoTypeForm>(), type, weighting);
}

/// V_i and R_i, routed to the cheapest exact path for the game's form.
inline PlayerProfile profile(const Game& game, PlayerId i,
                             const Weighting& weighting = Weighting::shapley(),
                             const ExactOptions& options = {}) {
  game.check_player(i);
  if (const auto* add = game.as<AdditiveForm>()) {
    return PlayerProfile{i, add->weights[i], 0.0, 0.0};
  }
  if (const auto* sym = game.as<SymmetricForm>()) {
    return symmetric_profile(game.n_players(), sym->by_size, weighting, i);
  }
  if (const auto* tt = game.as<TwoTypeForm>()) {
    return two_type_profile(*tt, tt->tags[i], weighting, i);
  }
  return enumerated_profile(game, i, weighting, options);
}

/// Profiles of every player. Tabular games are handled in one pass over all
/// 2^n coalitions, crediting each absent player's marginal.
inline std::vector<PlayerProfile> all_profiles(
    const Game& game, const Weighting& weighting = Weighting::shapley(),
    const ExactOptions& options = {}) {
  const int n = game.n_players();
  const auto players = static_cast<std::size_t>(n);
  std::vector<PlayerProfile> out;
  out.reserve(players);

  if (game.as<SymmetricForm>() != nullptr) {
    PlayerProfile shared = profile(game, 0, weighting, options);
    for (PlayerId p = 0; p < players; ++p) {
      shared.player = p;
      out.push_back(shared);
    }
    return out;
  }
  if (const auto* tt = game.as<TwoTypeForm>()) {
    PlayerProfile by_type[2];
    bool have[2] = {false, false};
    for (PlayerId p = 0; p < players; ++p) {
      const auto t = static_cast<std::size_t>(tt->tags[p]);
      if (!have[t]) {
        by_type[t] = two_type_profile(*tt, tt->tags[p], weighting, p);
        have[t] = true;
      }
      PlayerProfile row = by_type[t];
      row.player = p;
      out.push_back(row);
    }
    return out;
  }
  const auto* tab = game.as<TabularForm>();
  if (tab == nullptr) {
    for (PlayerId p = 0; p < players; ++p) {
      out.push_back(profile(game, p, weighting, options));
    }
    return out;
  }

  detail::require_enumerable(game, options);
  const auto& v = tab->values;
  const std::vector<double> per_coalition = weighting.per_coalition(n);
  std::vector<double> shift(players);
  for (std::size_t p = 0; p < players; ++p) {
    shift[p] = v[Coalition::mask_type{1} << p] - v[0];
  }
  std::vector<detail::SizeBuckets> buckets(players,
                                           detail::SizeBuckets(players));
  const Coalition::mask_type count = Coalition::mask_type{1} << n;
  for (Coalition::mask_type s = 0; s + 1 < count; ++s) {
    const double base = v[s];
    const auto size = static_cast<std::size_t>(std::popcount(s));
    for (Coalition::mask_type free = ~s & (count - 1); free != 0;
         free &= free - 1) {
      const auto p = static_cast<std::size_t>(std::countr_zero(free));
      const double d = v[s | (Coalition::mask_type{1} << p)] - base;
      buckets[p].add(size, d - shift[p]);
    }
  }
  for (std::size_t p = 0; p < players; ++p) {
    const auto [m1, m2] = buckets[p].weighted(per_coalition);
    out.push_back(detail::finish_profile(p, shift[p], m1, m2));
  }
  return out;
}

/// Mean uncertainty over players, (1/N) sum R_i.
inline double average_uncertainty(std::span<const PlayerProfile> profiles) {
  if (profiles.empty()) {
    throw Error(ErrorKind::kEmptyInput, "no profiles to average");
  }
  KahanSum total;
  for (const auto& p : profiles) total.add(p.r);
  return total.value() / static_cast<double>(profiles.size());
}

/// A permutation of the players; position k holds the k-th arrival.
class Ordering {
 public:
  explicit Ordering(std::vector<PlayerId> perm) : perm_(std::move(perm)) {
    std::vector<bool> seen(perm_.size(), false);
    for (PlayerId p : perm_) {
      if (p >= perm_.size() || seen[p]) {
        throw Error(ErrorKind::kInvalidOrdering,
                    "ordering is not a permutation of 0..n-1");
      }
      seen[p] = true;
    }
  }

  static Ordering identity(int n) {
    std::vector<PlayerId> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), PlayerId{0});
    return Ordering(std::move(perm));
  }

  [[nodiscard]] std::size_t size() const noexcept { return perm_.size(); }
  [[nodiscard]] std::span<const PlayerId> players() const noexcept {
    return perm_;
  }
  [[nodiscard]] PlayerId operator[](std::size_t k) const { return perm_[k]; }

  /// Players arriving before p.
  [[nodiscard]] std::span<const PlayerId> predecessors(PlayerId p) const {
    const auto it = std::find(perm_.begin(), perm_.end(), p);
    if (it == perm_.end()) {
      throw Error(ErrorKind::kOutOfRange, "player not in ordering");
    }
    return {perm_.data(), static_cast<std::size_t>(it - perm_.begin())};
  }

  friend bool operator==(const Ordering&, const Ordering&) = default;

 private:
  std::vector<PlayerId> perm_;
};

/// Sum over players of each one's marginal to its predecessors; telescopes
/// to G(A) - G(empty) for every ordering.
inline double ordering_marginal_sum(const Game& game, const Ordering& order) {
  if (order.size() != static_cast<std::size_t>(game.n_players())) {
    throw Error(ErrorKind::kPlayerCountMismatch,
                "ordering length differs from player count");
  }
  GrowingCoalition prefix(game);
  KahanSum total;
  for (PlayerId p : order.players()) {
    total.add(prefix.marginal(p));
    prefix.add(p);
  }
  return total.value();
}

/// Brute force over all n! equally likely orderings: mean and variance of
/// player i's marginal to its predecessor set.
inline PlayerProfile permutation_oracle(const Game& game, PlayerId i,
                                        int max_players = kOracleLimit) {
  game.check_player(i);
  const int n = game.n_players();
  if (n > max_players) {
    throw Error(ErrorKind::kTooManyPlayersForOracle,
                std::to_string(n) + "! orderings is too many (limit " +
                    std::to_string(max_players) + " players)");
  }
  std::vector<PlayerId> perm(static_cast<std::size_t>(n));
  auto marginal_of_current = [&]() {
    Coalition before;
    for (PlayerId p : perm) {
      if (p == i) break;
      before = before.with(p);
    }
    return game.marginal(i, before);
  };

  double orderings = 0.0;
  KahanSum sum;
  std::iota(perm.begin(), perm.end(), PlayerId{0});
  do {
    sum.add(marginal_of_current());
    orderings += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  const double mean = sum.value() / orderings;

  KahanSum squares;
  std::iota(perm.begin(), perm.end(), PlayerId{0});
  do {
    const double dev = marginal_of_current() - mean;
    squares.add(dev * dev);
  } while (std::next_permutation(perm.begin(), perm.end()));
  const double var = squares.value() / orderings;
  return PlayerProfile{i, mean, var, std::sqrt(var)};
}

/// Cov(d_i G(S), d_i H(S)) with S drawn from the weighting.
inline double marginal_covariance(const Game& g, const Game& h, PlayerId i,
                                  const Weighting& weighting =
                                      Weighting::shapley(),
                                  const ExactOptions& options = {}) {
  if (g.n_players() != h.n_players()) {
    throw Error(ErrorKind::kPlayerCountMismatch,
                "covariance needs games of equal size");
  }
  g.check_player(i);
  const int n = g.n_players();
  const auto sizes = static_cast<std::size_t>(n);
  std::vector<KahanSum> sx(sizes);
  std::vector<KahanSum> sy(sizes);
  std::vector<KahanSum> sxy(sizes);
  std::vector<double> per_size;

  const auto* gs = g.as<SymmetricForm>();
  const auto* hs = h.as<SymmetricForm>();
  double kx = 0.0;
  double ky = 0.0;
  if (gs != nullptr && hs != nullptr) {
    kx = gs->by_size[1] - gs->by_size[0];
    ky = hs->by_size[1] - hs->by_size[0];
    for (std::size_t s = 0; s < sizes; ++s) {
      const double x = gs->by_size[s + 1] - gs->by_size[s] - kx;
      const double y = hs->by_size[s + 1] - hs->by_size[s] - ky;
      sx[s].add(x);
      sy[s].add(y);
      sxy[s].add(x * y);
    }
    per_size = weighting.size_law(n);
  } else {
    detail::require_enumerable(g, options);
    kx = g.marginal(i, Coalition{});
    ky = h.marginal(i, Coalition{});
    const Coalition::mask_type count = Coalition::mask_type{1} << (n - 1);
    for (Coalition::mask_type r = 0; r < count; ++r) {
      const Coalition s = Coalition::from_mask(insert_zero_bit(r, i));
      const auto size = static_cast<std::size_t>(std::popcount(r));
      const double x = g.marginal(i, s) - kx;
      const double y = h.marginal(i, s) - ky;
      sx[size].add(x);
      sy[size].add(y);
      sxy[size].add(x * y);
    }
    per_size = weighting.per_coalition(n);
  }
  KahanSum ex;
  KahanSum ey;
  KahanSum exy;
  for (std::size_t s = 0; s < sizes; ++s) {
    ex.add(per_size[s] * sx[s].value());
    ey.add(per_size[s] * sy[s].value());
    exy.add(per_size[s] * sxy[s].value());
  }
  return exy.value() - ex.value() * ey.value();
}

}  // namespace coalition_var

#endif  // COALITION_VAR_EXACT_HPP
