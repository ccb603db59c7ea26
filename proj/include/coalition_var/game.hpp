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
 * \file coalition_var/game.hpp
 *
 * \brief Transferable-utility games: characteristic functions stored either
 *  as an explicit table over all coalitions or as one of the closed forms
 *  (additive, symmetric, two-type) that scale past mask-addressable sizes.
 */

#ifndef COALITION_VAR_GAME_HPP
#define COALITION_VAR_GAME_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "coalition_var/coalition.hpp"
#include "coalition_var/error.hpp"

namespace coalition_var {

enum class TypeTag : std::uint8_t { kA, kB };

/// Default ceiling for materializing a 2^n table.
inline constexpr int kDefaultTabularLimit = 25;

/// Value of every coalition, indexed by mask. values[0] is G(empty).
struct TabularForm {
  std::vector<double> values;
};

/// G(S) = sum of weights over S.
struct AdditiveForm {
  std::vector<double> weights;
};

/// G(S) = by_size[|S|]; by_size has n+1 entries.
struct SymmetricForm {
  std::vector<double> by_size;
};

/// G(S) = worth(a, b) where a and b count the type-A and type-B members.
struct TwoTypeForm {
  int n_a = 0;
  int n_b = 0;
  std::vector<double> worth;  // (n_a + 1) x (n_b + 1), row-major in a
  std::vector<TypeTag> tags;  // one per player

  [[nodiscard]] double at(int a, int b) const {
    return worth[static_cast<std::size_t>(a) *
                     static_cast<std::size_t>(n_b + 1) +
                 static_cast<std::size_t>(b)];
  }
};

class Game {
 public:
  using Form = std::variant<TabularForm, AdditiveForm, SymmetricForm,
                            TwoTypeForm>;

  Game(int n_players, Form form) : n_(n_players), form_(std::move(form)) {
    validate();
    if (const auto* tt = std::get_if<TwoTypeForm>(&form_);
        tt != nullptr && n_ <= Coalition::kMaxPlayers) {
      for (int p = 0; p < n_; ++p) {
        if (tt->tags[static_cast<std::size_t>(p)] == TypeTag::kA) {
          type_a_mask_ |= Coalition::mask_type{1} << p;
        }
      }
    }
  }

  [[nodiscard]] int n_players() const noexcept { return n_; }
  [[nodiscard]] const Form& form() const noexcept { return form_; }

  template <typename T>
  [[nodiscard]] const T* as() const noexcept {
    return std::get_if<T>(&form_);
  }

  /// True when every coalition can be named by a mask.
  [[nodiscard]] bool addressable() const noexcept {
    return n_ <= Coalition::kMaxPlayers;
  }

  [[nodiscard]] Coalition grand_coalition() const {
    return Coalition::grand(n_);
  }

  [[nodiscard]] double value(Coalition s) const {
    check_coalition(s);
    return std::visit(
        [&](const auto& f) -> double {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, TabularForm>) {
            return f.values[s.mask()];
          } else if constexpr (std::is_same_v<F, AdditiveForm>) {
            double sum = 0.0;
            for (PlayerId p : s.members()) sum += f.weights[p];
            return sum;
          } else if constexpr (std::is_same_v<F, SymmetricForm>) {
            return f.by_size[static_cast<std::size_t>(s.size())];
          } else {
            const int a = std::popcount(s.mask() & type_a_mask_);
            return f.at(a, s.size() - a);
          }
        },
        form_);
  }

  /// G(S + i) - G(S). For additive games this is the weight itself.
  [[nodiscard]] double marginal(PlayerId i, Coalition s) const {
    check_player(i);
    if (s.contains(i)) {
      throw Error(ErrorKind::kPlayerInCoalition,
                  "player " + std::to_string(i) + " already in coalition");
    }
    if (const auto* add = as<AdditiveForm>()) return add->weights[i];
    return value(s.with(i)) - value(s);
  }

  /// Type-A membership mask (two-type games with at most 62 players).
  [[nodiscard]] Coalition::mask_type type_a_mask() const noexcept {
    return type_a_mask_;
  }

  void check_player(PlayerId i) const {
    if (i >= static_cast<PlayerId>(n_)) {
      throw Error(ErrorKind::kOutOfRange,
                  "player " + std::to_string(i) + " outside game of " +
                      std::to_string(n_) + " players");
    }
  }

 private:
  void check_coalition(Coalition s) const {
    if (n_ < 64 && (s.mask() >> n_) != 0) {
      throw Error(ErrorKind::kOutOfRange,
                  "coalition mentions players outside the game");
    }
  }

  void validate() const {
    if (n_ < 1) {
      throw Error(ErrorKind::kInvalidArgument, "a game needs at least 1 player");
    }
    const auto n = static_cast<std::size_t>(n_);
    std::visit(
        [&](const auto& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, TabularForm>) {
            if (n_ > Coalition::kMaxPlayers) {
              throw Error(ErrorKind::kTooManyPlayers,
                          "tabular games support at most 62 players");
            }
            if (f.values.size() != (std::size_t{1} << n)) {
              throw Error(ErrorKind::kLengthMismatch,
                          "tabular game needs 2^n values");
            }
          } else if constexpr (std::is_same_v<F, AdditiveForm>) {
            if (f.weights.size() != n) {
              throw Error(ErrorKind::kLengthMismatch,
                          "additive game needs one weight per player");
            }
          } else if constexpr (std::is_same_v<F, SymmetricForm>) {
            if (f.by_size.size() != n + 1) {
              throw Error(ErrorKind::kLengthMismatch,
                          "symmetric game needs n+1 size values");
            }
          } else {
            if (f.n_a < 0 || f.n_b < 0 || f.n_a + f.n_b != n_) {
              throw Error(ErrorKind::kTableShapeMismatch,
                          "type counts must sum to the player count");
            }
            if (f.worth.size() != static_cast<std::size_t>(f.n_a + 1) *
                                      static_cast<std::size_t>(f.n_b + 1)) {
              throw Error(ErrorKind::kTableShapeMismatch,
                          "worth table must be (n_a+1) x (n_b+1)");
            }
            if (f.tags.size() != n ||
                std::count(f.tags.begin(), f.tags.end(), TypeTag::kA) !=
                    f.n_a) {
              throw Error(ErrorKind::kTableShapeMismatch,
                          "type tags must mark exactly n_a players as A");
            }
          }
        },
        form_);
  }

  int n_;
  Form form_;
  Coalition::mask_type type_a_mask_ = 0;
};

inline double value(const Game& game, Coalition s) { return game.value(s); }

inline double marginal_contribution(const Game& game, PlayerId i,
                                    Coalition s) {
  return game.marginal(i, s);
}

/// A coalition built up one player at a time. Works for every form,
/// including symmetric and two-type games beyond 62 players, which is what
/// ordering-based computations need.
class GrowingCoalition {
 public:
  explicit GrowingCoalition(const Game& game) : game_(&game) {}

  void add(PlayerId p) {
    if (const auto* tt = game_->as<TwoTypeForm>()) {
      if (tt->tags[p] == TypeTag::kA) ++count_a_;
    } else if (game_->as<TabularForm>() != nullptr) {
      mask_ |= Coalition::mask_type{1} << p;
    }
    ++size_;
  }

  void reset() noexcept {
    mask_ = 0;
    size_ = 0;
    count_a_ = 0;
  }

  [[nodiscard]] int size() const noexcept { return size_; }

  /// Marginal contribution of p (not yet a member) to the current set.
  [[nodiscard]] double marginal(PlayerId p) const {
    return std::visit(
        [&](const auto& f) -> double {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, TabularForm>) {
            return f.values[mask_ | (Coalition::mask_type{1} << p)] -
                   f.values[mask_];
          } else if constexpr (std::is_same_v<F, AdditiveForm>) {
            return f.weights[p];
          } else if constexpr (std::is_same_v<F, SymmetricForm>) {
            const auto k = static_cast<std::size_t>(size_);
            return f.by_size[k + 1] - f.by_size[k];
          } else {
            const int b = size_ - count_a_;
            if (f.tags[p] == TypeTag::kA) {
              return f.at(count_a_ + 1, b) - f.at(count_a_, b);
            }
            return f.at(count_a_, b + 1) - f.at(count_a_, b);
          }
        },
        game_->form());
  }

 private:
  const Game* game_;
  Coalition::mask_type mask_ = 0;
  int size_ = 0;
  int count_a_ = 0;
};

// --- construction ---------------------------------------------------------

/// Tabular game from a full table indexed by mask (values[0] is G(empty)).
inline Game make_tabular(int n, std::vector<double> values) {
  if (n > Coalition::kMaxPlayers) {
    throw Error(ErrorKind::kTooManyPlayers,
                "tabular games support at most 62 players");
  }
  return Game(n, TabularForm{std::move(values)});
}

/// Tabular game from a coalition map. Every non-empty coalition must be
/// present; a missing empty coalition defaults to 0.
inline Game make_tabular(int n, const std::map<Coalition, double>& values) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument, "a game needs at least 1 player");
  }
  if (n > Coalition::kMaxPlayers) {
    throw Error(ErrorKind::kTooManyPlayers,
                "tabular games support at most 62 players");
  }
  const Coalition::mask_type count = Coalition::mask_type{1} << n;
  for (const auto& [coalition, v] : values) {
    if (coalition.mask() >= count) {
      throw Error(ErrorKind::kOutOfRange,
                  "coalition mentions players outside the game");
    }
  }
  const std::size_t needed = static_cast<std::size_t>(count - 1);
  const std::size_t have = values.size() - (values.contains(Coalition{}) ? 1 : 0);
  if (have < needed) {
    for (Coalition::mask_type m = 1; m < count; ++m) {
      if (!values.contains(Coalition::from_mask(m))) {
        std::ostringstream msg;
        msg << "no value for coalition {";
        bool first = true;
        for (PlayerId p : Coalition::from_mask(m).members()) {
          msg << (first ? "" : ",") << p + 1;
          first = false;
        }
        msg << "}";
        throw Error(ErrorKind::kMissingCoalition, msg.str());
      }
    }
  }
  std::vector<double> table(static_cast<std::size_t>(count), 0.0);
  for (const auto& [coalition, v] : values) table[coalition.mask()] = v;
  return Game(n, TabularForm{std::move(table)});
}

inline Game generate_additive(std::vector<double> weights) {
  if (weights.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "additive game needs weights");
  }
  const int n = static_cast<int>(weights.size());
  return Game(n, AdditiveForm{std::move(weights)});
}

inline Game generate_symmetric(int n, std::vector<double> by_size) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument, "a game needs at least 1 player");
  }
  if (by_size.size() != static_cast<std::size_t>(n) + 1) {
    throw Error(ErrorKind::kLengthMismatch,
                "symmetric game needs n+1 size values, got " +
                    std::to_string(by_size.size()));
  }
  return Game(n, SymmetricForm{std::move(by_size)});
}

/// Worth n when the coalition holds a strict majority of the n players.
inline Game generate_majority(int n) {
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument, "a game needs at least 1 player");
  }
  std::vector<double> g(static_cast<std::size_t>(n) + 1, 0.0);
  for (int s = 0; s <= n; ++s) {
    if (2 * s > n) g[static_cast<std::size_t>(s)] = static_cast<double>(n);
  }
  return Game(n, SymmetricForm{std::move(g)});
}

/// Type tags with the n_a type-A players first.
inline std::vector<TypeTag> default_type_tags(int n_a, int n_b) {
  std::vector<TypeTag> tags(static_cast<std::size_t>(n_a), TypeTag::kA);
  tags.resize(static_cast<std::size_t>(n_a + n_b), TypeTag::kB);
  return tags;
}

inline Game generate_two_type(int n_a, int n_b,
                              const std::vector<std::vector<double>>& worth,
                              std::vector<TypeTag> tags = {}) {
  if (n_a < 0 || n_b < 0 || n_a + n_b < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "two-type game needs non-negative counts summing to >= 1");
  }
  if (worth.size() != static_cast<std::size_t>(n_a) + 1) {
    throw Error(ErrorKind::kTableShapeMismatch,
                "worth table needs n_a+1 rows");
  }
  TwoTypeForm form{n_a, n_b, {}, {}};
  form.worth.reserve(static_cast<std::size_t>(n_a + 1) *
                     static_cast<std::size_t>(n_b + 1));
  for (const auto& row : worth) {
    if (row.size() != static_cast<std::size_t>(n_b) + 1) {
      throw Error(ErrorKind::kTableShapeMismatch,
                  "worth table needs n_b+1 columns");
    }
    form.worth.insert(form.worth.end(), row.begin(), row.end());
  }
  form.tags = tags.empty() ? default_type_tags(n_a, n_b) : std::move(tags);
  return Game(n_a + n_b, std::move(form));
}

inline Game generate_two_type(int n_a, int n_b,
                              const std::function<double(int, int)>& worth,
                              std::vector<TypeTag> tags = {}) {
  if (n_a < 0 || n_b < 0 || n_a + n_b < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "two-type game needs non-negative counts summing to >= 1");
  }
  std::vector<std::vector<double>> table(
      static_cast<std::size_t>(n_a) + 1,
      std::vector<double>(static_cast<std::size_t>(n_b) + 1));
  for (int a = 0; a <= n_a; ++a) {
    for (int b = 0; b <= n_b; ++b) {
      table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          worth(a, b);
    }
  }
  return generate_two_type(n_a, n_b, table, std::move(tags));
}

/// Worth sqrt(a * b): capitalists and workers producing together, or apple
/// and bread traders with utility sqrt(apples * bread).
inline double sqrt_product_worth(int a, int b) {
  return std::sqrt(static_cast<double>(a) * static_cast<double>(b));
}

/// The table form of any game.
inline Game expand_to_tabular(const Game& game,
                              int max_players = kDefaultTabularLimit) {
  if (game.as<TabularForm>() != nullptr) return game;
  const int n = game.n_players();
  if (n > max_players) {
    throw Error(ErrorKind::kTooManyPlayers,
                "cannot materialize 2^" + std::to_string(n) +
                    " coalitions (limit " + std::to_string(max_players) + ")");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> table(count);
  for (std::size_t m = 0; m < count; ++m) {
    table[m] = game.value(Coalition::from_mask(m));
  }
  return Game(n, TabularForm{std::move(table)});
}

// --- algebra --------------------------------------------------------------

namespace detail {

inline void require_same_size(const Game& g, const Game& h) {
  if (g.n_players() != h.n_players()) {
    throw Error(ErrorKind::kPlayerCountMismatch,
                "games have " + std::to_string(g.n_players()) + " and " +
                    std::to_string(h.n_players()) + " players");
  }
}

template <typename Op>
std::vector<double> zip(const std::vector<double>& x,
                        const std::vector<double>& y, Op op) {
  std::vector<double> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = op(x[k], y[k]);
  return out;
}

// Pointwise combination; keeps a closed form when both inputs share it.
template <typename Op>
Game combine(const Game& g, const Game& h, Op op) {
  require_same_size(g, h);
  const int n = g.n_players();
  if (const auto* a = g.as<AdditiveForm>()) {
    if (const auto* b = h.as<AdditiveForm>()) {
      return Game(n, AdditiveForm{zip(a->weights, b->weights, op)});
    }
  }
  if (const auto* a = g.as<SymmetricForm>()) {
    if (const auto* b = h.as<SymmetricForm>()) {
      return Game(n, SymmetricForm{zip(a->by_size, b->by_size, op)});
    }
  }
  if (const auto* a = g.as<TwoTypeForm>()) {
    if (const auto* b = h.as<TwoTypeForm>(); b != nullptr && a->tags == b->tags) {
      return Game(n, TwoTypeForm{a->n_a, a->n_b, zip(a->worth, b->worth, op),
                                 a->tags});
    }
  }
  const Game tg = expand_to_tabular(g);
  const Game th = expand_to_tabular(h);
  return Game(n, TabularForm{zip(tg.as<TabularForm>()->values,
                                 th.as<TabularForm>()->values, op)});
}

}  // namespace detail

inline Game scale_game(const Game& game, double t) {
  auto scaled = [t](std::vector<double> v) {
    for (double& x : v) x *= t;
    return v;
  };
  return std::visit(
      [&](const auto& f) -> Game {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, TabularForm>) {
          return Game(game.n_players(), TabularForm{scaled(f.values)});
        } else if constexpr (std::is_same_v<F, AdditiveForm>) {
          return Game(game.n_players(), AdditiveForm{scaled(f.weights)});
        } else if constexpr (std::is_same_v<F, SymmetricForm>) {
          return Game(game.n_players(), SymmetricForm{scaled(f.by_size)});
        } else {
          return Game(game.n_players(),
                      TwoTypeForm{f.n_a, f.n_b, scaled(f.worth), f.tags});
        }
      },
      game.form());
}

inline Game add_games(const Game& g, const Game& h) {
  return detail::combine(g, h, [](double x, double y) { return x + y; });
}

/// alpha * G + (1 - alpha) * H.
inline Game mix_games(const Game& g, const Game& h, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kOutOfRange, "mixing weight must lie in [0, 1]");
  }
  return detail::combine(g, h, [alpha](double x, double y) {
    return alpha * x + (1.0 - alpha) * y;
  });
}

// --- predicates -----------------------------------------------------------

/// Ceiling for the O(3^n) disjoint-pair check on tabular games.
inline constexpr int kSuperadditiveCheckLimit = 16;

/// G(S u T) >= G(S) + G(T) for every pair of disjoint coalitions.
inline bool is_superadditive(const Game& game, double tolerance = 0.0,
                             int max_players = kSuperadditiveCheckLimit) {
  const int n = game.n_players();
  if (const auto* add = game.as<AdditiveForm>()) {
    (void)add;
    // Only G(empty) could break it, and the additive form fixes it at 0.
    return true;
  }
  if (const auto* sym = game.as<SymmetricForm>()) {
    const auto& g = sym->by_size;
    for (int s = 0; s <= n; ++s) {
      for (int t = 0; s + t <= n; ++t) {
        if (g[static_cast<std::size_t>(s + t)] + tolerance <
            g[static_cast<std::size_t>(s)] + g[static_cast<std::size_t>(t)]) {
          return false;
        }
      }
    }
    return true;
  }
  if (const auto* tt = game.as<TwoTypeForm>()) {
    for (int a1 = 0; a1 <= tt->n_a; ++a1) {
      for (int b1 = 0; b1 <= tt->n_b; ++b1) {
        for (int a2 = 0; a1 + a2 <= tt->n_a; ++a2) {
          for (int b2 = 0; b1 + b2 <= tt->n_b; ++b2) {
            if (tt->at(a1 + a2, b1 + b2) + tolerance <
                tt->at(a1, b1) + tt->at(a2, b2)) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }
  if (n > max_players) {
    throw Error(ErrorKind::kTooLargeForExactCheck,
                "superadditivity check is O(3^n); limit is " +
                    std::to_string(max_players) + " players");
  }
  const auto& v = game.as<TabularForm>()->values;
  const Coalition::mask_type count = Coalition::mask_type{1} << n;
  for (Coalition::mask_type s = 0; s < count; ++s) {
    // Each unordered split {t, s\t} is visited twice; harmless.
    for (Coalition::mask_type t = s; ; t = (t - 1) & s) {
      if (v[s] + tolerance < v[t] + v[s & ~t]) return false;
      if (t == 0) break;
    }
  }
  return true;
}

/// Size profile of a game whose worth depends only on coalition size.
inline std::vector<double> symmetric_size_profile(const Game& game) {
  const int n = game.n_players();
  if (const auto* sym = game.as<SymmetricForm>()) return sym->by_size;
  if (const auto* add = game.as<AdditiveForm>()) {
    const auto& w = add->weights;
    if (std::adjacent_find(w.begin(), w.end(), std::not_equal_to<>()) !=
        w.end()) {
      throw Error(ErrorKind::kNotSymmetric, "additive weights differ");
    }
    std::vector<double> g(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) {
      g[static_cast<std::size_t>(s)] = w[0] * s;
    }
    return g;
  }
  if (const auto* tt = game.as<TwoTypeForm>()) {
    std::vector<double> g(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s) {
      const int lo = std::max(0, s - tt->n_b);
      const int hi = std::min(s, tt->n_a);
      g[static_cast<std::size_t>(s)] = tt->at(lo, s - lo);
      for (int a = lo; a <= hi; ++a) {
        if (tt->at(a, s - a) != g[static_cast<std::size_t>(s)]) {
          throw Error(ErrorKind::kNotSymmetric,
                      "worth depends on more than coalition size");
        }
      }
    }
    return g;
  }
  const auto& v = game.as<TabularForm>()->values;
  std::vector<double> g(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t m = 0; m < v.size(); ++m) {
    const auto s = static_cast<std::size_t>(std::popcount(m));
    if (!seen[s]) {
      g[s] = v[m];
      seen[s] = true;
    } else if (v[m] != g[s]) {
      throw Error(ErrorKind::kNotSymmetric,
                  "worth depends on more than coalition size");
    }
  }
  return g;
}

/// Non-decreasing worth with non-decreasing increments.
inline bool is_symmetric_convex(const Game& game) {
  const std::vector<double> g = symmetric_size_profile(game);
  double previous_step = 0.0;
  for (std::size_t s = 0; s + 1 < g.size(); ++s) {
    const double step = g[s + 1] - g[s];
    if (step < 0.0) return false;
    if (s > 0 && step < previous_step) return false;
    previous_step = step;
  }
  return true;
}

/// Stable 64-bit FNV-1a digest of the game's defining data, rendered as hex.
inline std::string fingerprint(const Game& game) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix_bytes = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t k = 0; k < len; ++k) {
      h ^= bytes[k];
      h *= 1099511628211ULL;
    }
  };
  auto mix_doubles = [&](const std::vector<double>& xs) {
    for (double x : xs) {
      std::uint64_t bits = 0;
      std::memcpy(&bits, &x, sizeof bits);
      mix_bytes(&bits, sizeof bits);
    }
  };
  const int n = game.n_players();
  const auto index = static_cast<std::uint8_t>(game.form().index());
  mix_bytes(&n, sizeof n);
  mix_bytes(&index, sizeof index);
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, TabularForm>) {
          mix_doubles(f.values);
        } else if constexpr (std::is_same_v<F, AdditiveForm>) {
          mix_doubles(f.weights);
        } else if constexpr (std::is_same_v<F, SymmetricForm>) {
          mix_doubles(f.by_size);
        } else {
          mix_doubles(f.worth);
          for (TypeTag t : f.tags) mix_bytes(&t, sizeof t);
        }
      },
      game.form());
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = kHex[h & 0xF];
    h >>= 4;
  }
  return out;
}

}  // namespace coalition_var

#endif  // COALITION_VAR_GAME_HPP
