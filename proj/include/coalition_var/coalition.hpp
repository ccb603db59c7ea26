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

#ifndef COALITION_VAR_COALITION_HPP
#define COALITION_VAR_COALITION_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "coalition_var/error.hpp"

namespace coalition_var {

/// Zero-based player index. Players named 1..N by users map to 0..N-1.
using PlayerId = std::size_t;

/// A set of players packed into a 64-bit mask; player i is bit i.
///
/// Games larger than kMaxPlayers cannot be addressed by Coalition and are
/// only supported through the count-based closed forms (symmetric and
/// two-type games).
class Coalition {
 public:
  using mask_type = std::uint64_t;
  static constexpr int kMaxPlayers = 62;

  constexpr Coalition() noexcept = default;

  static constexpr Coalition from_mask(mask_type mask) noexcept {
    Coalition c;
    c.mask_ = mask;
    return c;
  }

  /// Members must be distinct.
  static Coalition of(std::initializer_list<PlayerId> members) {
    return of_range(members.begin(), members.end());
  }

  static Coalition of(const std::vector<PlayerId>& members) {
    return of_range(members.begin(), members.end());
  }

  /// The grand coalition {0, ..., n-1}.
  static constexpr Coalition grand(int n) {
    if (n < 0 || n > kMaxPlayers) {
      throw Error(ErrorKind::kTooManyPlayers,
                  "coalition masks support at most 62 players");
    }
    return from_mask(n == 0 ? 0 : (~mask_type{0} >> (64 - n)));
  }

  [[nodiscard]] constexpr mask_type mask() const noexcept { return mask_; }
  [[nodiscard]] constexpr int size() const noexcept {
    return std::popcount(mask_);
  }
  [[nodiscard]] constexpr bool empty() const noexcept { return mask_ == 0; }

  [[nodiscard]] constexpr bool contains(PlayerId p) const noexcept {
    return p < 64 && ((mask_ >> p) & 1U) != 0;
  }

  [[nodiscard]] constexpr Coalition with(PlayerId p) const {
    check_index(p);
    return from_mask(mask_ | (mask_type{1} << p));
  }

  [[nodiscard]] constexpr Coalition without(PlayerId p) const {
    check_index(p);
    return from_mask(mask_ & ~(mask_type{1} << p));
  }

  [[nodiscard]] constexpr Coalition unite(Coalition other) const noexcept {
    return from_mask(mask_ | other.mask_);
  }
  [[nodiscard]] constexpr Coalition intersect(Coalition other) const noexcept {
    return from_mask(mask_ & other.mask_);
  }
  [[nodiscard]] constexpr Coalition minus(Coalition other) const noexcept {
    return from_mask(mask_ & ~other.mask_);
  }
  [[nodiscard]] constexpr bool disjoint(Coalition other) const noexcept {
    return (mask_ & other.mask_) == 0;
  }
  [[nodiscard]] constexpr bool subset_of(Coalition other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  /// Members in increasing index order.
  [[nodiscard]] std::vector<PlayerId> members() const {
    std::vector<PlayerId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (mask_type m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<PlayerId>(std::countr_zero(m)));
    }
    return out;
  }

  friend constexpr bool operator==(Coalition, Coalition) noexcept = default;
  friend constexpr auto operator<=>(Coalition a, Coalition b) noexcept {
    return a.mask_ <=> b.mask_;
  }

 private:
  template <typename It>
  static Coalition of_range(It first, It last) {
    Coalition c;
    for (; first != last; ++first) {
      if (c.contains(*first)) {
        throw Error(ErrorKind::kInvalidArgument,
                    "player " + std::to_string(*first + 1) + " listed twice");
      }
      c = c.with(*first);
    }
    return c;
  }

  static constexpr void check_index(PlayerId p) {
    if (p >= static_cast<PlayerId>(kMaxPlayers)) {
      throw Error(ErrorKind::kTooManyPlayers,
                  "player index exceeds coalition mask width");
    }
  }

  mask_type mask_ = 0;
};

/// Calls f(Coalition) for every subset of `set`, the empty set included,
/// in decreasing mask order.
template <typename F>
void for_each_subset(Coalition set, F&& f) {
  const Coalition::mask_type full = set.mask();
  Coalition::mask_type sub = full;
  while (true) {
    f(Coalition::from_mask(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

/// Spreads the low (n-1) bits of `compact` around a hole at bit `player`,
/// mapping 0..2^(n-1)-1 onto the subsets of {0..n-1} \ {player}.
constexpr Coalition::mask_type insert_zero_bit(Coalition::mask_type compact,
                                               PlayerId player) noexcept {
  const Coalition::mask_type low_mask =
      (Coalition::mask_type{1} << player) - 1;
  return (compact & low_mask) | ((compact & ~low_mask) << 1);
}

}  // namespace coalition_var

#endif  // COALITION_VAR_COALITION_HPP
