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
 * \file coalition_var/sampling.hpp
 *
 * \brief Monte Carlo estimates of V_i and R_i from uniformly random
 *  orderings: each sample is the marginal of player i to the players that
 *  precede it.
 *
 * Chunk c of a run draws from stream c of the seed and the per-chunk
 * accumulators are merged in a fixed pairwise tree, so a report depends on
 * (game, player, samples, seed, chunks) and nothing else.
 */

#ifndef COALITION_VAR_SAMPLING_HPP
#define COALITION_VAR_SAMPLING_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "coalition_var/error.hpp"
#include "coalition_var/exact.hpp"
#include "coalition_var/game.hpp"
#include "coalition_var/random.hpp"
#include "coalition_var/sample_stats.hpp"

namespace coalition_var {

inline constexpr double kZ95 = 1.96;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  [[nodiscard]] bool contains(double x) const noexcept {
    return lo <= x && x <= hi;
  }
};

struct EstimateReport {
  PlayerId player = 0;
  double v_hat = 0.0;
  double r_hat = 0.0;
  double se_v = 0.0;
  Interval ci95_v;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t n_chunks = 1;
};

/// Fisher-Yates shuffle in place.
inline void shuffle_players(std::span<PlayerId> players, Xoshiro256& rng) {
  for (std::size_t k = players.size(); k > 1; --k) {
    const auto j = static_cast<std::size_t>(rng.below(k));
    std::swap(players[k - 1], players[j]);
  }
}

/// A uniformly random ordering of n players; n-1 bounded draws.
inline Ordering sample_ordering(int n, Xoshiro256& rng) {
  std::vector<PlayerId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), PlayerId{0});
  shuffle_players(perm, rng);
  return Ordering(std::move(perm));
}

namespace detail {

inline SampleStats sample_player(const Game& game, PlayerId i,
                                 std::uint64_t count, Xoshiro256 rng) {
  std::vector<PlayerId> perm(static_cast<std::size_t>(game.n_players()));
  std::iota(perm.begin(), perm.end(), PlayerId{0});
  GrowingCoalition before(game);
  SampleStats stats;
  for (std::uint64_t k = 0; k < count; ++k) {
    shuffle_players(perm, rng);
    before.reset();
    for (PlayerId p : perm) {
      if (p == i) break;
      before.add(p);
    }
    stats.push(before.marginal(i));
  }
  return stats;
}

inline std::vector<SampleStats> sample_all_players(const Game& game,
                                                   std::uint64_t count,
                                                   Xoshiro256 rng) {
  const auto n = static_cast<std::size_t>(game.n_players());
  std::vector<PlayerId> perm(n);
  std::iota(perm.begin(), perm.end(), PlayerId{0});
  GrowingCoalition prefix(game);
  std::vector<SampleStats> stats(n);
  for (std::uint64_t k = 0; k < count; ++k) {
    shuffle_players(perm, rng);
    prefix.reset();
    for (PlayerId p : perm) {
      stats[p].push(prefix.marginal(p));
      prefix.add(p);
    }
  }
  return stats;
}

inline std::vector<std::uint64_t> chunk_sizes(std::uint64_t n_samples,
                                              std::uint64_t n_chunks) {
  std::vector<std::uint64_t> sizes(n_chunks, n_samples / n_chunks);
  for (std::uint64_t c = 0; c < n_samples % n_chunks; ++c) ++sizes[c];
  return sizes;
}

// Runs job(c) for c in [0, jobs) on up to max_threads threads.
template <typename Job>
void run_chunks(std::uint64_t jobs, unsigned max_threads, Job&& job) {
  unsigned workers = max_threads != 0 ? max_threads
                                      : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, jobs));
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < jobs; ++c) job(c);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::uint64_t c = next.fetch_add(1); c < jobs; c = next.fetch_add(1)) {
        job(c);
      }
    });
  }
  for (auto& t : pool) t.join();
}

// Adjacent pairs, level by level; the shape depends only on the count.
inline SampleStats tree_merge(std::vector<SampleStats> parts) {
  if (parts.empty()) return {};
  while (parts.size() > 1) {
    std::vector<SampleStats> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t k = 0; k + 1 < parts.size(); k += 2) {
      SampleStats merged = parts[k];
      merged.merge(parts[k + 1]);
      next.push_back(merged);
    }
    if (parts.size() % 2 == 1) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

inline EstimateReport make_report(PlayerId player, const SampleStats& stats,
                                  std::uint64_t seed, std::uint64_t n_chunks) {
  EstimateReport out;
  out.player = player;
  out.v_hat = stats.mean();
  out.r_hat = stats.variance();
  out.se_v = std::sqrt(out.r_hat / static_cast<double>(stats.count()));
  out.ci95_v = {out.v_hat - kZ95 * out.se_v, out.v_hat + kZ95 * out.se_v};
  out.n_samples = stats.count();
  out.seed = seed;
  out.n_chunks = n_chunks;
  return out;
}

inline void check_sampling_args(const Game& game, std::uint64_t n_samples,
                                std::uint64_t n_chunks) {
  if (n_samples < 2) {
    throw Error(ErrorKind::kInsufficientSamples,
                "need at least 2 samples for a variance, got " +
                    std::to_string(n_samples));
  }
  if (n_chunks < 1) {
    throw Error(ErrorKind::kInvalidArgument, "need at least one chunk");
  }
  if (game.as<TabularForm>() != nullptr && !game.addressable()) {
    throw Error(ErrorKind::kTooManyPlayers, "tabular game too large");
  }
}

}  // namespace detail

/// Chunked estimate for one player; bit-identical for fixed
/// (seed, n_chunks) whatever the thread count.
inline EstimateReport estimate_parallel(const Game& game, PlayerId i,
                                        std::uint64_t n_samples,
                                        std::uint64_t seed,
                                        std::uint64_t n_chunks,
                                        unsigned max_threads = 0) {
  game.check_player(i);
  detail::check_sampling_args(game, n_samples, n_chunks);
  const auto sizes = detail::chunk_sizes(n_samples, n_chunks);
  std::vector<SampleStats> parts(n_chunks);
  detail::run_chunks(n_chunks, max_threads, [&](std::uint64_t c) {
    parts[c] = detail::sample_player(game, i, sizes[c],
                                     Xoshiro256::stream(seed, c));
  });
  return detail::make_report(i, detail::tree_merge(std::move(parts)), seed,
                             n_chunks);
}

/// Single-stream estimate: v_hat is the sample mean of player i's marginal
/// and r_hat its Bessel-corrected sample variance.
inline EstimateReport estimate(const Game& game, PlayerId i,
                               std::uint64_t n_samples, std::uint64_t seed) {
  return estimate_parallel(game, i, n_samples, seed, 1, 1);
}

/// Estimates for every player from the same orderings (one telescoping pass
/// per ordering). Each player's moments are unbiased; estimates for
/// different players are correlated.
inline std::vector<EstimateReport> estimate_all(const Game& game,
                                                std::uint64_t n_samples,
                                                std::uint64_t seed,
                                                std::uint64_t n_chunks = 1,
                                                unsigned max_threads = 0) {
  detail::check_sampling_args(game, n_samples, n_chunks);
  const auto sizes = detail::chunk_sizes(n_samples, n_chunks);
  std::vector<std::vector<SampleStats>> parts(n_chunks);
  detail::run_chunks(n_chunks, max_threads, [&](std::uint64_t c) {
    parts[c] = detail::sample_all_players(game, sizes[c],
                                          Xoshiro256::stream(seed, c));
  });
  const auto n = static_cast<std::size_t>(game.n_players());
  std::vector<EstimateReport> out;
  out.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<SampleStats> per_chunk;
    per_chunk.reserve(n_chunks);
    for (const auto& chunk : parts) per_chunk.push_back(chunk[p]);
    out.push_back(detail::make_report(p, detail::tree_merge(std::move(per_chunk)),
                                      seed, n_chunks));
  }
  return out;
}

}  // namespace coalition_var

#endif  // COALITION_VAR_SAMPLING_HPP
