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


// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace cv = coalition_var;
namespace fs = std::filesystem;
using cv::testing::rel_gap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

std::string run_cli(const std::string& args) {
  const fs::path out = fs::temp_directory_path() / "coalition_var_acceptance.txt";
  const std::string cmd =
      "'" COALITION_VAR_CLI "' " + args + " >'" + out.string() + "' 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return "exit=" + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1) + "\n" +
         s.str();
}

// 1 ---------------------------------------------------------------------------
Outcome golden_three_player() {
  const cv::Game g = cv::read_game_file(COALITION_VAR_DATA "/three_player.json").game;
  const auto start = Clock::now();
  const auto p = cv::all_profiles(g);
  const double elapsed = seconds_since(start);
  const double r[] = {299.0, 230.0, 155.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    worst = std::max({worst, rel_gap(p[i].v, 20.0), rel_gap(p[i].r, r[i])});
  }
  const std::string cli = run_cli("eval --format csv '" COALITION_VAR_DATA "/three_player.json'");
  const bool cli_ok = cli.find("1,20,299,") != std::string::npos &&
                      cli.find("2,20,230,") != std::string::npos &&
                      cli.find("3,20,155,") != std::string::npos;
  return {worst <= 1e-10 && elapsed < 1e-3 && cli_ok,
          "max rel err " + fmt("%.2e", worst) + ", " + fmt("%.1f", elapsed * 1e6) +
              " us, cli " + (cli_ok ? "ok" : "mismatch")};
}

// 2 ---------------------------------------------------------------------------
Outcome oracle_equivalence() {
  const auto start = Clock::now();
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    cv::Xoshiro256 rng(cv::trial_seed(2026, t));
    const int n = 2 + static_cast<int>(t % 7);
    const cv::Game g = cv::random_tabular_game(n, rng);
    const auto fast = cv::all_profiles(g);
    for (cv::PlayerId i = 0; i < static_cast<cv::PlayerId>(n); ++i) {
      const auto single = cv::profile(g, i);
      const auto oracle = cv::permutation_oracle(g, i);
      worst = std::max({worst, rel_gap(single.v, oracle.v), rel_gap(single.r, oracle.r),
                        rel_gap(fast[i].v, oracle.v), rel_gap(fast[i].r, oracle.r)});
    }
  }
  const double elapsed = seconds_since(start);
  return {worst <= 1e-10 && elapsed < 60.0,
          "500 games, max rel err " + fmt("%.2e", worst) + ", " + fmt("%.2f", elapsed) + " s"};
}

// 3 ---------------------------------------------------------------------------
Outcome majority_games() {
  bool exact = true;
  bool enumerated = true;
  bool increasing = true;
  double last_ratio = -1.0;
  for (int n = 1; n <= 201; n += 2) {
    const cv::Game g = cv::generate_majority(n);
    const auto p = cv::symmetric_profile(n, cv::symmetric_size_profile(g));
    exact = exact && p.v == 1.0 && p.r == static_cast<double>(n - 1);
    if (n <= 15) {
      const auto slow = cv::all_profiles(cv::expand_to_tabular(g));
      for (const auto& q : slow) {
        enumerated = enumerated && rel_gap(q.v, p.v) <= 1e-10 && rel_gap(q.r, p.r) <= 1e-10;
      }
    }
    const double ratio = p.r / n;
    increasing = increasing && ratio > last_ratio;
    last_ratio = ratio;
  }
  return {exact && enumerated && increasing,
          std::string("V=1,R=N-1 exact: ") + (exact ? "yes" : "no") +
              ", enumeration N<=15: " + (enumerated ? "match" : "MISMATCH") +
              ", R/N increasing to " + fmt("%.4f", last_ratio) + " at N=201"};
}

// 4 ---------------------------------------------------------------------------
Outcome property_suites() {
  const auto start = Clock::now();
  cv::SuiteOptions options;
  options.min_players = 2;
  options.max_players = 6;
  options.tolerance = 1e-9;
  std::uint64_t violations = 0;
  std::uint64_t checks = 0;
  std::string failing;
  for (cv::Property p : cv::kAllProperties) {
    const auto report = cv::run_property_suite(p, 10000, 1, options);
    violations += report.violation_count;
    checks += report.checks;
    if (!report.passed()) failing += " " + report.property;
  }
  const double elapsed = seconds_since(start);
  return {violations == 0 && elapsed < 300.0,
          "10 laws x 10000 instances, " + std::to_string(checks) + " checks, " +
              std::to_string(violations) + " violations" + failing + ", " +
              fmt("%.1f", elapsed) + " s"};
}

// 5 ---------------------------------------------------------------------------
Outcome production_sweep() {
  const auto s = cv::asymptotic_sweep(cv::SweepFamily::kProductionWorker, 0.5,
                                      {10, 20, 50, 100, 200, 400}, 0.25);
  const auto& last = s.rows.back();
  const bool v_ok = std::abs(last.v - 0.5) <= 0.02 * 0.5;
  const bool scaled_ok = s.trend.within_tolerance;
  const bool trend_ok = s.trend.passed();
  std::string column;
  for (const auto& r : s.rows) column += " " + fmt("%.4f", r.scaled);
  return {v_ok && scaled_ok && trend_ok,
          "V(400)=" + fmt("%.6f", last.v) + ", R*N/lnN:" + column + " vs 0.5 (gap " +
              fmt("%.1f", 100.0 * s.trend.final_relative_gap) + "%), trend toward reference: " +
              (s.trend.approaching ? "yes" : "NO, column moves away after N=20")};
}

// 6 ---------------------------------------------------------------------------
Outcome market_equivalence() {
  double worst = 0.0;
  for (double k : {0.3, 0.5, 0.7}) {
    for (int n : {4, 10, 37, 100, 400}) {
      const int n_a = static_cast<int>(std::lround(k * n));
      const cv::Game m = cv::market_economy(n_a, n - n_a);
      const cv::Game p = cv::production_economy(n_a, n - n_a);
      for (cv::TypeTag t : {cv::TypeTag::kA, cv::TypeTag::kB}) {
        const auto a = cv::two_type_profile(*m.as<cv::TwoTypeForm>(), t);
        const auto b = cv::two_type_profile(*p.as<cv::TwoTypeForm>(), t);
        worst = std::max({worst, rel_gap(a.v, b.v), rel_gap(a.r, b.r)});
      }
    }
  }
  const auto ms = cv::asymptotic_sweep(cv::SweepFamily::kMarketTrader, 0.5, {10, 100, 400});
  const auto ps = cv::asymptotic_sweep(cv::SweepFamily::kProductionCapitalist, 0.5, {10, 100, 400});
  for (std::size_t k = 0; k < ms.rows.size(); ++k) {
    worst = std::max({worst, rel_gap(ms.rows[k].v, ps.rows[k].v), rel_gap(ms.rows[k].r, ps.rows[k].r)});
  }
  return {worst <= 1e-12, "max rel diff " + fmt("%.2e", worst)};
}

// 7 ---------------------------------------------------------------------------
Outcome epidemiology_significance() {
  const auto input = cv::read_attribution_csv(COALITION_VAR_DATA "/risk_factors_summary.csv");
  const auto rows = cv::significance_table(input.summary, 1.96);
  const double z[] = {3.43, 1.43, 1.30, 1.92};
  const bool flags[] = {true, false, false, false};
  bool ok = rows.size() == 4;
  std::string zs;
  for (std::size_t k = 0; ok && k < 4; ++k) {
    ok = ok && std::abs(rows[k].z - z[k]) <= 0.01 && rows[k].significant_5pct == flags[k];
    zs += " " + rows[k].label + "=" + fmt("%.3f", rows[k].z) +
          (rows[k].significant_5pct ? "(yes)" : "(no)");
  }
  const auto notes = cv::borderline_notes(rows, 1.96);
  const bool note = notes.size() == 1 && notes[0].find("smoking") != std::string::npos;
  return {ok && note, "z:" + zs + ", smoking note " + (note ? "emitted" : "MISSING")};
}

// 8 ---------------------------------------------------------------------------
Outcome monte_carlo_coverage() {
  const cv::Game g = cv::read_game_file(COALITION_VAR_DATA "/three_player.json").game;
  const auto start = Clock::now();
  int covered = 0;
  double r_sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto e = cv::estimate(g, 0, 100000, seed);
    covered += e.ci95_v.contains(20.0) ? 1 : 0;
    r_sum += e.r_hat;
  }
  const double elapsed = seconds_since(start);
  const double coverage = covered / 200.0;
  const double r_mean = r_sum / 200.0;
  return {coverage >= 0.90 && std::abs(r_mean - 299.0) <= 0.03 * 299.0 && elapsed < 30.0,
          "coverage " + fmt("%.3f", coverage) + ", mean r_hat " + fmt("%.3f", r_mean) + ", " +
              fmt("%.2f", elapsed) + " s"};
}

// 9 ---------------------------------------------------------------------------
Outcome determinism() {
  const cv::Game g = cv::read_game_file(COALITION_VAR_DATA "/three_player.json").game;
  bool lib = true;
  for (unsigned threads : {1u, 2u, 8u}) {
    const auto a = cv::estimate_parallel(g, 0, 50001, 3, 8, 1);
    const auto b = cv::estimate_parallel(g, 0, 50001, 3, 8, threads);
    lib = lib && a.v_hat == b.v_hat && a.r_hat == b.r_hat;
  }
  const auto s1 = cv::run_property_suite(cv::Property::kConvexity, 500, 4);
  const auto s2 = cv::run_property_suite(cv::Property::kConvexity, 500, 4);
  lib = lib && s1.checks == s2.checks && s1.max_gap == s2.max_gap;

  const std::string sample = "sample '" COALITION_VAR_DATA "/three_player.json' --samples 30000 "
                             "--seed 11 --chunks 6 --format csv";
  const std::string s_a = run_cli(sample + " --threads 1");
  const std::string s_b = run_cli(sample + " --threads 1");
  const std::string s_c = run_cli(sample + " --threads 4");
  const std::string check = "check all --trials 300 --seed 5 --format json";
  const std::string c_a = run_cli(check);
  const std::string c_b = run_cli(check);
  const bool cli = s_a == s_b && s_a == s_c && c_a == c_b && s_a.rfind("exit=0", 0) == 0 &&
                   c_a.rfind("exit=0", 0) == 0;
  return {lib && cli, std::string("library ") + (lib ? "identical" : "DIFFERS") + ", cli sample/check " +
                          (cli ? "byte-identical" : "DIFFER")};
}

// 10 --------------------------------------------------------------------------
Outcome conjecture_probe() {
  const auto a = cv::conjecture_probe(3, 10000, 1);
  const auto b = cv::conjecture_probe(3, 10000, 1);
  const bool has = a.witness.has_value() && b.witness.has_value();
  bool ok = has && a.worst_ratio > 0.0 && std::isfinite(a.worst_ratio);
  std::string serialized;
  if (has) {
    serialized = cv::to_game_file(a.witness->g).dump() + cv::to_game_file(a.witness->h).dump();
    ok = ok && a.worst_ratio == b.worst_ratio &&
         cv::fingerprint(a.witness->g) == cv::fingerprint(b.witness->g) &&
         cv::fingerprint(a.witness->h) == cv::fingerprint(b.witness->h) &&
         cv::parse_game_file(cv::to_game_file(a.witness->g)).game.n_players() == 3;
  }
  return {ok, "worst ratio " + fmt("%.6f", a.worst_ratio) + " (player " +
                  std::to_string(has ? a.witness->player + 1 : 0) + ", trial " +
                  std::to_string(has ? a.witness->trial : 0) + "), witness " +
                  std::to_string(serialized.size()) + " bytes, reproducible " + (ok ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden three-player game", golden_three_player},
      {"oracle equivalence", oracle_equivalence},
      {"majority games", majority_games},
      {"property suites", property_suites},
      {"production-economy sweep", production_sweep},
      {"market-economy equivalence", market_equivalence},
      {"risk-factor significance", epidemiology_significance},
      {"Monte Carlo coverage", monte_carlo_coverage},
      {"determinism", determinism},
      {"superadditive lower-bound probe", conjecture_probe},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
