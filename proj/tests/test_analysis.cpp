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


#include <gtest/gtest.h>

#include "test_util.hpp"

namespace cv = coalition_var;
using cv::Coalition;
using cv::testing::three_player_game;

TEST(Analysis, MixtureVariance) {
  EXPECT_EQ(cv::mixture_variance(cv::MixtureParams(0.0), 299.0), 0.0);
  EXPECT_DOUBLE_EQ(cv::mixture_variance(cv::MixtureParams(1.0), 299.0), 299.0);
  EXPECT_DOUBLE_EQ(cv::mixture_variance(cv::MixtureParams(0.5), 299.0), 74.75);
  EXPECT_THROW(cv::MixtureParams(1.5), cv::Error);
}

TEST(Analysis, ChebyshevBound) {
  const cv::MixtureParams full(1.0);
  EXPECT_DOUBLE_EQ(cv::chebyshev_bound(full, 20.0, 299.0, 1.0), 0.7475);
  EXPECT_EQ(cv::chebyshev_bound(full, 20.0, 0.0, 1.0), 0.0);
  EXPECT_EQ(cv::chebyshev_bound(full, 1.0, 100.0, 0.5), 1.0);
  double last = 1.0;
  for (double c : {1.0, 10.0, 100.0, 1e4}) {
    const double b = cv::chebyshev_bound(full, 20.0, 299.0, c);
    EXPECT_LE(b, last);
    last = b;
  }
  EXPECT_LT(last, 1e-6);
  try {
    (void)cv::chebyshev_bound(full, 0.0, 1.0, 1.0);
    FAIL();
  } catch (const cv::Error& e) {
    EXPECT_EQ(e.kind(), cv::ErrorKind::kZeroValue);
  }
}

TEST(Analysis, NormalBand) {
  EXPECT_DOUBLE_EQ(cv::normal_deviation_band(cv::MixtureParams(1.0), 1.0), 1.96);
  EXPECT_NEAR(cv::normal_deviation_band(cv::MixtureParams(1.0), 299.0), 33.89, 0.005);
  EXPECT_EQ(cv::normal_deviation_band(cv::MixtureParams(0.0), 299.0), 0.0);
}

TEST(Analysis, SignificanceTable) {
  const std::vector<cv::SignificanceInput> in{{"LDL", 0.405, 0.118 * 0.118},
                                              {"VLDL", 0.08, 0.056 * 0.056},
                                              {"HDL", 0.074, 0.057 * 0.057},
                                              {"smoking", 0.211, 0.11 * 0.11}};
  const auto rows = cv::significance_table(in);
  const double z[] = {3.43, 1.43, 1.30, 1.918};
  const bool sig[] = {true, false, false, false};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(rows[k].z, z[k], 0.005) << rows[k].label;
    EXPECT_EQ(rows[k].significant_5pct, sig[k]) << rows[k].label;
  }
  const auto notes = cv::borderline_notes(rows);
  ASSERT_EQ(notes.size(), 1u);
  EXPECT_NE(notes[0].find("smoking"), std::string::npos);
  // a one-sided 5% threshold flips the borderline verdict
  EXPECT_TRUE(cv::significance_table(in, 1.645)[3].significant_5pct);
}

TEST(Analysis, DeterministicAttributionIsSignificant) {
  const auto rows = cv::significance_table({{"f", 1.0, 0.0}});
  EXPECT_TRUE(rows[0].significant_5pct);
  EXPECT_TRUE(std::isinf(rows[0].z));
  EXPECT_EQ(cv::significance_table({{"g", 0.0, 0.0}})[0].z, 0.0);
}

TEST(Properties, ScalingOnThreePlayerGame) {
  const auto p = cv::profile(cv::scale_game(three_player_game(), 2.0), 0);
  EXPECT_NEAR(p.r, 1196.0, 1e-9);
}

TEST(Properties, DummyPlayerIsRiskless) {
  const cv::Game g = three_player_game();
  std::vector<double> v(16);
  for (cv::Coalition::mask_type m = 0; m < 8; ++m) {
    v[m] = g.value(Coalition::from_mask(m));
    v[m | 8] = v[m] + 5.0;
  }
  const auto p = cv::profile(cv::make_tabular(4, v), 3);
  EXPECT_NEAR(p.v, 5.0, 1e-12);
  EXPECT_EQ(p.r, 0.0);
}

TEST(Properties, StepFunctionLemmaCase) {
  // f1 = f2 = indicator of [T, inf): E[f1 f2] = mu >= mu^2.
  const std::vector<double> mass{0.2, 0.3, 0.5};
  const std::vector<double> step{0.0, 1.0, 1.0};
  double e = 0.0;
  double e12 = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    e += mass[k] * step[k];
    e12 += mass[k] * step[k] * step[k];
  }
  EXPECT_DOUBLE_EQ(e12, 0.8);
  EXPECT_GE(e12, e * e);
}

TEST(Properties, AllSuitesPass) {
  for (cv::Property p : cv::kAllProperties) {
    const auto report = cv::run_property_suite(p, 300, 11);
    EXPECT_TRUE(report.passed()) << report.property << " max_gap=" << report.max_gap;
    EXPECT_EQ(report.instances, 300u);
    EXPECT_GT(report.checks, 0u);
  }
}

TEST(Properties, SuitesAreReproducible) {
  const auto a = cv::run_property_suite(cv::Property::kConvexity, 50, 3);
  const auto b = cv::run_property_suite(cv::Property::kConvexity, 50, 3);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.max_gap, b.max_gap);
}

TEST(Properties, NegatedVarianceIsCaught) {
  const cv::ProfileFn broken = [](const cv::Game& g) {
    auto rows = cv::all_profiles(g);
    for (auto& r : rows) r.r = -r.r;
    return rows;
  };
  const auto report = cv::run_property_suite(cv::Property::kVarianceSumBound, 50, 1, {}, broken);
  EXPECT_FALSE(report.passed());
  ASSERT_FALSE(report.violations.empty());
  EXPECT_FALSE(report.violations[0].witness.empty());
  EXPECT_LE(report.violations.size(), cv::SuiteOptions{}.max_recorded);
}

TEST(Properties, PropertyNamesRoundTrip) {
  for (cv::Property p : cv::kAllProperties) {
    EXPECT_EQ(cv::parse_property(cv::property_name(p)), p);
  }
  EXPECT_FALSE(cv::parse_property("nonsense").has_value());
}

TEST(Conjecture, DoublingGivesRatioTwo) {
  cv::Xoshiro256 rng(8);
  const cv::Game g = cv::random_superadditive_game(4, rng);
  const auto single = cv::all_profiles(g);
  const auto doubled = cv::all_profiles(cv::add_games(g, g));
  for (std::size_t i = 0; i < single.size(); ++i) {
    EXPECT_NEAR(doubled[i].r / (2.0 * single[i].r), 2.0, 1e-9);
  }
}

TEST(Conjecture, SymmetricConvexPairsAtLeastOne) {
  cv::Xoshiro256 rng(21);
  for (int k = 0; k < 100; ++k) {
    const cv::Game g = cv::generate_symmetric(5, cv::random_convex_profile(5, rng));
    const cv::Game h = cv::generate_symmetric(5, cv::random_convex_profile(5, rng));
    const double denom = cv::profile(g, 0).r + cv::profile(h, 0).r;
    if (denom < 1e-12) continue;
    EXPECT_GE(cv::profile(cv::add_games(g, h), 0).r / denom, 1.0 - 1e-12);
  }
}

TEST(Conjecture, ProbeRecordsWitness) {
  const auto a = cv::conjecture_probe(3, 500, 4);
  ASSERT_TRUE(a.witness.has_value());
  EXPECT_GT(a.worst_ratio, 0.0);
  EXPECT_TRUE(cv::is_superadditive(a.witness->g));
  EXPECT_TRUE(cv::is_superadditive(a.witness->h));
  EXPECT_NEAR(a.witness->r_sum / (a.witness->r_g + a.witness->r_h), a.worst_ratio, 1e-12);
  const auto b = cv::conjecture_probe(3, 500, 4);
  EXPECT_EQ(a.worst_ratio, b.worst_ratio);
  EXPECT_THROW(cv::conjecture_probe(8, 1, 1), cv::Error);
}

TEST(Sweep, MajoritySizes) {
  const auto s = cv::asymptotic_sweep(cv::SweepFamily::kMajority, 0.0, {3, 11, 101});
  const double r[] = {2, 10, 100};
  const double scaled[] = {0.667, 0.909, 0.990};
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(s.rows[k].v, 1.0);
    EXPECT_EQ(s.rows[k].r, r[k]);
    EXPECT_NEAR(s.rows[k].scaled, scaled[k], 0.001);
  }
  EXPECT_TRUE(s.trend.monotone);
  EXPECT_TRUE(s.trend.approaching);
}

TEST(Sweep, WorkerReference) {
  EXPECT_DOUBLE_EQ(cv::sweep_reference(cv::SweepFamily::kProductionWorker, 0.5), 0.5);
  const auto s = cv::asymptotic_sweep(cv::SweepFamily::kProductionWorker, 0.5, {20, 100, 400});
  for (const auto& row : s.rows) EXPECT_NEAR(row.v, 0.5, 0.5 / row.n);
}

TEST(Sweep, MarketMatchesCapitalists) {
  const std::vector<int> sizes{10, 30, 101};
  const auto m = cv::asymptotic_sweep(cv::SweepFamily::kMarketTrader, 0.3, sizes);
  const auto p = cv::asymptotic_sweep(cv::SweepFamily::kProductionCapitalist, 0.3, sizes);
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    EXPECT_EQ(m.rows[k].n_a, p.rows[k].n_a);
    EXPECT_EQ(m.rows[k].v, p.rows[k].v);
    EXPECT_EQ(m.rows[k].r, p.rows[k].r);
  }
}

TEST(Sweep, UnrepresentableSize) {
  try {
    (void)cv::asymptotic_sweep(cv::SweepFamily::kProductionWorker, 0.5, {1});
    FAIL();
  } catch (const cv::Error& e) {
    EXPECT_EQ(e.kind(), cv::ErrorKind::kSizeNotRepresentable);
  }
}
