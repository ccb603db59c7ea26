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

TEST(Coalition, EncodeDecodeRoundTrip) {
  for (cv::Coalition::mask_type m = 0; m < 64; ++m) {
    const auto s = Coalition::from_mask(m);
    EXPECT_EQ(Coalition::of(s.members()), s);
  }
  EXPECT_THROW(Coalition::of({1, 1}), cv::Error);
  EXPECT_EQ(Coalition::of({0, 2}).size(), 2u);
  EXPECT_TRUE(Coalition::of({0}).subset_of(Coalition::of({0, 2})));
}

TEST(Coalition, InsertZeroBitSkipsPlayer) {
  // compact 0b11 with a hole at bit 1 -> 0b101
  EXPECT_EQ(cv::insert_zero_bit(0b11, 1), 0b101u);
  EXPECT_EQ(cv::insert_zero_bit(0b11, 0), 0b110u);
}

TEST(Game, TabularFromCoalitionMap) {
  const cv::Game g = three_player_game();
  EXPECT_EQ(g.n_players(), 3);
  EXPECT_DOUBLE_EQ(g.value(Coalition::of({0, 1})), 24.0);
  EXPECT_DOUBLE_EQ(g.value(Coalition{}), 0.0);
  EXPECT_DOUBLE_EQ(cv::marginal_contribution(g, 0, Coalition::of({1, 2})), 42.0);
  EXPECT_THROW(cv::marginal_contribution(g, 0, Coalition::of({0, 1})), cv::Error);
}

TEST(Game, SmallestGame) {
  const cv::Game g = cv::make_tabular(1, std::map<Coalition, double>{{Coalition::of({0}), 5.0}});
  EXPECT_DOUBLE_EQ(g.value(Coalition{}), 0.0);
  EXPECT_DOUBLE_EQ(g.value(Coalition::of({0})), 5.0);
}

TEST(Game, MissingCoalitionIsReported) {
  const std::map<Coalition, double> values{{Coalition::of({0}), 1.0},
                                           {Coalition::of({1}), 1.0}};
  try {
    (void)cv::make_tabular(2, values);
    FAIL() << "expected MissingCoalition";
  } catch (const cv::Error& e) {
    EXPECT_EQ(e.kind(), cv::ErrorKind::kMissingCoalition);
  }
}

TEST(Game, TwoTypeWorth) {
  const cv::Game g = cv::generate_two_type(4, 1, cv::sqrt_product_worth);
  EXPECT_DOUBLE_EQ(g.value(g.grand_coalition()), 2.0);
  const cv::Game h = cv::generate_two_type(2, 2, cv::sqrt_product_worth);
  const auto& tt = *h.as<cv::TwoTypeForm>();
  EXPECT_DOUBLE_EQ(tt.at(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(tt.at(2, 0), 0.0);
  EXPECT_DOUBLE_EQ(cv::market_worth(3, 5), std::sqrt(15.0));
}

TEST(Game, AdditiveForm) {
  const cv::Game g = cv::generate_additive({1, 2, 3});
  EXPECT_DOUBLE_EQ(g.value(Coalition::of({0, 2})), 4.0);
  for (cv::Coalition::mask_type m = 0; m < 8; ++m) {
    const auto s = Coalition::from_mask(m);
    for (cv::PlayerId i = 0; i < 3; ++i) {
      if (!s.contains(i)) {
        EXPECT_EQ(cv::marginal_contribution(g, i, s), i + 1.0);
      }
    }
  }
  EXPECT_DOUBLE_EQ(cv::generate_additive({0, 0}).value(Coalition::grand(2)), 0.0);
  EXPECT_DOUBLE_EQ(cv::generate_additive({5}).value(Coalition::of({0})), 5.0);
}

TEST(Game, MajoritySizeProfile) {
  EXPECT_EQ(cv::symmetric_size_profile(cv::generate_majority(3)),
            (std::vector<double>{0, 0, 3, 3}));
  EXPECT_EQ(cv::symmetric_size_profile(cv::generate_majority(1)),
            (std::vector<double>{0, 1}));
  EXPECT_DOUBLE_EQ(cv::generate_majority(5).value(Coalition::of({0, 1, 2})), 5.0);
  EXPECT_DOUBLE_EQ(cv::marginal_contribution(cv::generate_majority(3), 0, Coalition{}), 0.0);
}

TEST(Game, SymmetricGenerator) {
  const cv::Game g = cv::generate_symmetric(3, {0, 0, 0, 6});
  EXPECT_DOUBLE_EQ(g.value(Coalition::of({0, 1})), 0.0);
  EXPECT_DOUBLE_EQ(g.value(Coalition::grand(3)), 6.0);
  EXPECT_THROW(cv::generate_symmetric(3, {0, 1}), cv::Error);
}

TEST(Game, ScaleAddMix) {
  const cv::Game g = three_player_game();
  EXPECT_DOUBLE_EQ(cv::scale_game(g, 2).value(Coalition::of({0, 1})), 48.0);
  const cv::Game m = cv::mix_games(g, g, 0.3);
  for (cv::Coalition::mask_type s = 0; s < 8; ++s) {
    EXPECT_DOUBLE_EQ(m.value(Coalition::from_mask(s)), g.value(Coalition::from_mask(s)));
  }
  const cv::Game sum = cv::add_games(cv::generate_additive({1, 2}), cv::generate_additive({3, 4}));
  ASSERT_NE(sum.as<cv::AdditiveForm>(), nullptr);
  EXPECT_EQ(sum.as<cv::AdditiveForm>()->weights, (std::vector<double>{4, 6}));
}

TEST(Game, Superadditivity) {
  EXPECT_TRUE(cv::is_superadditive(three_player_game()));
  EXPECT_TRUE(cv::is_superadditive(cv::generate_additive({1, -2, 3})));
  const std::map<Coalition, double> v{{Coalition::of({0}), 1.0},
                                      {Coalition::of({1}), 1.0},
                                      {Coalition::of({0, 1}), 1.0}};
  EXPECT_FALSE(cv::is_superadditive(cv::make_tabular(2, v)));
}

TEST(Game, SymmetricConvexity) {
  EXPECT_TRUE(cv::is_symmetric_convex(cv::generate_symmetric(3, {0, 1, 4, 9})));
  EXPECT_FALSE(cv::is_symmetric_convex(cv::generate_symmetric(3, {0, 2, 3, 3})));
  EXPECT_FALSE(cv::is_symmetric_convex(cv::generate_majority(5)));
}

TEST(Game, ExpandMatchesClosedForm) {
  const cv::Game g = cv::generate_two_type(3, 2, cv::sqrt_product_worth);
  const cv::Game t = cv::expand_to_tabular(g);
  for (cv::Coalition::mask_type s = 0; s < 32; ++s) {
    EXPECT_DOUBLE_EQ(t.value(Coalition::from_mask(s)), g.value(Coalition::from_mask(s)));
  }
}

TEST(Game, GrowingCoalitionTracksMarginals) {
  const cv::Game g = three_player_game();
  cv::GrowingCoalition grow(g);
  EXPECT_DOUBLE_EQ(grow.marginal(1), 3.0);
  grow.add(1);
  EXPECT_DOUBLE_EQ(grow.marginal(0), 21.0);
  grow.add(0);
  EXPECT_DOUBLE_EQ(grow.marginal(2), 36.0);
}

TEST(Game, FingerprintDistinguishesGames) {
  EXPECT_EQ(cv::fingerprint(three_player_game()), cv::fingerprint(three_player_game()));
  EXPECT_NE(cv::fingerprint(three_player_game()),
            cv::fingerprint(cv::scale_game(three_player_game(), 2)));
}

TEST(Weighting, ShapleyWeights) {
  EXPECT_NEAR(cv::shapley_weight(0, 3), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(cv::shapley_weight(1, 3), 1.0 / 6.0, 1e-15);
  EXPECT_THROW(cv::shapley_weight(3, 3), cv::Error);
  for (int n = 1; n <= 12; ++n) {
    const auto w = cv::shapley_weights(n);
    double total = 0.0;
    for (int s = 0; s < n; ++s) total += cv::binomial_coefficient(n - 1, s) * w[s];
    EXPECT_NEAR(total, 1.0, 1e-12) << "n = " << n;
  }
}

TEST(Weighting, BanzhafWeights) {
  EXPECT_DOUBLE_EQ(cv::banzhaf_weight(1), 1.0);
  EXPECT_DOUBLE_EQ(cv::banzhaf_weight(4), 0.125);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_NEAR(std::ldexp(1.0, n - 1) * cv::banzhaf_weight(n), 1.0, 1e-15);
  }
}

TEST(Weighting, CustomMustNormalize) {
  // n = 3 per-coalition weights: 1*p0 + 2*p1 + 1*p2 must be 1.
  EXPECT_NO_THROW(cv::Weighting::custom({0.5, 0.125, 0.25}));
  EXPECT_THROW(cv::Weighting::custom({0.5, 0.25, 0.25}), cv::Error);
  EXPECT_THROW(cv::Weighting::custom({1.5, -0.25, 0.0}), cv::Error);
}
