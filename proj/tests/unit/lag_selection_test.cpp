// Copyright 2026 The varcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "support/simulate.hpp"
#include "varcast/error.hpp"
#include "varcast/var_model.hpp"

namespace varcast {
namespace {

std::vector<CriteriaRow> table_from(const std::vector<double>& aic) {
  std::vector<CriteriaRow> rows;
  for (std::size_t i = 0; i < aic.size(); ++i) {
    rows.push_back({i + 1, {aic[i], aic[i], aic[i], aic[i]}});
  }
  return rows;
}

TEST(ChooseLagsTest, PlateauAicColumnSelectsEight) {
  auto rows = table_from({5.57, 5.50, 5.48, 5.47, 5.45, 5.44, 5.42, 5.39, 5.39, 5.39});
  EXPECT_EQ(choose_lags(rows).aic, 8u);
}

TEST(ChooseLagsTest, MonotoneIncreasingPicksOne) {
  std::vector<CriteriaRow> rows;
  for (std::size_t p = 1; p <= 6; ++p) {
    const double v = static_cast<double>(p);
    rows.push_back({p, {v, 2 * v, 3 * v, 4 * v}});
  }
  auto c = choose_lags(rows);
  EXPECT_EQ(c.aic, 1u);
  EXPECT_EQ(c.hqc, 1u);
  EXPECT_EQ(c.sc, 1u);
  EXPECT_EQ(c.fpe, 1u);
}

TEST(SelectLagTest, CommonSampleAndShape) {
  std::mt19937_64 rng(1);
  auto f = testing::simulate_var(Eigen::Vector2d::Zero(), {Eigen::Matrix2d::Identity() * 0.5},
                                 Eigen::Matrix2d::Identity(), 200, rng);
  auto t = select_lag(f, 6);
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_EQ(t.effective_sample, 194u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(t.rows[i].lag, i + 1);
  // Row 3 equals a direct fit of lag 3 on the common sample.
  auto ic = information_criteria(fit_var_from(f, 3, 6));
  EXPECT_EQ(t.rows[2].values.aic, ic.aic);
}

TEST(SelectLagTest, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(2);
  auto f = testing::simulate_var(Eigen::Vector3d::Zero(), {Eigen::Matrix3d::Identity() * 0.4},
                                 Eigen::Matrix3d::Identity(), 300, rng);
  auto a = select_lag(f, 8, 1);
  auto b = select_lag(f, 8, 4);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(a.rows[i].values.aic, b.rows[i].values.aic);
    EXPECT_EQ(a.rows[i].values.fpe, b.rows[i].values.fpe);
  }
}

TEST(SelectLagTest, ScConsistentForVarTwo) {
  std::mt19937_64 rng(1500);
  Eigen::Matrix2d a1;
  a1 << 0.5, 0.1, 0.0, 0.3;
  Eigen::Matrix2d a2;
  a2 << -0.3, 0.0, 0.1, 0.25;
  int hits = 0;
  for (int rep = 0; rep < 100; ++rep) {
    auto f = testing::simulate_var(Eigen::Vector2d(1, 1), {a1, a2}, Eigen::Matrix2d::Identity(),
                                   1500, rng);
    hits += select_lag(f, 6).chosen.sc == 2;
  }
  EXPECT_GE(hits, 80);
}

TEST(SelectLagTest, ScNeverExceedsAic) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::Matrix2d a1;
    a1 << u(rng), u(rng), u(rng), u(rng);
    auto f = testing::simulate_var(Eigen::Vector2d::Zero(), {a1}, Eigen::Matrix2d::Identity(), 120,
                                   rng);
    auto t = select_lag(f, 5);
    EXPECT_LE(t.chosen.sc, t.chosen.aic);
    EXPECT_LE(t.chosen.hqc, t.chosen.aic);
  }
}

TEST(SelectLagTest, FailingLagIsAnnotated) {
  std::mt19937_64 rng(4);
  auto f = testing::simulate_var(Eigen::Vector3d::Zero(), {Eigen::Matrix3d::Identity() * 0.4},
                                 Eigen::Matrix3d::Identity(), 30, rng);
  try {
    select_lag(f, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInsufficientData);
    EXPECT_EQ(std::string(e.what()).rfind("lag ", 0), 0u);
  }
}

}  // namespace
}  // namespace varcast
