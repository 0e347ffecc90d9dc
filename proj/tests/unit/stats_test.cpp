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

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "support/simulate.hpp"
#include "varcast/error.hpp"
#include "varcast/stats.hpp"

namespace varcast {
namespace {

// Brute-force sample autocorrelation straight from the definition.
double brute_acf(const std::vector<double>& x, std::size_t k) {
  double mu = 0.0;
  for (double v : x) mu += v;
  mu /= static_cast<double>(x.size());
  double num = 0.0, den = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) den += (x[t] - mu) * (x[t] - mu);
  for (std::size_t t = k; t < x.size(); ++t) num += (x[t] - mu) * (x[t - k] - mu);
  return num / den;
}

TEST(CorrelationTest, IdenticalAndNegatedColumns) {
  auto f = testing::frame_from_columns({{1, 3, 2, 5, 4}, {1, 3, 2, 5, 4}, {-1, -3, -2, -5, -4}});
  Eigen::MatrixXd c = correlation_matrix(f);
  EXPECT_DOUBLE_EQ(c(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(c(0, 2), -1.0);
  EXPECT_DOUBLE_EQ(c(1, 1), 1.0);
}

TEST(CorrelationTest, MatchesTextbookFormula) {
  // x = (1..5), y = (2,1,4,3,6): Sxy = 10, Sxx = 10, Syy = 14.8.
  const double expected = 10.0 / std::sqrt(10.0 * 14.8);
  auto f = testing::frame_from_columns({{1, 2, 3, 4, 5}, {2, 1, 4, 3, 6}});
  Eigen::MatrixXd c = correlation_matrix(f);
  EXPECT_NEAR(c(0, 1), expected, 1e-12);
  EXPECT_NEAR(c(1, 0), expected, 1e-12);
}

TEST(CorrelationTest, ZeroVarianceColumnIsNamed) {
  auto f = testing::frame_from_columns({{1, 2, 3}, {7, 7, 7}});
  try {
    correlation_matrix(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerateColumn);
    EXPECT_NE(std::string(e.what()).find("x2"), std::string::npos);
  }
}

TEST(CorrelationTest, InvariantUnderPositiveAffineRescaling) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.1, 50.0);
  for (int rep = 0; rep < 50; ++rep) {
    auto x = testing::white_noise(40, rng);
    auto y = testing::white_noise(40, rng);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += 0.5 * x[i];
    const double a = u(rng), b = u(rng) - 25.0;
    std::vector<double> xs(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xs[i] = a * x[i] + b;
    const double r0 = correlation_matrix(testing::frame_from_columns({x, y}))(0, 1);
    const double r1 = correlation_matrix(testing::frame_from_columns({xs, y}))(0, 1);
    EXPECT_NEAR(r0, r1, 1e-10);
  }
}

TEST(CorrelationTest, SymmetricUnitDiagonalBounded) {
  std::mt19937_64 rng(5);
  auto f = testing::frame_from_columns(
      {testing::white_noise(30, rng), testing::random_walk(30, rng), testing::white_noise(30, rng)});
  Eigen::MatrixXd c = correlation_matrix(f);
  EXPECT_TRUE(c.isApprox(c.transpose(), 0.0));
  for (Eigen::Index i = 0; i < 3; ++i) {
    EXPECT_EQ(c(i, i), 1.0);
    for (Eigen::Index j = 0; j < 3; ++j) EXPECT_LE(std::abs(c(i, j)), 1.0);
  }
}

TEST(AcfTest, LagZeroIsOne) {
  std::vector<double> x{3, 1, 4, 1, 5, 9, 2, 6};
  EXPECT_EQ(acf(x, 3)[0], 1.0);
}

TEST(AcfTest, AlternatingSeries) {
  std::vector<double> x{1, -1, 1, -1, 1, -1, 1, -1};
  // Mean zero; sum of lag-1 products is -7 against a lag-0 sum of 8.
  EXPECT_NEAR(acf(x, 1)[1], -7.0 / 8.0, 1e-15);
}

TEST(AcfTest, MatchesBruteForce) {
  std::vector<double> x{1, 2, 3, 4, 5, 6};
  const auto r = acf(x, 4);
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_NEAR(r[k], brute_acf(x, k), 1e-14);
  EXPECT_NEAR(r[1], 0.5, 1e-14);
}

TEST(AcfTest, Errors) {
  std::vector<double> x{1, 2, 3};
  EXPECT_THROW(acf(x, 3), Error);
  std::vector<double> c{2, 2, 2, 2};
  try {
    acf(c, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDegenerateSeries);
  }
}

TEST(AcfTest, WhiteNoiseStaysInsideBand) {
  std::mt19937_64 rng(20201124);
  auto x = testing::white_noise(2000, rng);
  const auto r = acf(x, 20);
  const double band = 3.0 / std::sqrt(2000.0);
  int inside = 0;
  for (std::size_t k = 1; k <= 20; ++k) inside += std::abs(r[k]) < band;
  EXPECT_GE(inside, 18);
}

TEST(DiffTest, Examples) {
  EXPECT_EQ(diff(std::vector<double>{3, 3, 3}), (std::vector<double>{0, 0}));
  EXPECT_EQ(diff(std::vector<double>{1, 4, 9, 16}), (std::vector<double>{3, 5, 7}));
  EXPECT_EQ(diff(std::vector<double>{1, 4, 9, 16}, 2), (std::vector<double>{2, 2}));
  try {
    diff(std::vector<double>{1, 2}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kInvalidLength);
  }
}

TEST(DiffTest, CumulativeSumReconstructs) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> u(0, 5000);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> x(50);
    for (auto& v : x) v = u(rng);
    auto d = diff(x);
    std::vector<double> back{x.front()};
    for (double v : d) back.push_back(back.back() + v);
    EXPECT_EQ(back, x);
  }
}

}  // namespace
}  // namespace varcast
