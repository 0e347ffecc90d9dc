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

#include <cstring>
#include <random>

#include <gtest/gtest.h>

#include "support/simulate.hpp"
#include "varcast/error.hpp"
#include "varcast/model_io.hpp"

namespace varcast {
namespace {

bool bit_equal(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(double) * a.size()) == 0;
}

TEST(ModelIoTest, RoundTripIsBitExact) {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    auto f = testing::simulate_var(Eigen::Vector3d(1e5, -3.3, 0.1),
                                   {Eigen::Matrix3d::Identity() * 0.3, Eigen::Matrix3d::Constant(0.01)},
                                   Eigen::Matrix3d::Identity() * 1e3, 120, rng);
    VarModel m = fit_var(f, 2);
    VarModel back = model_from_json(model_to_json(m));
    EXPECT_EQ(back.p, m.p);
    EXPECT_EQ(back.names, m.names);
    EXPECT_EQ(back.n_obs, m.n_obs);
    EXPECT_TRUE(bit_equal(back.intercept, m.intercept));
    EXPECT_TRUE(bit_equal(back.resid_cov, m.resid_cov));
    for (std::size_t j = 0; j < m.p; ++j) EXPECT_TRUE(bit_equal(back.coeffs[j], m.coeffs[j]));
    EXPECT_EQ(model_to_json(back), model_to_json(m));
  }
}

TEST(ModelIoTest, CoefficientsAreRowMajorPerLag) {
  VarModel m = testing::make_model(Eigen::Vector2d(1, 2), {(Eigen::Matrix2d() << 1, 2, 3, 4).finished()},
                                   Eigen::Matrix2d::Identity());
  const std::string json = model_to_json(m);
  EXPECT_NE(json.find("\"coeffs\""), std::string::npos);
  VarModel back = model_from_json(json);
  EXPECT_EQ(back.coeffs[0](0, 1), 2.0);
  EXPECT_EQ(back.coeffs[0](1, 0), 3.0);
}

TEST(ModelIoTest, MalformedInput) {
  try {
    model_from_json("{not json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kParse);
  }
  try {
    model_from_json(R"({"p":1,"names":["a"],"intercept":[1,2],"coeffs":[[[0]]],"resid_cov":[[1]],"n_obs":3})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kSchema);
  }
}

}  // namespace
}  // namespace varcast
