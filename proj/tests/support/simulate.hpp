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

#ifndef VARCAST_TESTS_SUPPORT_SIMULATE_HPP_
#define VARCAST_TESTS_SUPPORT_SIMULATE_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "varcast/series_frame.hpp"
#include "varcast/var_model.hpp"

namespace varcast::testing {

inline std::vector<std::string> default_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

inline Eigen::VectorXd standard_normal(std::size_t m, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  Eigen::VectorXd v(static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) v(static_cast<Eigen::Index>(i)) = z(rng);
  return v;
}

/// Simulates X_t = c + sum_j A_j X_{t-j} + L z_t with L L' = sigma, after a
/// burn-in started from zero.
inline SeriesFrame simulate_var(const Eigen::VectorXd& c,
                                const std::vector<Eigen::MatrixXd>& coeffs,
                                const Eigen::MatrixXd& sigma, std::size_t rows,
                                std::mt19937_64& rng, std::size_t burn = 200) {
  const std::size_t m = static_cast<std::size_t>(c.size());
  const std::size_t p = coeffs.size();
  const Eigen::MatrixXd chol = sigma.llt().matrixL();
  std::vector<Eigen::VectorXd> path(p, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m)));
  Eigen::MatrixXd values(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(m));
  for (std::size_t t = 0; t < burn + rows; ++t) {
    Eigen::VectorXd next = c + chol * standard_normal(m, rng);
    for (std::size_t j = 1; j <= p; ++j) next += coeffs[j - 1] * path[path.size() - j];
    if (t >= burn) values.row(static_cast<Eigen::Index>(t - burn)) = next.transpose();
    path.push_back(std::move(next));
    path.erase(path.begin());
  }
  std::vector<Date> dates;
  for (std::size_t t = 0; t < rows; ++t) dates.push_back(Date(2020, 1, 1) + static_cast<int>(t));
  return SeriesFrame(std::move(dates), default_names(m), std::move(values));
}

inline SeriesFrame frame_from_columns(const std::vector<std::vector<double>>& columns,
                                      Date start = Date(2020, 1, 1)) {
  const std::size_t n = columns.front().size();
  Eigen::MatrixXd values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t t = 0; t < n; ++t)
      values(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(j)) = columns[j][t];
  std::vector<Date> dates;
  for (std::size_t t = 0; t < n; ++t) dates.push_back(start + static_cast<int>(t));
  return SeriesFrame(std::move(dates), default_names(columns.size()), std::move(values));
}

inline std::vector<double> random_walk(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  std::vector<double> out(n);
  double level = 0.0;
  for (auto& v : out) v = level += z(rng);
  return out;
}

inline std::vector<double> white_noise(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  std::vector<double> out(n);
  for (auto& v : out) v = z(rng);
  return out;
}

inline std::vector<double> ar1(std::size_t n, double rho, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  std::vector<double> out(n);
  double prev = 0.0;
  for (std::size_t i = 0; i < 100; ++i) prev = rho * prev + z(rng);
  for (auto& v : out) v = prev = rho * prev + z(rng);
  return out;
}

/// VarModel with the given coefficients and no estimation metadata.
inline VarModel make_model(const Eigen::VectorXd& intercept,
                           const std::vector<Eigen::MatrixXd>& coeffs,
                           const Eigen::MatrixXd& resid_cov) {
  VarModel m;
  m.p = coeffs.size();
  m.names = default_names(static_cast<std::size_t>(intercept.size()));
  m.intercept = intercept;
  m.coeffs = coeffs;
  m.resid_cov = resid_cov;
  return m;
}

}  // namespace varcast::testing

#endif  // VARCAST_TESTS_SUPPORT_SIMULATE_HPP_
