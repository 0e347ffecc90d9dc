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

#include "varcast/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "varcast/error.hpp"

namespace varcast {

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

Eigen::MatrixXd correlation_matrix(const SeriesFrame& frame) {
  const Eigen::Index n = static_cast<Eigen::Index>(frame.rows());
  const Eigen::Index m = static_cast<Eigen::Index>(frame.cols());
  if (n < 2) {
    throw Error(Errc::kInsufficientData, "correlation needs at least two rows");
  }
  Eigen::MatrixXd centered =
      frame.values().rowwise() - frame.values().colwise().mean();
  Eigen::MatrixXd cov = (centered.transpose() * centered) / static_cast<double>(n - 1);
  Eigen::VectorXd sd = cov.diagonal().cwiseSqrt();
  for (Eigen::Index j = 0; j < m; ++j) {
    if (!(sd(j) > 0.0)) {
      throw Error(Errc::kDegenerateColumn,
                  "column '" + frame.names()[j] + "' has zero variance");
    }
  }
  Eigen::MatrixXd corr(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    corr(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      double r = std::clamp(cov(i, j) / (sd(i) * sd(j)), -1.0, 1.0);
      corr(i, j) = r;
      corr(j, i) = r;
    }
  }
  return corr;
}

std::vector<double> acf(std::span<const double> series, std::size_t max_lag) {
  const std::size_t n = series.size();
  if (max_lag >= n) {
    throw Error(Errc::kInvalidLag, "acf lag " + std::to_string(max_lag) +
                                       " must be below series length " +
                                       std::to_string(n));
  }
  const double mu = mean(series);
  double c0 = 0.0;
  for (double v : series) c0 += (v - mu) * (v - mu);
  if (!(c0 > 0.0)) {
    throw Error(Errc::kDegenerateSeries, "acf of a constant series is undefined");
  }
  std::vector<double> out(max_lag + 1);
  out[0] = 1.0;
  for (std::size_t k = 1; k <= max_lag; ++k) {
    double ck = 0.0;
    for (std::size_t t = k; t < n; ++t) ck += (series[t] - mu) * (series[t - k] - mu);
    out[k] = ck / c0;
  }
  return out;
}

std::vector<double> diff(std::span<const double> series, std::size_t order) {
  if (order == 0) {
    throw Error(Errc::kInvalidArgument, "difference order must be positive");
  }
  if (series.size() <= order) {
    throw Error(Errc::kInvalidLength, "series of length " +
                                          std::to_string(series.size()) +
                                          " too short for difference order " +
                                          std::to_string(order));
  }
  std::vector<double> cur(series.begin(), series.end());
  for (std::size_t d = 0; d < order; ++d) {
    for (std::size_t t = 0; t + 1 < cur.size(); ++t) cur[t] = cur[t + 1] - cur[t];
    cur.pop_back();
  }
  return cur;
}

}  // namespace varcast
