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

#include "varcast/forecast.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <boost/math/distributions/normal.hpp>

#include "varcast/error.hpp"

namespace varcast {

std::vector<Eigen::MatrixXd> psi_weights(const VarModel& model, std::size_t h) {
  const Eigen::Index m = static_cast<Eigen::Index>(model.m());
  std::vector<Eigen::MatrixXd> psi;
  psi.reserve(h);
  if (h == 0) return psi;
  psi.push_back(Eigen::MatrixXd::Identity(m, m));
  for (std::size_t i = 1; i < h; ++i) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(m, m);
    for (std::size_t j = 1; j <= std::min(i, model.p); ++j) {
      acc += psi[i - j] * model.coeffs[j - 1];
    }
    psi.push_back(std::move(acc));
  }
  return psi;
}

double normal_band_multiplier(double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(Errc::kInvalidArgument, "confidence level must lie in (0, 1)");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>{},
                               (1.0 + level) / 2.0);
}

Forecast forecast(const VarModel& model, const SeriesFrame& history, std::size_t h,
                  double level) {
  if (h < 1) {
    throw Error(Errc::kInvalidHorizon, "forecast horizon must be at least 1");
  }
  if (history.names() != model.names) {
    throw Error(Errc::kSchema, "history columns do not match the model's variables");
  }
  if (history.rows() < model.p) {
    throw Error(Errc::kInsufficientData,
                "history needs at least " + std::to_string(model.p) + " rows");
  }
  const double z = normal_band_multiplier(level);
  const std::size_t m = model.m();
  const std::size_t p = model.p;

  // Lag buffer: path[0..p-1] are observed rows, oldest first.
  std::vector<Eigen::VectorXd> path;
  const Eigen::MatrixXd& values = history.values();
  for (std::size_t i = history.rows() - p; i < history.rows(); ++i) {
    path.push_back(values.row(static_cast<Eigen::Index>(i)).transpose());
  }

  Forecast fc;
  fc.origin_date = history.last_date();
  fc.horizon = h;
  fc.names = model.names;
  fc.level = level;
  fc.point.resize(static_cast<Eigen::Index>(h), static_cast<Eigen::Index>(m));
  for (std::size_t s = 1; s <= h; ++s) {
    Eigen::VectorXd next = model.intercept;
    for (std::size_t j = 1; j <= p; ++j) next += model.coeffs[j - 1] * path[path.size() - j];
    fc.point.row(static_cast<Eigen::Index>(s - 1)) = next.transpose();
    path.push_back(std::move(next));
  }

  const auto psi = psi_weights(model, h);
  Eigen::MatrixXd mse = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m),
                                              static_cast<Eigen::Index>(m));
  fc.lower.resize(fc.point.rows(), fc.point.cols());
  fc.upper.resize(fc.point.rows(), fc.point.cols());
  for (std::size_t s = 1; s <= h; ++s) {
    mse += psi[s - 1] * model.resid_cov * psi[s - 1].transpose();
    const Eigen::Index r = static_cast<Eigen::Index>(s - 1);
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(m); ++j) {
      const double half = z * std::sqrt(std::max(0.0, mse(j, j)));
      fc.lower(r, j) = fc.point(r, j) - half;
      fc.upper(r, j) = fc.point(r, j) + half;
    }
  }
  return fc;
}

void clip_lower_at_zero(Forecast& fc, std::span<const std::string> variables) {
  for (std::size_t j = 0; j < fc.names.size(); ++j) {
    if (std::find(variables.begin(), variables.end(), fc.names[j]) == variables.end())
      continue;
    auto col = fc.lower.col(static_cast<Eigen::Index>(j));
    col = col.cwiseMax(0.0);
  }
}

void write_forecast_csv(const Forecast& fc, std::ostream& out) {
  out << "date,variable,point,lower,upper,level\n";
  char buf[160];
  for (std::size_t s = 1; s <= fc.horizon; ++s) {
    const std::string date = fc.target_date(s).iso();
    const Eigen::Index r = static_cast<Eigen::Index>(s - 1);
    for (std::size_t j = 0; j < fc.names.size(); ++j) {
      const Eigen::Index c = static_cast<Eigen::Index>(j);
      std::snprintf(buf, sizeof(buf), ",%.6g,%.6g,%.6g,%.6g\n", fc.point(r, c),
                    fc.lower(r, c), fc.upper(r, c), fc.level);
      out << date << ',' << fc.names[j] << buf;
    }
  }
}

}  // namespace varcast
