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

#ifndef VARCAST_FORECAST_HPP_
#define VARCAST_FORECAST_HPP_

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "varcast/date.hpp"
#include "varcast/series_frame.hpp"
#include "varcast/var_model.hpp"

namespace varcast {

/// h-step forecast. Row s-1 of each matrix refers to origin_date + s.
struct Forecast {
  Date origin_date;
  std::size_t horizon = 0;
  std::vector<std::string> names;
  Eigen::MatrixXd point;
  Eigen::MatrixXd lower;
  Eigen::MatrixXd upper;
  double level = 0.95;

  Date target_date(std::size_t step) const { return origin_date + static_cast<int>(step); }
};

/// MA weights Psi_0 = I, Psi_i = sum_{j=1..min(i,p)} Psi_{i-j} Phi_j,
/// returned for i = 0..h-1.
std::vector<Eigen::MatrixXd> psi_weights(const VarModel& model, std::size_t h);

/// Two-sided standard normal quantile for a central interval of `level`.
double normal_band_multiplier(double level);

/// Point forecasts by forward recursion from the last p rows of `history`,
/// with Gaussian bands from the MSE matrices sum_{i<s} Psi_i G Psi_i'.
/// Coefficient-estimation uncertainty is not included.
Forecast forecast(const VarModel& model, const SeriesFrame& history, std::size_t h,
                  double level = 0.95);

/// Floors lower bounds of the listed variables at zero. Breaks band
/// symmetry; opt-in for count series.
void clip_lower_at_zero(Forecast& fc, std::span<const std::string> variables);

/// CSV: date,variable,point,lower,upper,level with 6 significant digits.
void write_forecast_csv(const Forecast& fc, std::ostream& out);

}  // namespace varcast

#endif  // VARCAST_FORECAST_HPP_
