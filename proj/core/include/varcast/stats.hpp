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

#ifndef VARCAST_STATS_HPP_
#define VARCAST_STATS_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "varcast/series_frame.hpp"

namespace varcast {

double mean(std::span<const double> x);

/// Pearson correlation of every column pair, (T-1)-denominator covariance.
/// Throws kDegenerateColumn naming the first zero-variance column.
Eigen::MatrixXd correlation_matrix(const SeriesFrame& frame);

/// Sample autocorrelation at lags 0..max_lag. Autocovariances use the
/// full-sample mean and the biased 1/T divisor, so acf[0] == 1.
std::vector<double> acf(std::span<const double> series, std::size_t max_lag);

/// `order`-th difference; the result is `order` elements shorter.
std::vector<double> diff(std::span<const double> series, std::size_t order = 1);

}  // namespace varcast

#endif  // VARCAST_STATS_HPP_
