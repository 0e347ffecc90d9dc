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

#ifndef VARCAST_SRC_OLS_HPP_
#define VARCAST_SRC_OLS_HPP_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace varcast::detail {

struct OlsFit {
  Eigen::MatrixXd coef;       // k x q, one column per response
  Eigen::MatrixXd residuals;  // n x q
  Eigen::MatrixXd xtx_inv;    // k x k, (X'X)^{-1}
};

/// Least squares of every column of `y` on `x` via column-pivoted QR.
/// Throws kCollinearity naming the dependent regressors (from
/// `regressor_names`) when `x` is rank deficient.
OlsFit ols(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
           const std::vector<std::string>& regressor_names);

}  // namespace varcast::detail

#endif  // VARCAST_SRC_OLS_HPP_
