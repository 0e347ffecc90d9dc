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

#include "ols.hpp"

#include "varcast/error.hpp"

namespace varcast::detail {

OlsFit ols(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y,
           const std::vector<std::string>& regressor_names) {
  const Eigen::Index k = x.cols();
  if (x.rows() < k) {
    throw Error(Errc::kInsufficientData,
                "regression has " + std::to_string(x.rows()) + " rows for " +
                    std::to_string(k) + " regressors");
  }

  // Scale columns to unit norm before the rank decision so that regressors
  // measured in very different units (counts vs. percent) are not flagged.
  Eigen::VectorXd scale = x.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (scale(j) == 0.0) {
      std::string name = j < static_cast<Eigen::Index>(regressor_names.size())
                             ? regressor_names[j]
                             : "column " + std::to_string(j);
      throw Error(Errc::kCollinearity, "regressor '" + name + "' is identically zero");
    }
  }
  Eigen::MatrixXd xs = x * scale.cwiseInverse().asDiagonal();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
  qr.setThreshold(1e-12);
  if (qr.rank() < k) {
    std::string cols;
    const auto& perm = qr.colsPermutation().indices();
    for (Eigen::Index i = qr.rank(); i < k; ++i) {
      Eigen::Index j = perm(i);
      if (!cols.empty()) cols += ", ";
      cols += j < static_cast<Eigen::Index>(regressor_names.size())
                  ? regressor_names[j]
                  : "column " + std::to_string(j);
    }
    throw Error(Errc::kCollinearity,
                "regressor matrix is rank deficient; linearly dependent: " + cols);
  }

  OlsFit fit;
  Eigen::MatrixXd coef_scaled = qr.solve(y);
  fit.coef = scale.cwiseInverse().asDiagonal() * coef_scaled;
  fit.residuals = y - x * fit.coef;

  // (X'X)^{-1} = D^{-1} P R^{-1} R^{-T} P' D^{-1}
  Eigen::MatrixXd r = qr.matrixR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
  Eigen::MatrixXd rinv = r.triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXd::Identity(k, k));
  Eigen::MatrixXd inner = rinv * rinv.transpose();
  Eigen::MatrixXd p = qr.colsPermutation();
  Eigen::MatrixXd xs_inv = p * inner * p.transpose();
  fit.xtx_inv = scale.cwiseInverse().asDiagonal() * xs_inv *
                scale.cwiseInverse().asDiagonal();
  return fit;
}

}  // namespace varcast::detail
