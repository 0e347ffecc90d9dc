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

#include "varcast/var_model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>

#include "ols.hpp"
#include "varcast/error.hpp"
#include "varcast/stats.hpp"

namespace varcast {
namespace {

constexpr double kStabilityTol = 1e-8;

std::vector<std::string> regressor_names(const std::vector<std::string>& names,
                                         std::size_t p) {
  std::vector<std::string> out{"const"};
  for (std::size_t j = 1; j <= p; ++j) {
    for (const auto& n : names) out.push_back(n + ".L" + std::to_string(j));
  }
  return out;
}

Eigen::MatrixXd design_matrix(const Eigen::MatrixXd& values, std::size_t p,
                              std::size_t first_target) {
  const Eigen::Index rows = values.rows() - static_cast<Eigen::Index>(first_target);
  const Eigen::Index m = values.cols();
  Eigen::MatrixXd x(rows, 1 + m * static_cast<Eigen::Index>(p));
  x.col(0).setOnes();
  for (std::size_t j = 1; j <= p; ++j) {
    x.middleCols(1 + m * static_cast<Eigen::Index>(j - 1), m) =
        values.middleRows(static_cast<Eigen::Index>(first_target - j), rows);
  }
  return x;
}

Eigen::VectorXd column_rms(const Eigen::MatrixXd& y) {
  return (y.colwise().squaredNorm() / static_cast<double>(std::max<Eigen::Index>(1, y.rows())))
      .cwiseSqrt()
      .transpose();
}

}  // namespace

VarModel fit_var_from(const SeriesFrame& frame, std::size_t p, std::size_t first_target) {
  if (p == 0) {
    throw Error(Errc::kInvalidLag, "VAR lag order must be at least 1");
  }
  if (first_target < p) {
    throw Error(Errc::kInvalidArgument, "VAR sample starts before the first full lag window");
  }
  const std::size_t m = frame.cols();
  const std::size_t k = m * p + 1;
  const std::size_t n = frame.rows() > first_target ? frame.rows() - first_target : 0;
  if (n <= k) {
    throw Error(Errc::kInsufficientData,
                "VAR(" + std::to_string(p) + ") on " + std::to_string(m) +
                    " series needs more than " + std::to_string(k) +
                    " usable rows, got " + std::to_string(n));
  }

  const Eigen::MatrixXd& values = frame.values();
  Eigen::MatrixXd x = design_matrix(values, p, first_target);
  Eigen::MatrixXd y = values.bottomRows(static_cast<Eigen::Index>(n));
  detail::OlsFit fit = detail::ols(x, y, regressor_names(frame.names(), p));

  VarModel model;
  model.p = p;
  model.names = frame.names();
  model.n_obs = n;
  model.intercept = fit.coef.row(0).transpose();
  const Eigen::Index mi = static_cast<Eigen::Index>(m);
  for (std::size_t j = 0; j < p; ++j) {
    // Rows of fit.coef for lag j+1 hold regressor blocks; transpose to get
    // (equation x variable).
    model.coeffs.push_back(
        fit.coef.middleRows(1 + mi * static_cast<Eigen::Index>(j), mi).transpose());
  }
  model.residuals = std::move(fit.residuals);
  model.resid_cov = (model.residuals.transpose() * model.residuals) /
                    static_cast<double>(n - k);
  model.resid_cov = 0.5 * (model.resid_cov + model.resid_cov.transpose());
  model.response_scale = column_rms(y);
  return model;
}

VarModel fit_var(const SeriesFrame& frame, std::size_t p) {
  return fit_var_from(frame, p, p);
}

VarModel compute_residuals(const VarModel& model, const SeriesFrame& frame) {
  if (frame.names() != model.names) {
    throw Error(Errc::kSchema, "frame columns do not match the model's variables");
  }
  if (frame.rows() <= model.p) {
    throw Error(Errc::kInsufficientData, "frame shorter than the model's lag order");
  }
  const std::size_t n = frame.rows() - model.p;
  const Eigen::MatrixXd& values = frame.values();
  Eigen::MatrixXd y = values.bottomRows(static_cast<Eigen::Index>(n));
  Eigen::MatrixXd fitted = Eigen::MatrixXd::Zero(y.rows(), y.cols());
  fitted.rowwise() += model.intercept.transpose();
  for (std::size_t j = 1; j <= model.p; ++j) {
    fitted += values.middleRows(static_cast<Eigen::Index>(model.p - j),
                                static_cast<Eigen::Index>(n)) *
              model.coeffs[j - 1].transpose();
  }
  VarModel out = model;
  out.residuals = y - fitted;
  out.n_obs = n;
  out.response_scale = column_rms(y);
  return out;
}

Eigen::MatrixXd companion_matrix(const VarModel& model) {
  const Eigen::Index m = static_cast<Eigen::Index>(model.m());
  const Eigen::Index mp = m * static_cast<Eigen::Index>(model.p);
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(mp, mp);
  for (std::size_t j = 0; j < model.p; ++j) {
    c.block(0, m * static_cast<Eigen::Index>(j), m, m) = model.coeffs[j];
  }
  if (model.p > 1) c.bottomLeftCorner(mp - m, mp - m).setIdentity();
  return c;
}

StabilityReport check_stability(const VarModel& model) {
  Eigen::MatrixXd c = companion_matrix(model);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, /*computeEigenvectors=*/false);
  StabilityReport report;
  const auto& ev = solver.eigenvalues();
  report.eigen_moduli.reserve(static_cast<std::size_t>(ev.size()));
  for (Eigen::Index i = 0; i < ev.size(); ++i) report.eigen_moduli.push_back(std::abs(ev(i)));
  std::sort(report.eigen_moduli.begin(), report.eigen_moduli.end(), std::greater<>());
  const double max_mod = report.eigen_moduli.empty() ? 0.0 : report.eigen_moduli.front();
  report.margin = 1.0 - max_mod;
  report.is_stable = max_mod < 1.0 - kStabilityTol;
  return report;
}

Eigen::VectorXd implied_mean(const VarModel& model) {
  const Eigen::Index m = static_cast<Eigen::Index>(model.m());
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(m, m);
  for (const auto& phi : model.coeffs) a -= phi;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) {
    throw Error(Errc::kInvalidArgument, "I - sum(Phi) is singular; the mean is undefined");
  }
  return lu.solve(model.intercept);
}

InformationCriteria information_criteria(const VarModel& model) {
  if (model.residuals.rows() == 0) {
    throw Error(Errc::kInvalidArgument, "information criteria need model residuals");
  }
  const double n = static_cast<double>(model.residuals.rows());
  const double m = static_cast<double>(model.m());
  const double p = static_cast<double>(model.p);
  const double d = m * p + 1.0;

  Eigen::MatrixXd sigma = (model.residuals.transpose() * model.residuals) / n;
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) {
    throw Error(Errc::kDegenerateCovariance,
                "residual covariance is singular (determinant <= 0)");
  }
  double log_det = 0.0;
  const Eigen::MatrixXd l = llt.matrixL();
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    // Pivot relative to the variable's own variance: a column that is a
    // linear combination of earlier ones up to rounding counts as singular.
    if (!(l(i, i) * l(i, i) > 1e-12 * sigma(i, i))) {
      throw Error(Errc::kDegenerateCovariance,
                  "residual covariance is singular (determinant <= 0)");
    }
    log_det += 2.0 * std::log(l(i, i));
  }
  if (!std::isfinite(log_det)) {
    throw Error(Errc::kDegenerateCovariance, "residual covariance determinant not finite");
  }

  const double params = p * m * m;
  InformationCriteria ic;
  ic.aic = log_det + 2.0 * params / n;
  ic.hqc = log_det + 2.0 * std::log(std::log(n)) * params / n;
  ic.sc = log_det + std::log(n) * params / n;
  ic.fpe = std::exp(log_det) * std::pow((n + d) / (n - d), m);
  return ic;
}

std::vector<ResidualDiagnostic> residual_diagnostics(const VarModel& model,
                                                     std::size_t lb_lags) {
  if (model.residuals.rows() == 0) {
    throw Error(Errc::kInvalidArgument, "residual diagnostics need model residuals");
  }
  const std::size_t fitted = model.m() * model.p;
  std::vector<ResidualDiagnostic> out;
  for (std::size_t j = 0; j < model.m(); ++j) {
    ResidualDiagnostic diag;
    diag.name = model.names[j];
    const Eigen::VectorXd col = model.residuals.col(static_cast<Eigen::Index>(j));
    std::span<const double> e(col.data(), static_cast<std::size_t>(col.size()));
    diag.mean = mean(e);

    const double rms = std::sqrt(col.squaredNorm() / static_cast<double>(col.size()));
    const double scale =
        model.response_scale.size() == static_cast<Eigen::Index>(model.m())
            ? std::max(1.0, model.response_scale(static_cast<Eigen::Index>(j)))
            : 1.0;
    if (rms <= 1e-10 * scale) {
      diag.exact_fit = true;
      out.push_back(std::move(diag));
      continue;
    }
    diag.acf = acf(e, lb_lags);
    diag.ljung_box = ljung_box(e, lb_lags, fitted);
    out.push_back(std::move(diag));
  }
  return out;
}

}  // namespace varcast
