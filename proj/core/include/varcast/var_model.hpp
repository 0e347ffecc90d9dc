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

#ifndef VARCAST_VAR_MODEL_HPP_
#define VARCAST_VAR_MODEL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "varcast/hypothesis_tests.hpp"
#include "varcast/series_frame.hpp"

namespace varcast {

/// Fitted VAR(p):  X_t = intercept + sum_j coeffs[j-1] * X_{t-j} + a_t.
struct VarModel {
  std::size_t p = 0;
  std::vector<std::string> names;
  Eigen::VectorXd intercept;
  std::vector<Eigen::MatrixXd> coeffs;  // coeffs[j] multiplies X_{t-j-1}
  /// Residual covariance with the small-sample divisor n_obs - m*p - 1.
  Eigen::MatrixXd resid_cov;
  /// (n_obs x m). Empty for models read back from disk until
  /// compute_residuals() is applied.
  Eigen::MatrixXd residuals;
  std::size_t n_obs = 0;
  /// RMS of each response over the fitted sample. Only used to recognise
  /// exact fits; not serialized.
  Eigen::VectorXd response_scale;

  std::size_t m() const { return names.size(); }
};

struct StabilityReport {
  std::vector<double> eigen_moduli;  // descending, length m*p
  bool is_stable = false;
  double margin = 0.0;  // 1 - max modulus
};

struct InformationCriteria {
  double aic = 0.0;
  double hqc = 0.0;
  double sc = 0.0;
  double fpe = 0.0;
};

struct CriteriaRow {
  std::size_t lag = 0;
  InformationCriteria values;
};

struct ChosenLags {
  std::size_t aic = 0;
  std::size_t hqc = 0;
  std::size_t sc = 0;
  std::size_t fpe = 0;
};

struct LagSelectionTable {
  std::vector<CriteriaRow> rows;
  ChosenLags chosen;
  std::size_t effective_sample = 0;
};

struct ResidualDiagnostic {
  std::string name;
  double mean = 0.0;
  /// Residuals vanish to rounding error; acf and Ljung-Box are undefined.
  bool exact_fit = false;
  std::vector<double> acf;  // lags 0..lb_lags
  std::optional<LjungBoxResult> ljung_box;
};

/// Per-equation OLS of X_t on [1, X_{t-1}, ..., X_{t-p}] for t = p..T-1.
/// Throws kInsufficientData when fewer than m*p + 2 usable rows remain and
/// kCollinearity (naming regressors) when the design is rank deficient.
VarModel fit_var(const SeriesFrame& frame, std::size_t p);

/// Same regression restricted to targets t = first_target..T-1 (with
/// first_target >= p). Lets several lag orders share one sample.
VarModel fit_var_from(const SeriesFrame& frame, std::size_t p, std::size_t first_target);

/// Re-derive residuals of `model` over `frame` without refitting.
VarModel compute_residuals(const VarModel& model, const SeriesFrame& frame);

/// The mp x mp companion matrix [Phi_1 ... Phi_p; I 0].
Eigen::MatrixXd companion_matrix(const VarModel& model);

/// Companion eigenvalue moduli; stable when all lie below 1 - 1e-8, which is
/// the same as every root of det(I - Phi_1 z - ... - Phi_p z^p) lying
/// outside the unit circle.
StabilityReport check_stability(const VarModel& model);

/// Solves (I - Phi_1 - ... - Phi_p) mu = intercept. Throws
/// kInvalidArgument if the system is singular (a unit root at z = 1).
Eigen::VectorXd implied_mean(const VarModel& model);

/// ln-det multivariate criteria on the ML covariance E'E/n, with
/// d = m*p + 1 regressors per equation:
///   aic = ln|S| + 2 p m^2 / n
///   hqc = ln|S| + 2 ln(ln n) p m^2 / n
///   sc  = ln|S| + ln(n) p m^2 / n
///   fpe = |S| ((n + d) / (n - d))^m
InformationCriteria information_criteria(const VarModel& model);

/// Per-criterion argmin; ties go to the smaller lag.
ChosenLags choose_lags(std::span<const CriteriaRow> rows);

/// Fits lags 1..p_max on the common sample t = p_max..T-1 and tabulates the
/// criteria. `threads` > 1 evaluates lags concurrently; the result does not
/// depend on it.
LagSelectionTable select_lag(const SeriesFrame& frame, std::size_t p_max,
                             unsigned threads = 1);

/// Mean, autocorrelations and Ljung-Box test (dof reduced by m*p) of every
/// residual column.
std::vector<ResidualDiagnostic> residual_diagnostics(const VarModel& model,
                                                     std::size_t lb_lags);

}  // namespace varcast

#endif  // VARCAST_VAR_MODEL_HPP_
