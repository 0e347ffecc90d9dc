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

// Response-surface constants for Dickey-Fuller / Engle-Granger inference.
//
// p-values: MacKinnon, J.G. (1994) "Approximate asymptotic distribution
// functions for unit-root and cointegration tests", Journal of Business &
// Economic Statistics 12, 167-176. Rows index the number of I(1) series in
// the test (1 = plain ADF, 2 = bivariate Engle-Granger).
//
// Critical values: MacKinnon, J.G. (2010) "Critical values for
// cointegration tests", Queen's Economics Department Working Paper 1227,
// Table 2. cv(T) = b_inf + b1/T + b2/T^2 + b3/T^3.

#include <array>
#include <cmath>
#include <limits>

#include <boost/math/distributions/normal.hpp>

#include "varcast/error.hpp"
#include "varcast/hypothesis_tests.hpp"

namespace varcast {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Surface {
  double tau_star;
  double tau_min;
  double tau_max;
  std::array<double, 3> small_p;  // polynomial in tau, ascending powers
  std::array<double, 4> large_p;
};

// no deterministic terms
constexpr std::array<Surface, 2> kNoConstant = {{
    {-1.04, -19.04, kInf, {0.6344, 1.2378, 3.2496e-2},
     {0.4797, 9.3557e-1, -0.6999e-1, 3.3066e-2}},
    {-1.53, -19.62, 1.51, {1.9129, 1.3857, 3.5322e-2},
     {1.5578, 8.558e-1, -2.083e-1, -3.3549e-2}},
}};

// constant
constexpr std::array<Surface, 2> kConstant = {{
    {-1.61, -18.83, 2.74, {2.1659, 1.4412, 3.8269e-2},
     {1.7339, 9.3202e-1, -1.2745e-1, -1.0368e-2}},
    {-2.62, -18.86, 0.92, {2.92, 1.5012, 3.9796e-2},
     {2.1945, 6.4695e-1, -2.9198e-1, -4.2377e-2}},
}};

struct CritRow {
  std::array<double, 4> one, five, ten;
};

constexpr CritRow kCritNoConstant = {{-2.56574, -2.2358, -3.627, 0.0},
                                     {-1.94100, -0.2686, -3.365, 31.223},
                                     {-1.61682, 0.2656, -2.714, 25.364}};

constexpr std::array<CritRow, 2> kCritConstant = {{
    {{-3.43035, -6.5393, -16.786, -79.433},
     {-2.86154, -2.8903, -4.234, -40.040},
     {-2.56677, -1.5384, -2.809, 0.0}},
    {{-3.89644, -10.9519, -33.527, 0.0},
     {-3.33613, -6.1101, -6.823, 0.0},
     {-3.04445, -4.2412, -2.720, 0.0}},
}};

template <std::size_t N>
double polyval(const std::array<double, N>& c, double x) {
  double acc = 0.0;
  for (std::size_t i = N; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

double response(const std::array<double, 4>& b, double n) {
  return b[0] + b[1] / n + b[2] / (n * n) + b[3] / (n * n * n);
}

void check_vars(int n_vars) {
  if (n_vars < 1 || n_vars > 2) {
    throw Error(Errc::kInvalidArgument,
                "response surfaces cover 1 or 2 series, got " + std::to_string(n_vars));
  }
}

}  // namespace

double mackinnon_p_value(double tau, AdfRegression regression, int n_vars) {
  check_vars(n_vars);
  if (std::isnan(tau)) return std::numeric_limits<double>::quiet_NaN();
  const Surface& s = regression == AdfRegression::kNone ? kNoConstant[n_vars - 1]
                                                        : kConstant[n_vars - 1];
  if (tau > s.tau_max) return 1.0;
  if (tau < s.tau_min) return 0.0;
  double z = tau <= s.tau_star ? polyval(s.small_p, tau) : polyval(s.large_p, tau);
  return boost::math::cdf(boost::math::normal_distribution<double>{}, z);
}

CriticalValues mackinnon_critical_values(AdfRegression regression, int n_vars,
                                         std::size_t n_obs) {
  check_vars(n_vars);
  if (regression == AdfRegression::kNone && n_vars != 1) {
    throw Error(Errc::kInvalidArgument,
                "no-constant critical values are tabulated for one series only");
  }
  const CritRow& row = regression == AdfRegression::kNone ? kCritNoConstant
                                                          : kCritConstant[n_vars - 1];
  double n = static_cast<double>(n_obs);
  return {response(row.one, n), response(row.five, n), response(row.ten, n)};
}

}  // namespace varcast
