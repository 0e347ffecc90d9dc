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

#ifndef VARCAST_TESTS_SUPPORT_POLY_ROOTS_HPP_
#define VARCAST_TESTS_SUPPORT_POLY_ROOTS_HPP_

// Stability oracle that never forms the companion matrix: the coefficients
// of det(I - Phi_1 z - ... - Phi_p z^p) are recovered by interpolation on
// roots of unity, and the polynomial's zeros are found by Aberth iteration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace varcast::testing {

using cd = std::complex<double>;

inline cd det_lag_polynomial(const std::vector<Eigen::MatrixXd>& coeffs, cd z) {
  const Eigen::Index m = coeffs.front().rows();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(m, m);
  cd zj = 1.0;
  for (const auto& phi : coeffs) {
    zj *= z;
    a -= zj * phi.cast<cd>();
  }
  return a.determinant();
}

/// Ascending coefficients of det(Phi(z)), degree <= m*p.
inline std::vector<double> det_polynomial_coefficients(const std::vector<Eigen::MatrixXd>& coeffs) {
  const std::size_t degree = static_cast<std::size_t>(coeffs.front().rows()) * coeffs.size();
  const std::size_t n = degree + 1;
  std::vector<cd> samples(n);
  for (std::size_t k = 0; k < n; ++k) {
    samples[k] = det_lag_polynomial(coeffs, std::polar(1.0, 2.0 * std::numbers::pi * k / n));
  }
  std::vector<double> c(n);
  for (std::size_t j = 0; j < n; ++j) {
    cd acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      acc += samples[k] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / n);
    }
    c[j] = (acc / static_cast<double>(n)).real();
  }
  return c;
}

inline std::vector<cd> polynomial_roots(std::vector<double> c) {
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  while (c.size() > 1 && std::abs(c.back()) <= 1e-13 * scale) c.pop_back();
  const std::size_t deg = c.size() - 1;
  if (deg == 0) return {};

  auto eval = [&](cd z, cd& deriv) {
    cd val = c[deg];
    deriv = 0.0;
    for (std::size_t i = deg; i-- > 0;) {
      deriv = deriv * z + val;
      val = val * z + c[i];
    }
    return val;
  };

  double bound = 0.0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, std::abs(c[i] / c[deg]));
  const double radius = 1.0 + bound;
  std::vector<cd> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    z[i] = std::polar(0.5 * radius, 2.0 * std::numbers::pi * i / deg + 0.4);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      cd d;
      const cd f = eval(z[i], d);
      if (f == 0.0) continue;
      const cd ratio = f / d;
      cd repulsion = 0.0;
      for (std::size_t j = 0; j < deg; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const cd step = ratio / (1.0 - ratio * repulsion);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (max_step < 1e-15) break;
  }
  return z;
}

/// True when every root of det(Phi(z)) lies strictly outside the unit
/// circle by more than the library's 1e-8 tolerance on eigenvalue moduli.
inline bool roots_outside_unit_circle(const std::vector<Eigen::MatrixXd>& coeffs) {
  for (const cd& r : polynomial_roots(det_polynomial_coefficients(coeffs))) {
    if (1.0 / std::abs(r) >= 1.0 - 1e-8) return false;
  }
  return true;
}

}  // namespace varcast::testing

#endif  // VARCAST_TESTS_SUPPORT_POLY_ROOTS_HPP_
