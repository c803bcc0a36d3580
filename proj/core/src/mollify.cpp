/* Copyright 2026 the onsager authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "onsager/mollify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "onsager/spectral_ops.hpp"

namespace onsager {

double mollifier_hat_1d(double w) {
  const double aw = std::abs(w);
  if (aw < 0.5) {
    // Taylor series of the closed form below, accurate to ~1e-17 here
    const double w2 = w * w;
    return 1.0 + w2 * (-1.0 / 18.0 + w2 * (1.0 / 792.0 + w2 * (-1.0 / 61776.0 + w2 / 7413120.0)));
  }
  const double c = std::cos(aw), s = std::sin(aw);
  const double w2 = aw * aw, w3 = w2 * aw;
  return 105.0 * (w3 * c - 6.0 * w2 * s - 15.0 * aw * c + 15.0 * s) / (w3 * w3 * aw);
}

namespace {

void apply_multiplier(ScalarField3& f, double eps, int power) {
  const Grid3& g = f.grid();
  const double TWO_PI = 2.0 * std::numbers::pi;
  // 1D multiplier table per axis index
  std::vector<double> tab(g.n / 2 + 1);
  for (int k = 0; k <= g.n / 2; ++k) {
    double m = mollifier_hat_1d(TWO_PI * eps * k);
    tab[k] = (power == 2) ? m * m : m;
  }
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    f[i] *= tab[kx] * tab[std::abs(ky)] * tab[std::abs(kz)];
  });
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 0.25))
    throw std::invalid_argument("mollify: eps must lie in (0, 1/4]");
}

}  // namespace

ScalarField3 mollify(const ScalarField3& f, double eps) {
  check_eps(eps);
  ScalarField3 out = f;
  apply_multiplier(out, eps, 1);
  return out;
}

VectorField3 mollify(const VectorField3& f, double eps) {
  check_eps(eps);
  VectorField3 out = f;
  for (int i = 0; i < 3; ++i) apply_multiplier(out[i], eps, 1);
  return out;
}

SymTensorField3 mollify(const SymTensorField3& f, double eps) {
  check_eps(eps);
  SymTensorField3 out = f;
  for (int i = 0; i < 6; ++i) apply_multiplier(out[i], eps, 1);
  return out;
}

SymTensorField3 mollify_twice(const SymTensorField3& f, double eps) {
  check_eps(eps);
  SymTensorField3 out = f;
  for (int i = 0; i < 6; ++i) apply_multiplier(out[i], eps, 2);
  return out;
}

ScalarField3 commutator_defect(const ScalarField3& f, const ScalarField3& g, double eps) {
  ScalarField3 out = mollify(multiply_dealiased(f, g), eps);
  out -= multiply_dealiased(mollify(f, eps), mollify(g, eps));
  return out;
}

}  // namespace onsager
