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
#include "onsager/littlewood_paley.hpp"

#include <cmath>
#include <stdexcept>

namespace onsager {

double lp_chi_hat(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double t = r - 1.0;
  const double s = t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
  return 1.0 - s;
}

int lp_qmax(const Grid3& g) {
  const double kmax = std::sqrt(3.0) * g.max_mode();
  int q = 0;
  while (std::ldexp(1.0, q) < kmax) ++q;
  return q;
}

ScalarField3 lp_project_le(const ScalarField3& f, int q) {
  const Grid3& g = f.grid();
  ScalarField3 out(g);
  if (q <= -1) {
    // all nonzero grid modes have |k| >= 1 >= 2^{q+1}
    out.set_mean(f.mean());
    return out;
  }
  const double scale = std::ldexp(1.0, -q);
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    const double kk = std::sqrt(double(kx) * kx + double(ky) * ky + double(kz) * kz);
    out[i] = lp_chi_hat(kk * scale) * f[i];
  });
  return out;
}

ScalarField3 lp_project(const ScalarField3& f, int q) {
  ScalarField3 out = lp_project_le(f, q);
  out -= lp_project_le(f, q - 1);
  return out;
}

ScalarField3 lp_project(const ScalarField3& f, int q1, int q2) {
  ScalarField3 out = lp_project_le(f, q2);
  out -= lp_project_le(f, q1);
  return out;
}

double holder_seminorm(const ScalarField3& f, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("holder_seminorm: alpha must lie in (0,1)");
  const int qmax = lp_qmax(f.grid());
  double best = 0.0;
  for (int q = 0; q <= qmax; ++q) {
    const double band = sup_norm(lp_project(f, q));
    best = std::max(best, std::pow(2.0, alpha * q) * band);
  }
  return best;
}

}  // namespace onsager
