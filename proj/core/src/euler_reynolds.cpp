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
#include "onsager/euler_reynolds.hpp"

#include <cmath>
#include <stdexcept>

#include "onsager/spectral_ops.hpp"

namespace onsager {

void FreqEnergyLevels::validate() const {
  if (!(Xi >= 3.0)) throw std::invalid_argument("FreqEnergyLevels: Xi must be >= 3");
  if (!(e_v >= e_R && e_R >= 0.0))
    throw std::invalid_argument("FreqEnergyLevels: need e_v >= e_R >= 0");
}

double FreqEnergyLevels::hxi() const {
  if (!(e_R > 0.0))
    throw std::domain_error("FreqEnergyLevels: hxi undefined for e_R = 0 (exact solution)");
  return Xi * std::sqrt(e_v / e_R);
}

void EulerReynoldsState::validate() const {
  levels.validate();
  const Grid3& g = grid();
  auto check = [&](double t0, double dt, std::size_t m) {
    if (std::abs(t0 - v.t0) > 1e-12 || std::abs(dt - v.dt) > 1e-12 || m != v.size())
      throw std::invalid_argument("EulerReynoldsState: v, p, R sampling mismatch");
  };
  check(p.t0, p.dt, p.size());
  check(R.t0, R.dt, R.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(v[i].grid() == g) || !(p[i].grid() == g) || !(R[i].grid() == g))
      throw std::invalid_argument("EulerReynoldsState: grid mismatch across samples");
}

ResidualReport euler_reynolds_residual(const EulerReynoldsState& s) {
  if (s.v.size() < 3)
    throw std::invalid_argument("euler_reynolds_residual: need >= 3 time samples");
  s.validate();
  const Grid3& g = s.grid();
  ResidualReport rep;
  for (std::size_t i = 0; i < s.v.size(); ++i)
    rep.max_div_v = std::max(rep.max_div_v, sup_norm(divergence(s.v[i])));

  for (std::size_t i = 1; i + 1 < s.v.size(); ++i) {
    VectorField3 res = time_derivative(s.v, i);
    res += divergence(outer_sym_dealiased(s.v[i], s.v[i]));
    res += gradient(s.p[i]);
    res -= divergence(s.R[i]);

    auto r0 = res[0].to_real(), r1 = res[1].to_real(), r2 = res[2].to_real();
    double mx = 0.0, mean = 0.0;
    for (std::size_t j = 0; j < r0.size(); ++j) {
      const double a = std::sqrt(r0[j] * r0[j] + r1[j] * r1[j] + r2[j] * r2[j]);
      mx = std::max(mx, a);
      mean += a;
    }
    mean /= double(g.real_size());
    rep.t.push_back(s.v.time_at(i));
    rep.max_abs.push_back(mx);
    rep.mean_abs.push_back(mean);
    rep.worst = std::max(rep.worst, mx);
  }
  return rep;
}

}  // namespace onsager
