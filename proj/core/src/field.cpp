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
#include "onsager/field.hpp"

#include <cmath>
#include <stdexcept>

#include "onsager/fft.hpp"

namespace onsager {

ScalarField3 ScalarField3::from_real(const Grid3& g, const std::vector<double>& r) {
  if (r.size() != g.real_size())
    throw std::invalid_argument("from_real: sample count does not match grid");
  ScalarField3 f(g);
  fft::forward(g, r.data(), f.hat_.data());
  f.band_limit();
  return f;
}

std::vector<double> ScalarField3::to_real() const {
  std::vector<double> r(grid_.real_size());
  fft::backward(grid_, hat_.data(), r.data());
  return r;
}

cplx ScalarField3::mode(int kx, int ky, int kz) const {
  const int n = grid_.n;
  if (kx >= 0)
    return hat_[grid_.spec_index(kx, grid_.idx(ky), grid_.idx(kz))];
  (void)n;
  return std::conj(hat_[grid_.spec_index(-kx, grid_.idx(-ky), grid_.idx(-kz))]);
}

void ScalarField3::set_mode(int kx, int ky, int kz, cplx v) {
  if (kx < 0) {
    set_mode(-kx, -ky, -kz, std::conj(v));
    return;
  }
  hat_[grid_.spec_index(kx, grid_.idx(ky), grid_.idx(kz))] = v;
  if (kx == 0 && !(ky == 0 && kz == 0))
    hat_[grid_.spec_index(0, grid_.idx(-ky), grid_.idx(-kz))] = std::conj(v);
  if (kx == 0 && ky == 0 && kz == 0)
    hat_[0] = cplx(v.real(), 0.0);
}

void ScalarField3::add_mode(int kx, int ky, int kz, cplx v) {
  if (kx < 0) {
    add_mode(-kx, -ky, -kz, std::conj(v));
    return;
  }
  cplx cur = hat_[grid_.spec_index(kx, grid_.idx(ky), grid_.idx(kz))];
  set_mode(kx, ky, kz, cur + v);
}

void ScalarField3::band_limit() {
  const int n = grid_.n;
  const int nh = grid_.nxh();
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy) {
      if (iy == n / 2 || iz == n / 2) {
        cplx* row = hat_.data() + grid_.spec_index(0, iy, iz);
        for (int kxh = 0; kxh < nh; ++kxh) row[kxh] = cplx(0.0);
      } else {
        hat_[grid_.spec_index(n / 2, iy, iz)] = cplx(0.0);
      }
    }
}

void ScalarField3::hermitian_project() {
  const int n = grid_.n;
  for (int iz = 0; iz < n; ++iz)
    for (int iy = 0; iy < n; ++iy) {
      const int miy = (n - iy) % n, miz = (n - iz) % n;
      const std::size_t a = grid_.spec_index(0, iy, iz);
      const std::size_t b = grid_.spec_index(0, miy, miz);
      if (a < b) {
        const cplx avg = 0.5 * (hat_[a] + std::conj(hat_[b]));
        hat_[a] = avg;
        hat_[b] = std::conj(avg);
      } else if (a == b) {
        hat_[a] = cplx(hat_[a].real(), 0.0);
      }
    }
}

ScalarField3& ScalarField3::operator+=(const ScalarField3& o) {
  for (std::size_t i = 0; i < hat_.size(); ++i) hat_[i] += o.hat_[i];
  return *this;
}
ScalarField3& ScalarField3::operator-=(const ScalarField3& o) {
  for (std::size_t i = 0; i < hat_.size(); ++i) hat_[i] -= o.hat_[i];
  return *this;
}
ScalarField3& ScalarField3::operator*=(double s) {
  for (auto& v : hat_) v *= s;
  return *this;
}
ScalarField3& ScalarField3::axpy(double s, const ScalarField3& o) {
  for (std::size_t i = 0; i < hat_.size(); ++i) hat_[i] += s * o.hat_[i];
  return *this;
}

double sup_norm(const ScalarField3& f) {
  double m = 0.0;
  for (double v : f.to_real()) m = std::max(m, std::abs(v));
  return m;
}

double sup_norm(const VectorField3& f) {
  auto r0 = f.c[0].to_real(), r1 = f.c[1].to_real(), r2 = f.c[2].to_real();
  double m = 0.0;
  for (std::size_t i = 0; i < r0.size(); ++i)
    m = std::max(m, r0[i] * r0[i] + r1[i] * r1[i] + r2[i] * r2[i]);
  return std::sqrt(m);
}

double sup_norm(const SymTensorField3& f) {
  std::array<std::vector<double>, 6> r;
  for (int k = 0; k < 6; ++k) r[k] = f.c[k].to_real();
  // off-diagonal components appear twice in the Frobenius norm
  static constexpr double w[6] = {1, 2, 2, 1, 2, 1};
  double m = 0.0;
  for (std::size_t i = 0; i < r[0].size(); ++i) {
    double s = 0.0;
    for (int k = 0; k < 6; ++k) s += w[k] * r[k][i] * r[k][i];
    m = std::max(m, s);
  }
  return std::sqrt(m);
}

double l2_norm(const ScalarField3& f) {
  // Parseval on the half-spectrum: kx > 0 entries count twice
  const Grid3& g = f.grid();
  double s = 0.0;
  for_each_mode(g, [&](std::size_t i, int kxh, int, int) {
    const double a = std::norm(f[i]);
    s += (kxh == 0 || kxh == g.n / 2) ? a : 2.0 * a;
  });
  return std::sqrt(s);
}

}  // namespace onsager
