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
#include "onsager/spectral_ops.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "onsager/fft.hpp"

namespace onsager {

namespace {
constexpr double TWO_PI = 2.0 * std::numbers::pi;
}

ScalarField3 derivative(const ScalarField3& f, int axis) {
  const Grid3& g = f.grid();
  ScalarField3 out(g);
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    const int k = (axis == 0) ? kx : (axis == 1) ? ky : kz;
    out[i] = cplx(0.0, TWO_PI * k) * f[i];
  });
  return out;
}

ScalarField3 derivative(const ScalarField3& f, const std::array<int, 3>& orders) {
  const int total = orders[0] + orders[1] + orders[2];
  if (total < 0 || total > 6)
    throw std::invalid_argument("derivative: multi-index order must be <= 6");
  const Grid3& g = f.grid();
  ScalarField3 out(g);
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    cplx m(1.0, 0.0);
    const int ks[3] = {kx, ky, kz};
    for (int a = 0; a < 3; ++a)
      for (int p = 0; p < orders[a]; ++p) m *= cplx(0.0, TWO_PI * ks[a]);
    out[i] = m * f[i];
  });
  return out;
}

ScalarField3 laplace_inverse(const ScalarField3& f) {
  const Grid3& g = f.grid();
  ScalarField3 out(g);
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
    out[i] = (k2 == 0.0) ? cplx(0.0) : f[i] / (-TWO_PI * TWO_PI * k2);
  });
  return out;
}

SymTensorField3 laplace_inverse(const SymTensorField3& f) {
  SymTensorField3 out(f.grid());
  for (int k = 0; k < 6; ++k) out[k] = laplace_inverse(f[k]);
  return out;
}

ScalarField3 divergence(const VectorField3& u) {
  const Grid3& g = u.grid();
  ScalarField3 out(g);
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    out[i] = cplx(0.0, TWO_PI) *
             (double(kx) * u[0][i] + double(ky) * u[1][i] + double(kz) * u[2][i]);
  });
  return out;
}

VectorField3 divergence(const SymTensorField3& r) {
  const Grid3& g = r.grid();
  VectorField3 out(g);
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    const double k[3] = {double(kx), double(ky), double(kz)};
    for (int l = 0; l < 3; ++l) {
      cplx s(0.0);
      for (int j = 0; j < 3; ++j) s += k[j] * r(j, l)[i];
      out[l][i] = cplx(0.0, TWO_PI) * s;
    }
  });
  return out;
}

VectorField3 gradient(const ScalarField3& f) {
  VectorField3 out(f.grid());
  for (int a = 0; a < 3; ++a) out[a] = derivative(f, a);
  return out;
}

Matrix3Field gradient(const VectorField3& u) {
  Matrix3Field out(u.grid());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = derivative(u[i], j);
  return out;
}

HelmholtzParts helmholtz(const VectorField3& u) {
  const Grid3& g = u.grid();
  HelmholtzParts parts{VectorField3(g), {u[0].mean(), u[1].mean(), u[2].mean()},
                       ScalarField3(g)};
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
    if (k2 == 0.0) return;
    const double k[3] = {double(kx), double(ky), double(kz)};
    const cplx kdotu = k[0] * u[0][i] + k[1] * u[1][i] + k[2] * u[2][i];
    for (int a = 0; a < 3; ++a)
      parts.solenoidal[a][i] = u[a][i] - k[a] * kdotu / k2;
    // potential solves Lap phi = div u:  phi_k = (2 pi i k.u)/(-4 pi^2 k^2)
    parts.potential[i] = cplx(0.0, TWO_PI) * kdotu / (-TWO_PI * TWO_PI * k2);
  });
  return parts;
}

SymTensorField3 antidiv_R(const VectorField3& u) {
  const Grid3& g = u.grid();
  SymTensorField3 out(g);
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    const double k2 = double(kx) * kx + double(ky) * ky + double(kz) * kz;
    if (k2 == 0.0) return;
    const double k[3] = {double(kx), double(ky), double(kz)};
    const cplx kdotu = k[0] * u[0][i] + k[1] * u[1][i] + k[2] * u[2][i];
    cplx h[3];
    for (int a = 0; a < 3; ++a) h[a] = u[a][i] - k[a] * kdotu / k2;
    // Lap^{-1}(grad^l H^j + grad^j H^l) + delta^{jl} Lap^{-1} div u
    const double inv = -1.0 / (TWO_PI * k2);  // (2 pi i)/(-4 pi^2 k^2) = -i/(2 pi k^2)
    const cplx divterm = cplx(0.0, inv) * kdotu;
    for (int j = 0; j < 3; ++j)
      for (int l = j; l < 3; ++l) {
        cplx v = cplx(0.0, inv) * (k[l] * h[j] + k[j] * h[l]);
        if (j == l) v += divterm;
        out(j, l)[i] = v;
      }
  });
  return out;
}

Grid3 padded_grid(const Grid3& g) {
  int m = 3 * g.n / 2;
  if (m % 2) ++m;
  return Grid3(m);
}

PaddedReal pad_to_real(const ScalarField3& f) {
  const Grid3& g = f.grid();
  const Grid3 fine = padded_grid(g);
  std::vector<cplx> pad(fine.spec_size(), cplx(0.0));
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    if (std::abs(ky) >= g.n / 2 || std::abs(kz) >= g.n / 2 || kx >= g.n / 2) return;
    pad[fine.spec_index(kx, fine.idx(ky), fine.idx(kz))] = f[i];
  });
  PaddedReal out{fine, std::vector<double>(fine.real_size())};
  fft::backward(fine, pad.data(), out.r.data());
  return out;
}

ScalarField3 product_truncate(const Grid3& coarse, const PaddedReal& a, const PaddedReal& b) {
  const Grid3& fine = a.fine;
  std::vector<double> prod(fine.real_size());
  for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = a.r[i] * b.r[i];
  std::vector<cplx> hat(fine.spec_size());
  fft::forward(fine, prod.data(), hat.data());
  ScalarField3 out(coarse);
  for_each_mode(coarse, [&](std::size_t i, int kx, int ky, int kz) {
    if (std::abs(ky) >= coarse.n / 2 || std::abs(kz) >= coarse.n / 2 || kx >= coarse.n / 2)
      return;
    out[i] = hat[fine.spec_index(kx, fine.idx(ky), fine.idx(kz))];
  });
  return out;
}

ScalarField3 multiply_dealiased(const ScalarField3& a, const ScalarField3& b) {
  return product_truncate(a.grid(), pad_to_real(a), pad_to_real(b));
}

SymTensorField3 outer_sym_dealiased(const VectorField3& u, const VectorField3& v) {
  const Grid3& g = u.grid();
  const bool same = &u == &v;
  std::array<PaddedReal, 3> pu{pad_to_real(u[0]), pad_to_real(u[1]), pad_to_real(u[2])};
  std::array<PaddedReal, 3> pv;
  if (!same) pv = {pad_to_real(v[0]), pad_to_real(v[1]), pad_to_real(v[2])};
  const auto& qv = same ? pu : pv;
  SymTensorField3 out(g);
  for (int j = 0; j < 3; ++j)
    for (int l = j; l < 3; ++l) {
      ScalarField3 t = product_truncate(g, pu[j], qv[l]);
      if (!same && j != l) {
        t += product_truncate(g, pu[l], qv[j]);
        t *= 0.5;
      }
      out(j, l) = std::move(t);
    }
  return out;
}

}  // namespace onsager
