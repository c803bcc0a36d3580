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
#include "onsager/interpolation.hpp"

#include <cmath>
#include <stdexcept>

#include "onsager/fft.hpp"

namespace onsager {

std::vector<double> upsample_real(const ScalarField3& f, const Grid3& fine) {
  const Grid3& g = f.grid();
  std::vector<cplx> pad(fine.spec_size(), cplx(0.0));
  for_each_mode(g, [&](std::size_t i, int kx, int ky, int kz) {
    if (kx >= g.n / 2 || std::abs(ky) >= g.n / 2 || std::abs(kz) >= g.n / 2) return;
    pad[fine.spec_index(kx, fine.idx(ky), fine.idx(kz))] = f[i];
  });
  std::vector<double> out(fine.real_size());
  fft::backward(fine, pad.data(), out.data());
  return out;
}

FieldInterpolator::FieldInterpolator(const std::vector<const ScalarField3*>& comps) {
  if (comps.empty() || comps.size() > 8)
    throw std::invalid_argument("FieldInterpolator: need 1..8 components");
  fine_ = Grid3(2 * comps[0]->grid().n);
  samples_.reserve(comps.size());
  for (const ScalarField3* c : comps) {
    if (!(c->grid() == comps[0]->grid()))
      throw std::invalid_argument("FieldInterpolator: grid mismatch");
    samples_.push_back(upsample_real(*c, fine_));
  }
}

void lagrange6_weights(double t, double* w) {
  // nodes j = -2..3, weight_i = prod_{j != i} (t - j)/(i - j)
  const double tm2 = t + 2, tm1 = t + 1, t0 = t, t1 = t - 1, t2 = t - 2, t3 = t - 3;
  w[0] = tm1 * t0 * t1 * t2 * t3 / (-120.0);
  w[1] = tm2 * t0 * t1 * t2 * t3 / 24.0;
  w[2] = tm2 * tm1 * t1 * t2 * t3 / (-12.0);
  w[3] = tm2 * tm1 * t0 * t2 * t3 / 12.0;
  w[4] = tm2 * tm1 * t0 * t1 * t3 / (-24.0);
  w[5] = tm2 * tm1 * t0 * t1 * t2 / 120.0;
}

namespace {

inline void eval6(const double* const* comps, int nc, int n, double x, double y, double z,
                  double* out) {
  const double ux = (x - std::floor(x)) * n;
  const double uy = (y - std::floor(y)) * n;
  const double uz = (z - std::floor(z)) * n;
  int ix = int(ux), iy = int(uy), iz = int(uz);
  double wx[6], wy[6], wz[6];
  lagrange6_weights(ux - ix, wx);
  lagrange6_weights(uy - iy, wy);
  lagrange6_weights(uz - iz, wz);
  int jx[6], jy[6], jz[6];
  for (int a = 0; a < 6; ++a) {
    jx[a] = (ix + a - 2 + 2 * n) % n;
    jy[a] = (iy + a - 2 + 2 * n) % n;
    jz[a] = (iz + a - 2 + 2 * n) % n;
  }
  for (int c = 0; c < nc; ++c) {
    const double* s = comps[c];
    double acc = 0.0;
    for (int a = 0; a < 6; ++a) {
      double accy = 0.0;
      const std::size_t zoff = std::size_t(jz[a]) * n;
      for (int b = 0; b < 6; ++b) {
        const double* row = s + (zoff + jy[b]) * n;
        double accx = 0.0;
        for (int d = 0; d < 6; ++d) accx += wx[d] * row[jx[d]];
        accy += wy[b] * accx;
      }
      acc += wz[a] * accy;
    }
    out[c] = acc;
  }
}

}  // namespace

void RawLagrange::eval(double x, double y, double z, double* out) const {
  eval6(comp, nc, n, x, y, z, out);
}

void FieldInterpolator::eval(double x, double y, double z, double* out) const {
  const double* ptrs[8];
  const int nc = ncomp();
  for (int c = 0; c < nc; ++c) ptrs[c] = samples_[c].data();
  eval6(ptrs, nc, fine_.n, x, y, z, out);
}

double FieldInterpolator::eval_scalar(double x, double y, double z) const {
  double v;
  eval(x, y, z, &v);
  return v;
}

}  // namespace onsager
