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
#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "onsager/field.hpp"
#include "onsager/grid.hpp"

namespace onsager::testing {

inline ScalarField3 field_from(const Grid3& g,
                               const std::function<double(double, double, double)>& fn) {
  std::vector<double> r(g.real_size());
  for (int iz = 0; iz < g.n; ++iz)
    for (int iy = 0; iy < g.n; ++iy)
      for (int ix = 0; ix < g.n; ++ix)
        r[g.real_index(ix, iy, iz)] =
            fn(double(ix) / g.n, double(iy) / g.n, double(iz) / g.n);
  return ScalarField3::from_real(g, r);
}

/// random real field with spectrum supported in |k|_inf <= kmax
inline ScalarField3 random_band_limited(const Grid3& g, int kmax, std::mt19937& rng,
                                        bool zero_mean = false) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ScalarField3 f(g);
  for (int kx = 0; kx <= kmax; ++kx)
    for (int ky = -kmax; ky <= kmax; ++ky)
      for (int kz = -kmax; kz <= kmax; ++kz) {
        if (kx == 0 && (ky < 0 || (ky == 0 && kz < 0))) continue;
        const double decay = 1.0 / (1.0 + kx * kx + ky * ky + kz * kz);
        f.set_mode(kx, ky, kz, decay * cplx(dist(rng), dist(rng)));
      }
  if (zero_mean) f.set_mean(0.0);
  f.band_limit();
  return f;
}

inline VectorField3 random_vector_band_limited(const Grid3& g, int kmax, std::mt19937& rng,
                                               bool zero_mean = false) {
  VectorField3 u(g);
  for (int c = 0; c < 3; ++c) u[c] = random_band_limited(g, kmax, rng, zero_mean);
  return u;
}

}  // namespace onsager::testing
