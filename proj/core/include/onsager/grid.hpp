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

#include <cstddef>
#include <stdexcept>

namespace onsager {

/// Sample/mode geometry of the unit torus (R/Z)^3 discretized with n points
/// per axis, sample points x_j = j/n.
///
/// Spectra are stored in r2c (half-complex) layout with the x axis halved:
/// mode (kx, ky, kz) lives at ((iz*n + iy)*(n/2+1) + kx) with kx in [0, n/2]
/// and ky, kz wrapped into (-n/2, n/2].  Real samples are stored x-fastest:
/// (iz*n + iy)*n + ix.  Modes on the Nyquist planes |k_i| = n/2 are kept
/// identically zero, so every field is band-limited to |k_i| < n/2 and
/// spectral derivatives stay skew-adjoint.
struct Grid3 {
  int n = 0;

  Grid3() = default;
  explicit Grid3(int n_) : n(n_) {
    if (n < 8 || n % 2 != 0)
      throw std::invalid_argument("Grid3: n must be even and >= 8");
  }

  bool operator==(const Grid3&) const = default;

  std::size_t real_size() const { return std::size_t(n) * n * n; }
  std::size_t spec_size() const { return std::size_t(n) * n * (n / 2 + 1); }
  int nxh() const { return n / 2 + 1; }
  /// largest representable wavenumber magnitude per axis (Nyquist excluded)
  int max_mode() const { return n / 2 - 1; }

  /// wavenumber of a full-axis index
  int wav(int i) const { return (i <= n / 2) ? i : i - n; }
  /// full-axis index of a wavenumber in (-n/2, n/2]
  int idx(int k) const { return (k >= 0) ? k : k + n; }

  std::size_t spec_index(int kxh, int iy, int iz) const {
    return (std::size_t(iz) * n + iy) * nxh() + kxh;
  }
  std::size_t real_index(int ix, int iy, int iz) const {
    return (std::size_t(iz) * n + iy) * n + ix;
  }
};

/// visit every stored mode; f(index, kx, ky, kz) with kx >= 0
template <class F>
void for_each_mode(const Grid3& g, F&& f) {
  const int nh = g.nxh();
  std::size_t s = 0;
  for (int iz = 0; iz < g.n; ++iz) {
    const int kz = g.wav(iz);
    for (int iy = 0; iy < g.n; ++iy) {
      const int ky = g.wav(iy);
      for (int kxh = 0; kxh < nh; ++kxh, ++s) f(s, kxh, ky, kz);
    }
  }
}

}  // namespace onsager
