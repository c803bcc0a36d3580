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

#include <array>
#include <complex>
#include <vector>

#include "onsager/grid.hpp"

namespace onsager {

using cplx = std::complex<double>;

/// Band-limited real scalar field on the unit torus, stored as its r2c
/// half-spectrum.  Hermitian symmetry (the kx = 0 plane) is maintained by
/// from_real / set_mode; the Nyquist planes are kept zero by band_limit().
class ScalarField3 {
 public:
  ScalarField3() = default;
  explicit ScalarField3(const Grid3& g) : grid_(g), hat_(g.spec_size()) {}

  static ScalarField3 from_real(const Grid3& g, const std::vector<double>& r);
  std::vector<double> to_real() const;

  const Grid3& grid() const { return grid_; }
  bool empty() const { return hat_.empty(); }

  cplx* data() { return hat_.data(); }
  const cplx* data() const { return hat_.data(); }
  std::size_t size() const { return hat_.size(); }
  cplx& operator[](std::size_t i) { return hat_[i]; }
  const cplx& operator[](std::size_t i) const { return hat_[i]; }

  /// coefficient at any lattice point (kx may be negative)
  cplx mode(int kx, int ky, int kz) const;
  /// set the coefficient at (kx,ky,kz), kx >= 0; for kx == 0 the mirror
  /// entry (0,-ky,-kz) is set to the conjugate so real samples stay real
  void set_mode(int kx, int ky, int kz, cplx v);
  void add_mode(int kx, int ky, int kz, cplx v);

  /// zero the Nyquist planes |k_i| = n/2
  void band_limit();
  /// canonicalize the kx = 0 plane to exact Hermitian symmetry
  void hermitian_project();

  void zero() { hat_.assign(hat_.size(), cplx(0.0)); }
  double mean() const { return hat_.empty() ? 0.0 : hat_[0].real(); }
  void set_mean(double m) { hat_[0] = cplx(m, 0.0); }

  ScalarField3& operator+=(const ScalarField3& o);
  ScalarField3& operator-=(const ScalarField3& o);
  ScalarField3& operator*=(double s);
  /// this += s * o
  ScalarField3& axpy(double s, const ScalarField3& o);

  friend ScalarField3 operator+(ScalarField3 a, const ScalarField3& b) { return a += b; }
  friend ScalarField3 operator-(ScalarField3 a, const ScalarField3& b) { return a -= b; }
  friend ScalarField3 operator*(double s, ScalarField3 a) { return a *= s; }

 private:
  Grid3 grid_;
  std::vector<cplx> hat_;
};

struct VectorField3 {
  std::array<ScalarField3, 3> c;

  VectorField3() = default;
  explicit VectorField3(const Grid3& g) : c{ScalarField3(g), ScalarField3(g), ScalarField3(g)} {}
  const Grid3& grid() const { return c[0].grid(); }
  ScalarField3& operator[](int i) { return c[i]; }
  const ScalarField3& operator[](int i) const { return c[i]; }

  VectorField3& operator+=(const VectorField3& o) {
    for (int i = 0; i < 3; ++i) c[i] += o.c[i];
    return *this;
  }
  VectorField3& operator-=(const VectorField3& o) {
    for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
    return *this;
  }
  VectorField3& operator*=(double s) {
    for (auto& f : c) f *= s;
    return *this;
  }
  VectorField3& axpy(double s, const VectorField3& o) {
    for (int i = 0; i < 3; ++i) c[i].axpy(s, o.c[i]);
    return *this;
  }
  friend VectorField3 operator+(VectorField3 a, const VectorField3& b) { return a += b; }
  friend VectorField3 operator-(VectorField3 a, const VectorField3& b) { return a -= b; }
  friend VectorField3 operator*(double s, VectorField3 a) { return a *= s; }
};

/// symmetric (2,0) tensor, six independent components xx,xy,xz,yy,yz,zz
struct SymTensorField3 {
  std::array<ScalarField3, 6> c;

  SymTensorField3() = default;
  explicit SymTensorField3(const Grid3& g)
      : c{ScalarField3(g), ScalarField3(g), ScalarField3(g),
          ScalarField3(g), ScalarField3(g), ScalarField3(g)} {}
  const Grid3& grid() const { return c[0].grid(); }

  static int index(int i, int j) {
    static constexpr int map[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return map[i][j];
  }
  ScalarField3& operator()(int i, int j) { return c[index(i, j)]; }
  const ScalarField3& operator()(int i, int j) const { return c[index(i, j)]; }
  ScalarField3& operator[](int k) { return c[k]; }
  const ScalarField3& operator[](int k) const { return c[k]; }

  SymTensorField3& operator+=(const SymTensorField3& o) {
    for (int i = 0; i < 6; ++i) c[i] += o.c[i];
    return *this;
  }
  SymTensorField3& operator-=(const SymTensorField3& o) {
    for (int i = 0; i < 6; ++i) c[i] -= o.c[i];
    return *this;
  }
  SymTensorField3& operator*=(double s) {
    for (auto& f : c) f *= s;
    return *this;
  }
  SymTensorField3& axpy(double s, const SymTensorField3& o) {
    for (int i = 0; i < 6; ++i) c[i].axpy(s, o.c[i]);
    return *this;
  }
  friend SymTensorField3 operator+(SymTensorField3 a, const SymTensorField3& b) { return a += b; }
  friend SymTensorField3 operator-(SymTensorField3 a, const SymTensorField3& b) { return a -= b; }
  friend SymTensorField3 operator*(double s, SymTensorField3 a) { return a *= s; }
};

/// antisymmetric (2,0) tensor, three independent components (01),(02),(12)
struct AntisymTensorField3 {
  std::array<ScalarField3, 3> c;

  AntisymTensorField3() = default;
  explicit AntisymTensorField3(const Grid3& g)
      : c{ScalarField3(g), ScalarField3(g), ScalarField3(g)} {}
  const Grid3& grid() const { return c[0].grid(); }

  /// signed component (i,j); zero field is not representable as reference,
  /// so callers handle i == j themselves
  static int index(int i, int j) {
    static constexpr int map[3][3] = {{-1, 0, 1}, {0, -1, 2}, {1, 2, -1}};
    return map[i][j];
  }
  static double sign(int i, int j) { return i < j ? 1.0 : -1.0; }
};

double sup_norm(const ScalarField3& f);
/// pointwise Euclidean-norm maximum
double sup_norm(const VectorField3& f);
/// pointwise Frobenius-norm maximum (off-diagonals counted twice)
double sup_norm(const SymTensorField3& f);
double l2_norm(const ScalarField3& f);

}  // namespace onsager
