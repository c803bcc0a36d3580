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

#include "onsager/field.hpp"

namespace onsager {

/// full 3x3 matrix of scalar fields (gradients of vector fields, flow-map
/// Jacobians); row index first: (i,j) = d_j of component i, say
struct Matrix3Field {
  std::array<ScalarField3, 9> c;
  Matrix3Field() = default;
  explicit Matrix3Field(const Grid3& g) {
    for (auto& f : c) f = ScalarField3(g);
  }
  const Grid3& grid() const { return c[0].grid(); }
  ScalarField3& operator()(int i, int j) { return c[3 * i + j]; }
  const ScalarField3& operator()(int i, int j) const { return c[3 * i + j]; }
};

/// exact spectral partial derivative along one axis
ScalarField3 derivative(const ScalarField3& f, int axis);
/// multi-index derivative, total order <= 6
ScalarField3 derivative(const ScalarField3& f, const std::array<int, 3>& orders);

/// mean-zero solution of  Lap u = (1 - Pi_0) f
ScalarField3 laplace_inverse(const ScalarField3& f);
SymTensorField3 laplace_inverse(const SymTensorField3& f);

ScalarField3 divergence(const VectorField3& u);
/// (div R)^l = grad_j R^{jl}
VectorField3 divergence(const SymTensorField3& r);
VectorField3 gradient(const ScalarField3& f);
/// grad(i,j) = d_j u^i
Matrix3Field gradient(const VectorField3& u);

struct HelmholtzParts {
  VectorField3 solenoidal;       ///< divergence-free, mean-zero
  std::array<double, 3> mean;    ///< Pi_0 U
  ScalarField3 potential;        ///< U = sol + mean + grad(potential)
};
HelmholtzParts helmholtz(const VectorField3& u);

/// order (-1) inverse divergence: a symmetric tensor with
/// div(antidiv_R(U)) = (1 - Pi_0) U and zero mean
SymTensorField3 antidiv_R(const VectorField3& u);

/// real samples of a spectrum zero-padded to the 3n/2 grid (for products)
struct PaddedReal {
  Grid3 fine;
  std::vector<double> r;
};
Grid3 padded_grid(const Grid3& g);
PaddedReal pad_to_real(const ScalarField3& f);
/// truncated product of two padded fields, returned on the original grid
ScalarField3 product_truncate(const Grid3& coarse, const PaddedReal& a, const PaddedReal& b);
/// dealiased product (3/2 zero-padding rule)
ScalarField3 multiply_dealiased(const ScalarField3& a, const ScalarField3& b);
/// dealiased symmetrized outer product (u^j v^l + u^l v^j)/2; equals the
/// plain outer product when u and v are the same field
SymTensorField3 outer_sym_dealiased(const VectorField3& u, const VectorField3& v);

}  // namespace onsager
