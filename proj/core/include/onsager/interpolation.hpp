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
#include <vector>

#include "onsager/field.hpp"

namespace onsager {

/// point evaluation of band-limited fields: Fourier upsampling to the
/// doubled grid followed by order-6 tensor Lagrange interpolation.  Several
/// components share one geometry so characteristic feet are priced once.
class FieldInterpolator {
 public:
  FieldInterpolator() = default;
  explicit FieldInterpolator(const std::vector<const ScalarField3*>& comps);
  explicit FieldInterpolator(const ScalarField3& f)
      : FieldInterpolator(std::vector<const ScalarField3*>{&f}) {}
  FieldInterpolator(const VectorField3& f)
      : FieldInterpolator(std::vector<const ScalarField3*>{&f[0], &f[1], &f[2]}) {}

  int ncomp() const { return int(samples_.size()); }
  bool empty() const { return samples_.empty(); }

  /// evaluate all components at a torus point (coordinates in any range)
  void eval(double x, double y, double z, double* out) const;
  double eval_scalar(double x, double y, double z) const;

 private:
  Grid3 fine_;
  std::vector<std::vector<double>> samples_;
};

/// Fourier upsampling of the sample set to the doubled grid (helper shared
/// with the interpolator)
std::vector<double> upsample_real(const ScalarField3& f, const Grid3& fine);

/// order-6 Lagrange weights on nodes {-2,..,3} at offset t in [0,1)
void lagrange6_weights(double t, double* w);

/// order-6 Lagrange evaluation directly on given real sample arrays (no
/// upsampling); adequate for low-bandwidth fields such as mollified
/// velocities
struct RawLagrange {
  const double* comp[6] = {};
  int nc = 0;
  int n = 0;
  void eval(double x, double y, double z, double* out) const;
};

}  // namespace onsager
