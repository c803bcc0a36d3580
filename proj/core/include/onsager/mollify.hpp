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

#include "onsager/field.hpp"

namespace onsager {

/// 1D transform of the unit-mass even bump (35/32)(1-s^2)^3 on [-1,1],
/// evaluated at angular frequency w
double mollifier_hat_1d(double w);

/// spatial mollification at length eps: separable even compact bump applied
/// as the mode multiplier prod_a mollifier_hat_1d(2 pi eps k_a); commutes
/// exactly with spectral derivatives
ScalarField3 mollify(const ScalarField3& f, double eps);
VectorField3 mollify(const VectorField3& f, double eps);
SymTensorField3 mollify(const SymTensorField3& f, double eps);
/// double mollification (squared multiplier)
SymTensorField3 mollify_twice(const SymTensorField3& f, double eps);

/// quadratic commutator  eta_eps*(fg) - (eta_eps*f)(eta_eps*g)
ScalarField3 commutator_defect(const ScalarField3& f, const ScalarField3& g, double eps);

}  // namespace onsager
