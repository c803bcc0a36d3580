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

#include <vector>

#include "onsager/field.hpp"
#include "onsager/time_series.hpp"

namespace onsager {

/// frequency-energy levels (Xi, e_v, e_R) to order L: |grad^a v| <= Xi^a
/// sqrt(e_v) for 1 <= a <= L and |grad^a R| <= Xi^a e_R for 0 <= a <= L
struct FreqEnergyLevels {
  double Xi = 3.0;
  double e_v = 1.0;
  double e_R = 1.0;
  int L = 3;

  void validate() const;
  /// the compound frequency Xi (e_v/e_R)^(1/2)
  double hxi() const;
};

struct TimeInterval {
  double lo = 0.0, hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double t, double slack = 0.0) const {
    return t >= lo - slack && t <= hi + slack;
  }
};

/// time-sampled (v, p, R) triple with its declared levels and time support
struct EulerReynoldsState {
  TimeSampled<VectorField3> v;
  TimeSampled<ScalarField3> p;
  TimeSampled<SymTensorField3> R;
  FreqEnergyLevels levels;
  TimeInterval supp;

  const Grid3& grid() const { return v[0].grid(); }
  void validate() const;  ///< grids/samplings agree across v, p, R
};

struct ResidualReport {
  std::vector<double> t;         ///< interior sample times
  std::vector<double> max_abs;   ///< sup |d_t v + div(v v) + grad p - div R|
  std::vector<double> mean_abs;  ///< spatial mean of the same
  double worst = 0.0;            ///< max over samples of max_abs
  double max_div_v = 0.0;        ///< sup |div v| over all samples
};

/// central-difference / spectral residual of the Euler-Reynolds system,
/// evaluated at the interior time samples (needs >= 3 samples)
ResidualReport euler_reynolds_residual(const EulerReynoldsState& s);

}  // namespace onsager
