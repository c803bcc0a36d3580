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
#include <optional>

#include "onsager/spectral_ops.hpp"
#include "onsager/time_series.hpp"
#include "onsager/transport.hpp"

namespace onsager {

/// Back-to-labels map Gamma(t,x) = x + gamma(t,x) anchored at t_anchor:
/// (d_t + v.grad) Gamma = 0, Gamma(t_anchor) = x.  Only the periodic part
/// gamma is stored; Jacobians are derived spectrally on demand (they are
/// bulky at scale).  Lattice equivariance Gamma(t, x+l) = Gamma(t,x)+l is
/// built into the representation.
class FlowChart {
 public:
  /// trivial chart of the zero velocity field
  static FlowChart identity(const Grid3& g, double t_anchor, double t0, double dt,
                            std::size_t nsamples);
  /// chart from the solved periodic part; computes the determinant guard
  FlowChart(double t_anchor, TimeSampled<VectorField3> gamma);

  bool is_identity() const { return identity_; }
  const Grid3& grid() const { return grid_; }
  double t_anchor() const { return t_anchor_; }
  double t0() const { return t0_; }
  double dt() const { return dt_; }
  std::size_t size() const { return size_; }
  double time_at(std::size_t j) const { return t0_ + dt_ * double(j); }
  std::size_t anchor_index() const;
  double min_det() const { return min_det_; }

  const VectorField3& gamma_at(std::size_t j) const;
  /// grad(i,j) = d_j Gamma^i = delta_ij + d_j gamma^i
  Matrix3Field grad_at(std::size_t j) const;
  /// pointwise matrix inverse of grad (band-limited reprojection)
  Matrix3Field grad_inv_at(std::size_t j) const;

 private:
  FlowChart() = default;
  Grid3 grid_;
  double t_anchor_ = 0.0, t0_ = 0.0, dt_ = 0.0;
  std::size_t size_ = 0;
  bool identity_ = false;
  std::optional<TimeSampled<VectorField3>> gamma_;
  VectorField3 zero_;  // shared zero field for identity charts
  double min_det_ = 1.0;
};

/// solve the back-to-labels transport over [t_lo, t_hi] (sample-aligned with
/// v_eps); throws when the Jacobian determinant drops below 1/2 anywhere
FlowChart back_to_labels(const TimeSampled<VectorField3>& v_eps, double t_anchor,
                         double t_lo, double t_hi);

/// coarse-scale flow: trajectories of seeds under dx/ds = v(t0+s, x),
/// reported at each requested offset s (4th-order integration)
std::vector<std::vector<std::array<double, 3>>> integrate_flow(
    const TimeSampled<VectorField3>& v, double t0, const std::vector<double>& s_values,
    const std::vector<std::array<double, 3>>& seeds);

/// grad xi_m = (grad Gamma)^T m at one chart sample
VectorField3 phase_gradient(const FlowChart& chart, const std::array<int, 3>& m,
                            std::size_t j);
/// min over the chart window of |grad xi_m| / |m| (degeneracy diagnostic)
double phase_gradient_min_ratio(const FlowChart& chart, const std::array<int, 3>& m);

}  // namespace onsager
