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

#include <map>
#include <memory>
#include <optional>

#include "onsager/field.hpp"
#include "onsager/time_series.hpp"

namespace onsager {

/// Semi-Lagrangian solver for (d_t + v.grad) f = g on the sampling grid of v.
///
/// One step from sample j1 to an adjacent sample j2 evaluates
///   f_{j2}(x) = f_{j1}(foot(x)) + int_{t1}^{t2} g(s, X(s)) ds
/// with the characteristic foot from a classical RK4 sweep (velocity read by
/// order-6 Lagrange interpolation) and the source integral from a cubic
/// 4-sample quadrature evaluated at the chord midpoint (first-order Taylor
/// read when the displacement is under a quarter cell, interpolated
/// otherwise).  Transported fields are read on the Fourier-doubled grid.
///
/// The solver caches velocity interpolants, and optionally the feet, so that
/// repeated solves against the same velocity (Picard iterations) share the
/// characteristic geometry.
class TransportSolver {
 public:
  explicit TransportSolver(const TimeSampled<VectorField3>& v);
  ~TransportSolver();
  TransportSolver(const TransportSolver&) = delete;
  TransportSolver& operator=(const TransportSolver&) = delete;

  const TimeSampled<VectorField3>& velocity() const { return *v_; }
  /// true when the sampled velocity vanishes identically
  bool identity_velocity() const { return identity_; }
  /// keep per-step feet for reuse across solves (costs 24 bytes/point/step)
  void cache_feet(bool on);

  TimeSampled<ScalarField3> solve(const ScalarField3& f0, const TimeSampled<ScalarField3>* g,
                                  std::size_t i_anchor, std::size_t i_lo, std::size_t i_hi);
  TimeSampled<VectorField3> solve(const VectorField3& f0, const TimeSampled<VectorField3>* g,
                                  std::size_t i_anchor, std::size_t i_lo, std::size_t i_hi);
  TimeSampled<SymTensorField3> solve(const SymTensorField3& f0,
                                     const TimeSampled<SymTensorField3>* g,
                                     std::size_t i_anchor, std::size_t i_lo,
                                     std::size_t i_hi);

  struct Impl;  // opaque; solver internals

 private:
  std::unique_ptr<Impl> impl_;
  const TimeSampled<VectorField3>* v_;
  bool identity_ = false;
};

/// one-call transport solve from t0 to t1 (either direction); the anchor and
/// endpoints must lie on v's sample grid
TimeSampled<SymTensorField3> transport_solve(const TimeSampled<VectorField3>& v,
                                             const SymTensorField3& f0,
                                             const TimeSampled<SymTensorField3>* g,
                                             double t0, double t1);
TimeSampled<ScalarField3> transport_solve(const TimeSampled<VectorField3>& v,
                                          const ScalarField3& f0,
                                          const TimeSampled<ScalarField3>* g, double t0,
                                          double t1);

struct TransportEllipticResult {
  TimeSampled<SymTensorField3> rho;
  int iterations = 0;
  std::vector<double> increments;  ///< sup-norm of successive iterate differences
};

/// Picard iteration for the transport-elliptic system
///   (d_t + v.grad) rho = antidiv_R[ grad_a v^i grad_i rho^{ab} + Z^b ],
/// rho(t0) = rho0, iterated until the sup-norm increment falls below tol
TransportEllipticResult transport_elliptic_solve(
    const TimeSampled<VectorField3>& v, const TimeSampled<VectorField3>& Z,
    const SymTensorField3& rho0, double t0, double t1, double tol, int max_iter = 25);

std::size_t sample_index_of(double t, double t0, double dt, std::size_t n);

}  // namespace onsager
