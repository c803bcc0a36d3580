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
#include <string>

#include "onsager/field.hpp"

namespace onsager::mikado {

using Vec3i = std::array<int, 3>;
using Vec3d = std::array<double, 3>;

/// the six lattice directions e_i + e_j, e_i - e_j (i < j)
const std::array<Vec3i, 6>& directions();

/// exact distance on the unit torus between the periodized lines
/// p + t f and q + s g for non-parallel integer directions
double line_pair_distance(const Vec3d& p, const Vec3d& q, const Vec3i& f, const Vec3i& g);

struct Placement {
  std::array<Vec3d, 6> points{};
  double r0 = 0.0;            ///< largest radius with min distance >= 6 r0 + margin
  double min_distance = 0.0;  ///< min over the 15 line pairs
  double margin = 0.0;
};

/// coordinate-descent placement of the six axis lines from a deterministic
/// seed; sample_density (>= 1000) sets the descent resolution.  Throws
/// PlacementError with the best candidate attached when the search cannot
/// separate the lines.
Placement place_pipes(int sample_density = 4096);

struct PlacementError : std::runtime_error {
  Placement best;
  PlacementError(const std::string& what, Placement b)
      : std::runtime_error(what), best(std::move(b)) {}
};

/// radial tube profile around the periodized line through p in direction f:
/// Gaussian core minus a mean-matching Gaussian shell, spectrally restricted
/// to the invariance plane {k.f = 0}, discrete mean zero, mean square one.
/// Throws when the grid under-resolves the tube (projection discards > 1%).
ScalarField3 pipe_profile(const Grid3& g, const Vec3i& f, const Vec3d& p, double r0);

/// antisymmetric potential with div_a Omega^{ab} = psi f^b and zero mean
AntisymTensorField3 pipe_antidiv(const ScalarField3& psi, const Vec3i& f);

/// the six tube profiles with their potentials; `disjoint` marks families
/// whose supports are pairwise disjoint (full tubes yes, harmonic no)
struct PipeFamily {
  std::array<Vec3i, 6> dirs;
  std::array<Vec3d, 6> points;
  double r0 = 0.0;
  std::array<ScalarField3, 6> psi;
  std::array<AntisymTensorField3, 6> omega;
  bool disjoint = false;

  const Grid3& grid() const { return psi[0].grid(); }
};

/// tube family from a placement (profiles + potentials)
PipeFamily build_pipe_family(const Grid3& g, const Placement& placement);

/// single-transverse-harmonic family: psi_f = sqrt(2) cos(2 pi m_f . (X - p_f))
/// with |m_f| = 1, m_f . f = 0 and quadrature phases, so that every product
/// psi_f psi_g (f != g) has zero mean.  Supports are not disjoint; used when
/// the composed frequency lambda * bandwidth must stay under the grid Nyquist.
PipeFamily build_harmonic_family(const Grid3& g);

/// u = sum_f gamma_f psi_f f
VectorField3 mikado_flow(const PipeFamily& fam, const std::array<double, 6>& gamma);

/// identity sum_f (1/4) f (x) f = delta and the 6x6 Gram matrix of the
/// f (x) f basis (integer arithmetic); returns the Gram determinant
long long ff_gram_determinant();

void save_pipe_family(const PipeFamily& fam, const std::string& base_path);
PipeFamily load_pipe_family(const std::string& base_path);

}  // namespace onsager::mikado
