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
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <random>

#include "onsager/mikado.hpp"
#include "onsager/spectral_ops.hpp"

using namespace onsager;
using namespace onsager::mikado;

namespace {

/// brute-force torus distance between two periodized lines by dense sampling
double sampled_line_distance(const Vec3d& p, const Vec3d& q, const Vec3i& f, const Vec3i& g,
                             int density) {
  double best = 1e300;
  for (int a = 0; a < density; ++a) {
    const double t = double(a) / density;
    const double A[3] = {p[0] + t * f[0], p[1] + t * f[1], p[2] + t * f[2]};
    for (int b = 0; b < density; ++b) {
      const double s = double(b) / density;
      double d2 = 0.0;
      for (int c = 0; c < 3; ++c) {
        double d = A[c] - (q[c] + s * g[c]);
        d -= std::round(d);
        d2 += d * d;
      }
      best = std::min(best, d2);
    }
  }
  return std::sqrt(best);
}

}  // namespace

TEST_CASE("directions: cardinality, symmetry identity and Gram basis") {
  const auto& dirs = directions();
  CHECK(dirs.size() == 6);
  // sum_f (1/4) f^j f^l = delta^{jl}, exact in integer arithmetic
  int sum[3][3] = {};
  for (const auto& f : dirs)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) sum[j][l] += f[j] * f[l];
  for (int j = 0; j < 3; ++j)
    for (int l = 0; l < 3; ++l) CHECK(sum[j][l] == (j == l ? 4 : 0));
  CHECK(ff_gram_determinant() != 0);
}

TEST_CASE("place_pipes: separation, oracle agreement, translation invariance") {
  Placement pl = place_pipes(4096);
  CHECK(pl.r0 > 0.02);
  CHECK(pl.min_distance >= 6.0 * pl.r0);

  const auto& dirs = directions();
  SUBCASE("closed-form distances match dense sampling") {
    for (auto [i, j] : {std::pair{0, 2}, {1, 4}, {3, 5}, {0, 1}}) {
      const double exact = line_pair_distance(pl.points[i], pl.points[j], dirs[i], dirs[j]);
      const double brute =
          sampled_line_distance(pl.points[i], pl.points[j], dirs[i], dirs[j], 600);
      CHECK(brute >= exact - 1e-9);       // sampling can only overestimate
      CHECK(brute <= exact + 4.0 / 600);  // and is close at this density
    }
  }
  SUBCASE("densely sampled min distance >= 6 r0") {
    double m = 1e300;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        m = std::min(m, sampled_line_distance(pl.points[i], pl.points[j], dirs[i], dirs[j], 400));
    CHECK(m >= 6.0 * pl.r0);
  }
  SUBCASE("common lattice translation leaves distances unchanged") {
    auto shifted = pl.points;
    for (auto& p : shifted)
      for (int c = 0; c < 3; ++c) p[c] += 0.37;
    double m = 1e300;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        m = std::min(m, line_pair_distance(shifted[i], shifted[j], dirs[i], dirs[j]));
    CHECK(m == doctest::Approx(pl.min_distance).epsilon(1e-12));
  }
}

TEST_CASE("pipe_profile: moments, invariance and resolution guard") {
  Grid3 g(64);
  Placement pl = place_pipes();
  const auto& dirs = directions();
  ScalarField3 psi = pipe_profile(g, dirs[0], pl.points[0], pl.r0);
  CHECK(std::abs(psi.mean()) < 1e-8);
  const double ms2 = l2_norm(psi) * l2_norm(psi);
  CHECK(ms2 == doctest::Approx(1.0).epsilon(1e-3));
  // directional invariance f.grad psi = 0 (exact via the plane projection)
  ScalarField3 dd(g);
  for (int a = 0; a < 3; ++a)
    if (dirs[0][a] != 0) dd.axpy(double(dirs[0][a]), derivative(psi, a));
  CHECK(sup_norm(dd) < 1e-10 * sup_norm(psi));

  CHECK_THROWS_AS(pipe_profile(Grid3(8), dirs[0], pl.points[0], pl.r0), std::runtime_error);
}

TEST_CASE("pipe_antidiv recovers psi f and is antisymmetric") {
  Grid3 g(64);
  Placement pl = place_pipes();
  const auto& dirs = directions();
  ScalarField3 psi = pipe_profile(g, dirs[1], pl.points[1], pl.r0);
  AntisymTensorField3 om = pipe_antidiv(psi, dirs[1]);
  // div_a Omega^{ab} = psi f^b
  for (int b = 0; b < 3; ++b) {
    ScalarField3 div(g);
    for (int a = 0; a < 3; ++a) {
      if (a == b) continue;
      const int idx = AntisymTensorField3::index(a, b);
      div.axpy(AntisymTensorField3::sign(a, b), derivative(om.c[idx], a));
    }
    ScalarField3 target = psi;
    target *= double(dirs[1][b]);
    div -= target;
    CHECK(sup_norm(div) < 1e-8 * std::max(1.0, sup_norm(psi)));
  }
  for (int k = 0; k < 3; ++k) CHECK(std::abs(om.c[k].mean()) < 1e-14);
}

TEST_CASE("mikado flow: stationarity, disjoint supports, mean of u x u") {
  Grid3 g(64);
  Placement pl = place_pipes();
  PipeFamily fam = build_pipe_family(g, pl);
  CHECK(fam.disjoint);

  SUBCASE("support disjointness (band-limit leakage level)") {
    std::array<std::vector<double>, 6> r;
    std::array<double, 6> peak{};
    for (int i = 0; i < 6; ++i) {
      r[i] = fam.psi[i].to_real();
      for (double v : r[i]) peak[i] = std::max(peak[i], std::abs(v));
    }
    double leak = 0.0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        double m = 0.0;
        for (std::size_t s = 0; s < r[i].size(); ++s)
          m = std::max(m, std::abs(r[i][s] * r[j][s]));
        leak = std::max(leak, m / (peak[i] * peak[j]));
      }
    CHECK(leak < 1e-3);  // the 1e-6 figure needs finer grids, see the n=160 case
  }

  SUBCASE("single pipe and full flow are stationary") {
    VectorField3 u1 = mikado_flow(fam, {1, 0, 0, 0, 0, 0});
    CHECK(sup_norm(divergence(u1)) < 1e-10 * sup_norm(u1));
    VectorField3 du1 = divergence(outer_sym_dealiased(u1, u1));
    CHECK(sup_norm(du1) < 1e-4 * std::numbers::pi * g.n * sup_norm(u1) * sup_norm(u1));

    VectorField3 u = mikado_flow(fam, {0.5, 0.5, 0.5, 0.5, 0.5, 0.5});
    CHECK(sup_norm(divergence(u)) < 1e-8 * std::numbers::pi * g.n * sup_norm(u));
    VectorField3 du = divergence(outer_sym_dealiased(u, u));
    CHECK(sup_norm(du) < 1e-4 * std::numbers::pi * g.n * sup_norm(u) * sup_norm(u));
  }

  SUBCASE("mean(u x u) = delta for gamma = 1/2, zero flow for gamma = 0") {
    VectorField3 u = mikado_flow(fam, {0.5, 0.5, 0.5, 0.5, 0.5, 0.5});
    SymTensorField3 uu = outer_sym_dealiased(u, u);
    for (int j = 0; j < 3; ++j)
      for (int l = j; l < 3; ++l) {
        const double m = uu(j, l).mean();
        CHECK(std::abs(m - (j == l ? 1.0 : 0.0)) < 1e-3);
      }
    CHECK(sup_norm(mikado_flow(fam, {0, 0, 0, 0, 0, 0})) == doctest::Approx(0.0));
  }
}

TEST_CASE("harmonic family: identities without support disjointness") {
  Grid3 g(32);
  PipeFamily fam = build_harmonic_family(g);
  CHECK(!fam.disjoint);
  for (int i = 0; i < 6; ++i) {
    CHECK(std::abs(fam.psi[i].mean()) < 1e-14);
    CHECK(l2_norm(fam.psi[i]) == doctest::Approx(1.0).epsilon(1e-12));
    // f.grad psi = 0
    ScalarField3 dd(g);
    for (int a = 0; a < 3; ++a)
      if (fam.dirs[i][a] != 0) dd.axpy(double(fam.dirs[i][a]), derivative(fam.psi[i], a));
    CHECK(sup_norm(dd) < 1e-12);
  }
  // every pairwise product is mean-free (quadrature phases)
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      CHECK(std::abs(multiply_dealiased(fam.psi[i], fam.psi[j]).mean()) < 1e-14);
  // mikado stationarity of a single harmonic pipe
  VectorField3 u1 = mikado_flow(fam, {1, 0, 0, 0, 0, 0});
  CHECK(sup_norm(divergence(u1)) < 1e-12);
  CHECK(sup_norm(divergence(outer_sym_dealiased(u1, u1))) < 1e-12);
}

TEST_CASE("serialization roundtrip") {
  Grid3 g(32);
  PipeFamily fam = build_harmonic_family(g);
  save_pipe_family(fam, "/tmp/onsager_fam_test");
  PipeFamily back = load_pipe_family("/tmp/onsager_fam_test");
  CHECK(back.disjoint == fam.disjoint);
  for (int i = 0; i < 6; ++i) {
    CHECK(back.dirs[i] == fam.dirs[i]);
    ScalarField3 d = back.psi[i];
    d -= fam.psi[i];
    CHECK(sup_norm(d) < 1e-12);
  }
  std::remove("/tmp/onsager_fam_test.f3d");
  std::remove("/tmp/onsager_fam_test.json");
}

TEST_CASE("pipe profiles at n = 160 reach the strict leakage tolerance" * doctest::skip(false)) {
  // slow: full-resolution check of the 1e-6-of-peak support disjointness
  Grid3 g(160);
  Placement pl = place_pipes();
  PipeFamily fam = build_pipe_family(g, pl);
  std::array<std::vector<double>, 6> r;
  std::array<double, 6> peak{};
  for (int i = 0; i < 6; ++i) {
    r[i] = fam.psi[i].to_real();
    for (double v : r[i]) peak[i] = std::max(peak[i], std::abs(v));
  }
  double leak = 0.0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      double m = 0.0;
      for (std::size_t s = 0; s < r[i].size(); ++s)
        m = std::max(m, std::abs(r[i][s] * r[j][s]));
      leak = std::max(leak, m / (peak[i] * peak[j]));
    }
  CHECK(leak < 1e-6);
}
