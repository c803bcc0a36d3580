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
#include <numbers>
#include <random>

#include "onsager/euler_reynolds.hpp"
#include "onsager/field_io.hpp"
#include "onsager/littlewood_paley.hpp"
#include "onsager/mollify.hpp"
#include "onsager/spectral_ops.hpp"
#include "test_helpers.hpp"

using namespace onsager;
using onsager::testing::field_from;
using onsager::testing::random_band_limited;
using onsager::testing::random_vector_band_limited;

namespace {
constexpr double PI = std::numbers::pi;

double sup_diff(const ScalarField3& a, const ScalarField3& b) {
  ScalarField3 d = a;
  d -= b;
  return sup_norm(d);
}
}  // namespace

TEST_CASE("derivative: single-mode exactness") {
  Grid3 g(16);
  auto f = field_from(g, [](double x, double, double) { return std::cos(2 * PI * x); });
  auto d = derivative(f, 0);
  auto expect = field_from(g, [](double x, double, double) { return -2 * PI * std::sin(2 * PI * x); });
  CHECK(sup_diff(d, expect) < 1e-12);

  // derivative along an absent direction vanishes
  CHECK(sup_norm(derivative(f, 1)) < 1e-13);

  auto s = field_from(g, [](double x, double, double) { return std::sin(2 * PI * x); });
  auto d2 = derivative(s, {2, 0, 0});
  auto expect2 =
      field_from(g, [](double x, double, double) { return -4 * PI * PI * std::sin(2 * PI * x); });
  CHECK(sup_diff(d2, expect2) < 1e-11);
}

TEST_CASE("laplace_inverse on single modes and constants") {
  Grid3 g(16);
  auto f = field_from(g, [](double x, double, double) { return std::cos(2 * PI * x); });
  auto u = laplace_inverse(f);
  auto expect =
      field_from(g, [](double x, double, double) { return -std::cos(2 * PI * x) / (4 * PI * PI); });
  CHECK(sup_diff(u, expect) < 1e-13);

  ScalarField3 c(g);
  c.set_mean(3.7);
  CHECK(sup_norm(laplace_inverse(c)) == doctest::Approx(0.0));

  auto f2 = field_from(g, [](double x, double y, double) { return std::sin(2 * PI * (x + y)); });
  auto u2 = laplace_inverse(f2);
  auto expect2 = field_from(
      g, [](double x, double y, double) { return -std::sin(2 * PI * (x + y)) / (8 * PI * PI); });
  CHECK(sup_diff(u2, expect2) < 1e-13);
}

TEST_CASE("helmholtz splits gradients, solenoidal fields and means") {
  Grid3 g(16);
  SUBCASE("pure gradient") {
    auto phi = field_from(g, [](double x, double, double) { return std::cos(2 * PI * x); });
    VectorField3 u = gradient(phi);
    auto parts = helmholtz(u);
    CHECK(sup_norm(parts.solenoidal) < 1e-12);
    for (int a = 0; a < 3; ++a) CHECK(std::abs(parts.mean[a]) < 1e-14);
  }
  SUBCASE("already solenoidal") {
    VectorField3 u(g);
    u[2] = field_from(g, [](double x, double, double) { return std::cos(2 * PI * x); });
    auto parts = helmholtz(u);
    VectorField3 diff = parts.solenoidal;
    diff -= u;
    CHECK(sup_norm(diff) < 1e-13);
    CHECK(sup_norm(parts.potential) < 1e-14);
  }
  SUBCASE("constant vector") {
    VectorField3 u(g);
    u[0].set_mean(1.0);
    u[1].set_mean(-2.0);
    auto parts = helmholtz(u);
    CHECK(sup_norm(parts.solenoidal) < 1e-14);
    CHECK(parts.mean[0] == doctest::Approx(1.0));
    CHECK(parts.mean[1] == doctest::Approx(-2.0));
  }
  SUBCASE("reassembly identity on random fields") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
      VectorField3 u = random_vector_band_limited(g, 5, rng);
      auto parts = helmholtz(u);
      VectorField3 back = parts.solenoidal;
      back += gradient(parts.potential);
      for (int a = 0; a < 3; ++a) back[a].set_mean(back[a].mean() + parts.mean[a]);
      back -= u;
      CHECK(sup_norm(back) < 1e-10 * sup_norm(u));
    }
  }
}

TEST_CASE("antidiv_R inverts the divergence on mean-zero fields") {
  Grid3 g(16);
  SUBCASE("single transverse mode") {
    VectorField3 u(g);
    u[2] = field_from(g, [](double x, double, double) { return std::cos(2 * PI * x); });
    SymTensorField3 r = antidiv_R(u);
    auto expect =
        field_from(g, [](double x, double, double) { return std::sin(2 * PI * x) / (2 * PI); });
    CHECK(sup_diff(r(0, 2), expect) < 1e-13);
    CHECK(sup_norm(r(0, 0)) < 1e-14);
    CHECK(sup_norm(r(0, 1)) < 1e-14);
    CHECK(sup_norm(r(1, 1)) < 1e-14);
    CHECK(sup_norm(r(1, 2)) < 1e-14);
    CHECK(sup_norm(r(2, 2)) < 1e-14);
    VectorField3 back = divergence(r);
    back -= u;
    CHECK(sup_norm(back) < 1e-13);
  }
  SUBCASE("constant fields map to zero") {
    VectorField3 u(g);
    u[1].set_mean(4.0);
    CHECK(sup_norm(antidiv_R(u)) < 1e-14);
  }
  SUBCASE("gradient input gives the diagonal potential") {
    // U = grad(sin(2 pi y)): antidiv reduces to delta^{jl} Lap^{-1} Lap phi
    auto phi = field_from(g, [](double, double y, double) { return std::sin(2 * PI * y); });
    VectorField3 u = gradient(phi);
    SymTensorField3 r = antidiv_R(u);
    CHECK(sup_diff(r(0, 0), phi) < 1e-13);
    CHECK(sup_diff(r(1, 1), phi) < 1e-13);
    CHECK(sup_diff(r(2, 2), phi) < 1e-13);
    CHECK(sup_norm(r(0, 1)) < 1e-14);
    VectorField3 back = divergence(r);
    back -= u;
    CHECK(sup_norm(back) < 1e-12);
  }
  SUBCASE("divergence identity on random mean-corrected fields") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      VectorField3 u = random_vector_band_limited(g, 6, rng, /*zero_mean=*/true);
      VectorField3 back = divergence(antidiv_R(u));
      back -= u;
      CHECK(sup_norm(back) < 1e-10 * sup_norm(u));
      for (int k = 0; k < 6; ++k) CHECK(std::abs(antidiv_R(u)[k].mean()) < 1e-14);
    }
  }
}

TEST_CASE("littlewood-paley bands and partition") {
  Grid3 g(32);
  SUBCASE("mode at |k| = 4 sits exactly in band 2") {
    auto f = field_from(g, [](double x, double, double) { return std::cos(2 * PI * 4 * x); });
    CHECK(sup_diff(lp_project(f, 2), f) < 1e-13);
    for (int q = 0; q <= lp_qmax(g); ++q) {
      if (q == 2) continue;
      CHECK(sup_norm(lp_project(f, q)) < 1e-13);
    }
  }
  SUBCASE("constants live in the mean") {
    ScalarField3 c(g);
    c.set_mean(2.0);
    CHECK(sup_norm(lp_project(c, 0)) < 1e-14);
    CHECK(sup_diff(lp_project_le(c, 3), c) < 1e-14);
  }
  SUBCASE("|k| = 3 splits across bands 1 and 2 with equal weight") {
    auto f = field_from(g, [](double x, double, double) { return std::cos(2 * PI * 3 * x); });
    ScalarField3 p1 = lp_project(f, 1), p2 = lp_project(f, 2);
    // chi(3/2) = 1/2 for the quintic smoothstep, chi(3/4) = 1, chi(3) = 0
    CHECK(sup_norm(p1) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(sup_norm(p2) == doctest::Approx(0.5).epsilon(1e-10));
    ScalarField3 s = p1;
    s += p2;
    CHECK(sup_diff(s, f) < 1e-12);
  }
  SUBCASE("partition of unity over bands") {
    std::mt19937 rng(3);
    ScalarField3 f = random_band_limited(g, 14, rng);
    ScalarField3 acc(g);
    acc.set_mean(f.mean());
    for (int q = 0; q <= lp_qmax(g); ++q) acc += lp_project(f, q);
    CHECK(sup_diff(acc, f) < 1e-10 * sup_norm(f));
  }
}

TEST_CASE("holder seminorm behaves like a C^alpha norm") {
  Grid3 g(64);
  SUBCASE("constants have zero seminorm") {
    ScalarField3 c(g);
    c.set_mean(1.0);
    CHECK(holder_seminorm(c, 0.5) == doctest::Approx(0.0));
  }
  SUBCASE("dyadic frequency doubling scales by 2^alpha") {
    const double alpha = 1.0 / 3.0;
    auto f1 = field_from(g, [](double x, double, double) { return std::cos(2 * PI * 8 * x); });
    auto f2 = field_from(g, [](double x, double, double) { return std::cos(2 * PI * 16 * x); });
    const double ratio = holder_seminorm(f2, alpha) / holder_seminorm(f1, alpha);
    CHECK(ratio > std::pow(2.0, alpha) * 0.75);
    CHECK(ratio < std::pow(2.0, alpha) * 1.25);
  }
  SUBCASE("difference quotients agree within a factor of 8") {
    std::mt19937 rng(17);
    const double alpha = 0.4;
    ScalarField3 f = random_band_limited(g, 10, rng);
    const std::vector<double> r = f.to_real();
    double quot = 0.0;
    std::uniform_int_distribution<int> pick(0, g.n - 1);
    auto sample = [&](int ix, int iy, int iz, int hx, int hy, int hz) {
      const double fx = r[g.real_index(ix, iy, iz)];
      const double fy = r[g.real_index((ix + hx) % g.n, (iy + hy) % g.n, (iz + hz) % g.n)];
      double h[3] = {double(hx) / g.n, double(hy) / g.n, double(hz) / g.n};
      for (double& v : h) v = std::min(v, 1.0 - v);
      const double hn = std::sqrt(h[0] * h[0] + h[1] * h[1] + h[2] * h[2]);
      quot = std::max(quot, std::abs(fy - fx) / std::pow(hn, alpha));
    };
    for (int trial = 0; trial < 20000; ++trial) {
      const int ix = pick(rng), iy = pick(rng), iz = pick(rng);
      sample(ix, iy, iz, pick(rng), pick(rng), pick(rng));
      sample(ix, iy, iz, 1, 0, 0);
      sample(ix, iy, iz, 0, 3, 0);
    }
    const double lp = holder_seminorm(f, alpha);
    CHECK(lp < 8.0 * quot);
    CHECK(quot < 8.0 * lp);
  }
}

TEST_CASE("mollification: mass, defect scaling, commutation") {
  Grid3 g(64);
  SUBCASE("constants are fixed points") {
    ScalarField3 c(g);
    c.set_mean(2.5);
    CHECK(sup_diff(mollify(c, 0.1), c) < 1e-14);
  }
  SUBCASE("defect is quadratic in eps") {
    auto f = field_from(g, [](double x, double, double) { return std::cos(2 * PI * 3 * x); });
    auto defect = [&](double eps) { return sup_diff(mollify(f, eps), f); };
    const double ratio = defect(0.02) / defect(0.01);
    CHECK(ratio > 4.0 * 0.8);
    CHECK(ratio < 4.0 * 1.2);
  }
  SUBCASE("mean is preserved") {
    std::mt19937 rng(5);
    ScalarField3 f = random_band_limited(g, 9, rng);
    CHECK(mollify(f, 0.07).mean() == doctest::Approx(f.mean()));
  }
  SUBCASE("derivatives commute exactly in mode space") {
    std::mt19937 rng(9);
    ScalarField3 f = random_band_limited(g, 9, rng);
    CHECK(sup_diff(derivative(mollify(f, 0.05), 1), mollify(derivative(f, 1), 0.05)) < 1e-12);
  }
}

TEST_CASE("commutator defect: vanishing, scaling and calibration stability") {
  Grid3 g(64);
  SUBCASE("constant factor kills the defect") {
    ScalarField3 c(g);
    c.set_mean(3.0);
    auto f = field_from(g, [](double x, double, double) { return std::sin(2 * PI * x); });
    CHECK(sup_norm(commutator_defect(c, f, 0.05)) < 1e-13);
  }
  SUBCASE("quadratic scaling in eps") {
    auto f = field_from(g, [](double x, double, double) { return std::sin(2 * PI * x); });
    const double d1 = sup_norm(commutator_defect(f, f, 0.05));
    const double d2 = sup_norm(commutator_defect(f, f, 0.025));
    CHECK(d1 / d2 > 4.0 * 0.8);
    CHECK(d1 / d2 < 4.0 * 1.2);
  }
  SUBCASE("calibrated constant is stable across frequencies") {
    // C_fit = |defect| / (eps^2 |grad f| |grad g|) on a calibration pair,
    // then checked on frequencies up to n/4
    const double eps = 0.02;
    auto make = [&](int k) {
      return field_from(g, [k](double x, double, double) { return std::sin(2 * PI * k * x); });
    };
    auto cfit = [&](int kf, int kg) {
      auto f = make(kf), gg = make(kg);
      const double num = sup_norm(commutator_defect(f, gg, eps));
      return num / (eps * eps * sup_norm(gradient(f)) * sup_norm(gradient(gg)));
    };
    const double c0 = cfit(1, 2);
    for (int k = 2; k <= g.n / 4; k *= 2) {
      const double c = cfit(k / 2 + 1, k);
      CHECK(c > c0 / 1.5);
      CHECK(c < c0 * 1.5);
    }
  }
}

TEST_CASE("littlewood-paley commutator estimate (transport structure)") {
  Grid3 g(64);
  std::mt19937 rng(23);
  const double alpha = 0.5;
  VectorField3 u = random_vector_band_limited(g, 6, rng);
  ScalarField3 f = random_band_limited(g, 12, rng);
  const double gradu = std::max({sup_norm(gradient(u[0])), sup_norm(gradient(u[1])),
                                 sup_norm(gradient(u[2]))});
  const double ca = holder_seminorm(f, alpha);
  auto advect = [&](const ScalarField3& w) {
    ScalarField3 s(g);
    for (int a = 0; a < 3; ++a) s += multiply_dealiased(u[a], derivative(w, a));
    return s;
  };
  double cmeasured[3];
  int qi = 0;
  for (int q = 2; q <= 4; ++q, ++qi) {
    ScalarField3 lhs = advect(lp_project(f, q));
    lhs -= lp_project(advect(f), q);
    cmeasured[qi] = sup_norm(lhs) * std::pow(2.0, alpha * q) / (gradu * ca);
  }
  for (int i = 1; i < 3; ++i) {
    CHECK(cmeasured[i] < 4.0 * cmeasured[0]);
    CHECK(cmeasured[i] > cmeasured[0] / 4.0);
  }
}

TEST_CASE("dealiased products are exact truncated products") {
  Grid3 g(32);
  std::mt19937 rng(29);
  // bandwidth small enough that the product fits the grid: exactness check
  ScalarField3 a = random_band_limited(g, 7, rng);
  ScalarField3 b = random_band_limited(g, 7, rng);
  ScalarField3 prod = multiply_dealiased(a, b);
  auto ra = a.to_real(), rb = b.to_real(), rp = prod.to_real();
  double worst = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i)
    worst = std::max(worst, std::abs(ra[i] * rb[i] - rp[i]));
  CHECK(worst < 1e-12 * sup_norm(a) * sup_norm(b));
}

TEST_CASE("euler-reynolds residual on exact states") {
  Grid3 g(16);
  SUBCASE("zero state") {
    std::vector<VectorField3> vs(3, VectorField3(g));
    std::vector<ScalarField3> ps(3, ScalarField3(g));
    std::vector<SymTensorField3> rs(3, SymTensorField3(g));
    EulerReynoldsState s{TimeSampled<VectorField3>(0.0, 0.1, vs),
                         TimeSampled<ScalarField3>(0.0, 0.1, ps),
                         TimeSampled<SymTensorField3>(0.0, 0.1, rs),
                         FreqEnergyLevels{},
                         {0.0, 0.2}};
    auto rep = euler_reynolds_residual(s);
    CHECK(rep.worst < 1e-14);
    CHECK(rep.max_div_v < 1e-14);
  }
  SUBCASE("constant stress has vanishing divergence") {
    std::vector<VectorField3> vs(3, VectorField3(g));
    std::vector<ScalarField3> ps(3, ScalarField3(g));
    SymTensorField3 R(g);
    for (int d : {0, 3, 5}) R[d].set_mean(0.7);
    std::vector<SymTensorField3> rs(3, R);
    EulerReynoldsState s{TimeSampled<VectorField3>(0.0, 0.1, vs),
                         TimeSampled<ScalarField3>(0.0, 0.1, ps),
                         TimeSampled<SymTensorField3>(0.0, 0.1, rs),
                         FreqEnergyLevels{},
                         {0.0, 0.2}};
    CHECK(euler_reynolds_residual(s).worst < 1e-14);
  }
}

TEST_CASE("f3d roundtrip") {
  Grid3 g(16);
  std::mt19937 rng(31);
  VectorField3 u = random_vector_band_limited(g, 5, rng);
  const std::string path = "/tmp/onsager_test_roundtrip.f3d";
  write_f3d(path, u, 1.25);
  F3dSnapshot snap = read_f3d(path);
  CHECK(snap.grid.n == 16);
  CHECK(snap.time == doctest::Approx(1.25));
  CHECK(snap.comps.size() == 3);
  auto r0 = u[0].to_real();
  double worst = 0.0;
  for (std::size_t i = 0; i < r0.size(); ++i)
    worst = std::max(worst, std::abs(r0[i] - snap.comps[0][i]));
  CHECK(worst < 1e-15);
  std::remove(path.c_str());
}
