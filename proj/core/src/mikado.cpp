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
#include "onsager/mikado.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "onsager/field_io.hpp"
#include "onsager/spectral_ops.hpp"

namespace onsager::mikado {

namespace {
constexpr double TWO_PI = 2.0 * std::numbers::pi;

Vec3i cross(const Vec3i& a, const Vec3i& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
}  // namespace

const std::array<Vec3i, 6>& directions() {
  static const std::array<Vec3i, 6> dirs = {{{1, 1, 0},
                                             {1, -1, 0},
                                             {1, 0, 1},
                                             {1, 0, -1},
                                             {0, 1, 1},
                                             {0, 1, -1}}};
  return dirs;
}

double line_pair_distance(const Vec3d& p, const Vec3d& q, const Vec3i& f, const Vec3i& g) {
  // The set {t f - s g + k : t,s real, k integer} is the plane span{f,g}
  // shifted by the lattice, so the distance is the gap between the normal
  // component of p - q and the lattice's normal components gcd(f x g) Z.
  const Vec3i n = cross(f, g);
  const int gg = std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
  const double nn = std::sqrt(double(n[0]) * n[0] + double(n[1]) * n[1] + double(n[2]) * n[2]);
  const double c = (p[0] - q[0]) * n[0] + (p[1] - q[1]) * n[1] + (p[2] - q[2]) * n[2];
  const double r = std::abs(c - gg * std::round(c / gg));
  return r / nn;
}

namespace {

double min_pair_distance(const std::array<Vec3d, 6>& pts) {
  const auto& dirs = directions();
  double m = 1e300;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      m = std::min(m, line_pair_distance(pts[i], pts[j], dirs[i], dirs[j]));
  return m;
}

}  // namespace

Placement place_pipes(int sample_density) {
  if (sample_density < 1000)
    throw std::invalid_argument("place_pipes: sample_density must be >= 1000");
  // deterministic seed: a known good local optimum of the max-min objective
  std::array<Vec3d, 6> pts = {{{0.089319, 0.275931, 0.275568},
                               {0.266051, 0.264135, 0.773707},
                               {0.865703, 0.442663, 0.218553},
                               {0.563436, 0.774136, 0.632988},
                               {0.589385, 0.587809, 0.754049},
                               {0.254190, 0.631226, 0.751811}}};
  double v = min_pair_distance(pts);
  double step = 0.05;
  const double step_min = 1.0 / double(sample_density);
  while (step > step_min) {
    bool improved = false;
    for (int i = 0; i < 6; ++i)
      for (int ax = 0; ax < 3; ++ax) {
        double base = pts[i][ax];
        for (double s : {step, -step}) {
          pts[i][ax] = base + s;
          pts[i][ax] -= std::floor(pts[i][ax]);
          const double v2 = min_pair_distance(pts);
          if (v2 > v + 1e-15) {
            v = v2;
            base = pts[i][ax];
            improved = true;
          }
        }
        pts[i][ax] = base;
      }
    if (!improved) step *= 0.5;
  }
  Placement out;
  out.points = pts;
  out.min_distance = v;
  out.margin = 0.02 * v;
  out.r0 = (v - out.margin) / 6.0;
  if (!(out.r0 > 0.0))
    throw PlacementError("place_pipes: could not separate the six lines (density too low)", out);
  return out;
}

namespace {

/// transverse distance on the torus from grid samples to the line p + t f
std::vector<double> dist_to_line(const Grid3& g, const Vec3d& p, const Vec3i& f) {
  const double fn = std::sqrt(double(f[0]) * f[0] + double(f[1]) * f[1] + double(f[2]) * f[2]);
  const double fu[3] = {f[0] / fn, f[1] / fn, f[2] / fn};
  std::vector<double> out(g.real_size());
  for (int iz = 0; iz < g.n; ++iz)
    for (int iy = 0; iy < g.n; ++iy)
      for (int ix = 0; ix < g.n; ++ix) {
        double d0[3] = {double(ix) / g.n - p[0], double(iy) / g.n - p[1],
                        double(iz) / g.n - p[2]};
        for (double& c : d0) c -= std::round(c);
        double best = 1e300;
        for (int sx = -1; sx <= 1; ++sx)
          for (int sy = -1; sy <= 1; ++sy)
            for (int sz = -1; sz <= 1; ++sz) {
              const double d[3] = {d0[0] + sx, d0[1] + sy, d0[2] + sz};
              const double dot = d[0] * fu[0] + d[1] * fu[1] + d[2] * fu[2];
              double t2 = 0.0;
              for (int a = 0; a < 3; ++a) {
                const double q = d[a] - dot * fu[a];
                t2 += q * q;
              }
              best = std::min(best, t2);
            }
        out[g.real_index(ix, iy, iz)] = std::sqrt(best);
      }
  return out;
}

/// zero every mode off the invariance plane {k.f = 0}
void plane_project(ScalarField3& psi, const Vec3i& f) {
  for_each_mode(psi.grid(), [&](std::size_t i, int kx, int ky, int kz) {
    if (kx * f[0] + ky * f[1] + kz * f[2] != 0) psi[i] = cplx(0.0);
  });
}

}  // namespace

ScalarField3 pipe_profile(const Grid3& g, const Vec3i& f, const Vec3d& p, double r0) {
  if (!(r0 > 0.0)) throw std::invalid_argument("pipe_profile: r0 must be positive");
  // radial shape: core Gaussian minus a shell ring whose weight enforces the
  // discrete zero mean before projection.  The widths balance the spectral
  // ring (band truncation) against the real-space tails; when the grid
  // resolves the tube well (rho = modes across r0 large) the lobes tighten
  // so the inter-tube leakage drops below band-limit level.
  const double rho = g.max_mode() * r0;
  const double t = std::clamp((rho - 1.2) / 0.8, 0.0, 1.0);
  const double s0 = (0.60 - 0.10 * t) * r0;
  const double c1 = (1.90 - 0.40 * t) * r0;
  const double s1 = (0.50 - 0.10 * t) * r0;
  // Poisson-summation estimate of the grid quadrature error for the
  // narrowest lobe: 2 exp(-2 pi^2 (n sigma)^2) relative
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double quad_err = 2.0 * std::exp(-2.0 * pi2 * (g.n * s1) * (g.n * s1));
  if (quad_err > 0.01)
    throw std::runtime_error(
        "pipe_profile: tube under-resolved (estimated quadrature error " +
        std::to_string(quad_err) + " > 1%); increase n or r0");
  const std::vector<double> d = dist_to_line(g, p, f);
  std::vector<double> core(d.size()), shell(d.size());
  double mc = 0.0, ms = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    core[i] = std::exp(-0.5 * (d[i] / s0) * (d[i] / s0));
    const double a = (d[i] - c1) / s1, b = (d[i] + c1) / s1;
    shell[i] = std::exp(-0.5 * a * a) + std::exp(-0.5 * b * b);
    mc += core[i];
    ms += shell[i];
  }
  const double w = mc / ms;
  std::vector<double> raw(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) raw[i] = core[i] - w * shell[i];

  ScalarField3 psi = ScalarField3::from_real(g, raw);
  const double before = l2_norm(psi);
  plane_project(psi, f);
  psi.set_mean(0.0);
  const double after = l2_norm(psi);
  const double discarded =
      std::sqrt(std::max(0.0, before * before - after * after));
  if (!(after > 0.0) || discarded > 0.01 * before)
    throw std::runtime_error(
        "pipe_profile: tube under-resolved on this grid (band/plane projection "
        "discards > 1% of the profile); increase n or r0");
  // normalize the discrete mean of psi^2 to one
  const double ms2 = after * after;  // Parseval: mean of psi^2
  psi *= 1.0 / std::sqrt(ms2);
  return psi;
}

AntisymTensorField3 pipe_antidiv(const ScalarField3& psi, const Vec3i& f) {
  const Grid3& g = psi.grid();
  // Omega^{ab} = grad^a Lap^{-1}[psi f^b] - grad^b Lap^{-1}[psi f^a]
  ScalarField3 inv = laplace_inverse(psi);
  std::array<ScalarField3, 3> dinv = {derivative(inv, 0), derivative(inv, 1),
                                      derivative(inv, 2)};
  AntisymTensorField3 om(g);
  int idx = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b, ++idx) {
      ScalarField3 t = dinv[a];
      t *= double(f[b]);
      t.axpy(-double(f[a]), dinv[b]);
      om.c[idx] = std::move(t);
    }
  return om;
}

PipeFamily build_pipe_family(const Grid3& g, const Placement& placement) {
  PipeFamily fam;
  fam.dirs = directions();
  fam.points = placement.points;
  fam.r0 = placement.r0;
  fam.disjoint = true;
  for (int i = 0; i < 6; ++i) {
    fam.psi[i] = pipe_profile(g, fam.dirs[i], fam.points[i], fam.r0);
    fam.omega[i] = pipe_antidiv(fam.psi[i], fam.dirs[i]);
  }
  return fam;
}

PipeFamily build_harmonic_family(const Grid3& g) {
  PipeFamily fam;
  fam.dirs = directions();
  fam.disjoint = false;
  fam.r0 = 0.0;
  // transverse unit modes: e3 for e1 +- e2, e2 for e1 +- e3, e1 for e2 +- e3;
  // the second member of each pair is phase-shifted by a quarter period so
  // that psi_f psi_g stays mean-free for every pair
  static const std::array<Vec3i, 6> modes = {{{0, 0, 1},
                                              {0, 0, 1},
                                              {0, 1, 0},
                                              {0, 1, 0},
                                              {1, 0, 0},
                                              {1, 0, 0}}};
  for (int i = 0; i < 6; ++i) {
    const double phase = (i % 2 == 0) ? 0.0 : 0.25;
    fam.points[i] = {phase * modes[i][0], phase * modes[i][1], phase * modes[i][2]};
    ScalarField3 psi(g);
    // sqrt(2) cos(2 pi m.(X - p)) as a conjugate mode pair
    const cplx coef = std::sqrt(0.5) * std::exp(cplx(0.0, -TWO_PI * phase));
    psi.set_mode(modes[i][0], modes[i][1], modes[i][2], coef);
    fam.psi[i] = psi;
    fam.omega[i] = pipe_antidiv(fam.psi[i], fam.dirs[i]);
  }
  return fam;
}

VectorField3 mikado_flow(const PipeFamily& fam, const std::array<double, 6>& gamma) {
  VectorField3 u(fam.grid());
  for (int i = 0; i < 6; ++i)
    for (int c = 0; c < 3; ++c)
      if (fam.dirs[i][c] != 0) u[c].axpy(gamma[i] * fam.dirs[i][c], fam.psi[i]);
  return u;
}

long long ff_gram_determinant() {
  const auto& dirs = directions();
  // Gram matrix G_{fg} = <f (x) f, g (x) g> = (f.g)^2
  long long m[6][6];
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      long long d = 0;
      for (int a = 0; a < 3; ++a) d += (long long)dirs[i][a] * dirs[j][a];
      m[i][j] = d * d;
    }
  // fraction-free Gaussian elimination (Bareiss)
  long long prev = 1;
  for (int k = 0; k < 5; ++k) {
    if (m[k][k] == 0) {
      int s = k + 1;
      while (s < 6 && m[s][k] == 0) ++s;
      if (s == 6) return 0;
      for (int j = 0; j < 6; ++j) std::swap(m[k][j], m[s][j]);
      for (int j = 0; j < 6; ++j) m[k][j] = -m[k][j];
    }
    for (int i = k + 1; i < 6; ++i)
      for (int j = k + 1; j < 6; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return m[5][5];
}

void save_pipe_family(const PipeFamily& fam, const std::string& base_path) {
  std::vector<const ScalarField3*> comps;
  for (const auto& p : fam.psi) comps.push_back(&p);
  write_f3d(base_path + ".f3d", comps, 0.0);
  nlohmann::json meta;
  meta["r0"] = fam.r0;
  meta["disjoint"] = fam.disjoint;
  meta["directions"] = nlohmann::json::array();
  meta["offsets"] = nlohmann::json::array();
  for (int i = 0; i < 6; ++i) {
    meta["directions"].push_back(fam.dirs[i]);
    meta["offsets"].push_back(fam.points[i]);
  }
  std::ofstream out(base_path + ".json");
  out << meta.dump(2) << '\n';
}

PipeFamily load_pipe_family(const std::string& base_path) {
  F3dSnapshot snap = read_f3d(base_path + ".f3d");
  if (snap.comps.size() != 6)
    throw std::runtime_error("load_pipe_family: expected six profile components");
  std::ifstream in(base_path + ".json");
  if (!in) throw std::runtime_error("load_pipe_family: missing sidecar json");
  nlohmann::json meta;
  in >> meta;
  PipeFamily fam;
  fam.r0 = meta.at("r0").get<double>();
  fam.disjoint = meta.at("disjoint").get<bool>();
  for (int i = 0; i < 6; ++i) {
    fam.dirs[i] = meta.at("directions")[i].get<Vec3i>();
    fam.points[i] = meta.at("offsets")[i].get<Vec3d>();
    fam.psi[i] = ScalarField3::from_real(snap.grid, snap.comps[i]);
    fam.omega[i] = pipe_antidiv(fam.psi[i], fam.dirs[i]);
  }
  return fam;
}

}  // namespace onsager::mikado
