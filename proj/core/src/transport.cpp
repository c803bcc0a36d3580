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
#include "onsager/transport.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "onsager/fft.hpp"
#include "onsager/interpolation.hpp"
#include "onsager/spectral_ops.hpp"

namespace onsager {

std::size_t sample_index_of(double t, double t0, double dt, std::size_t n) {
  const double u = (t - t0) / dt;
  const long j = std::lround(u);
  if (std::abs(u - double(j)) > 1e-6)
    throw std::invalid_argument("sample_index_of: time not on the sample grid");
  if (j < 0 || std::size_t(j) >= n)
    throw std::out_of_range("sample_index_of: time outside the sampled range");
  return std::size_t(j);
}

namespace {

/// cubic quadrature weights for the source integral over [t_j, t_{j+1}],
/// sampled at four consecutive nodes; stencil clamped at series ends
struct QuadStencil {
  long base;  // first sample index of the stencil, relative to the series
  double w[4];
};

QuadStencil quad_stencil(long j, long lo, long hi) {
  // nodes j-1..j+2 when available
  if (j - 1 >= lo && j + 2 <= hi)
    return {j - 1, {-1.0 / 24, 13.0 / 24, 13.0 / 24, -1.0 / 24}};
  if (j - 1 < lo) return {j, {3.0 / 8, 19.0 / 24, -5.0 / 24, 1.0 / 24}};
  return {j - 2, {1.0 / 24, -5.0 / 24, 19.0 / 24, 3.0 / 8}};
}

}  // namespace

struct TransportSolver::Impl {
  const TimeSampled<VectorField3>* v = nullptr;
  Grid3 grid;
  bool identity = false;
  bool keep_feet = false;

  // raw real velocity samples (lazily built)
  std::map<std::size_t, std::array<std::vector<double>, 3>> vraw;
  // feet per (from,to) step when caching is on
  std::map<std::pair<std::size_t, std::size_t>, std::vector<float>> feet;

  const std::array<std::vector<double>, 3>& vel_raw(std::size_t j) {
    auto it = vraw.find(j);
    if (it == vraw.end()) {
      std::array<std::vector<double>, 3> r = {(*v)[j][0].to_real(), (*v)[j][1].to_real(),
                                              (*v)[j][2].to_real()};
      it = vraw.emplace(j, std::move(r)).first;
    }
    return it->second;
  }

  /// velocity at the midpoint between samples jlo and jlo+1 (cubic in time)
  std::array<std::vector<double>, 3> vel_half(std::size_t jlo) {
    const long lo = 0, hi = long(v->size()) - 1;
    long b = lo;
    if (hi >= 3) b = std::clamp(long(jlo) - 1, lo, hi - 3);
    const int m = int(std::min<long>(4, hi - lo + 1));
    const double u = double(jlo) + 0.5 - double(b);
    std::array<std::vector<double>, 3> out;
    for (int c = 0; c < 3; ++c) {
      ScalarField3 acc = (*v)[b][c];
      double w0 = 1.0;
      for (int q = 1; q < m; ++q) w0 *= (u - q) / (0.0 - q);
      acc *= w0;
      for (int a = 1; a < m; ++a) {
        double w = 1.0;
        for (int q = 0; q < m; ++q)
          if (q != a) w *= (u - q) / double(a - q);
        acc.axpy(w, (*v)[b + a][c]);
      }
      out[c] = acc.to_real();
    }
    return out;
  }

  /// RK4 characteristic feet for the step from sample j_from to j_to
  /// (|j_from - j_to| = 1): foot(x) = position at t_from of the
  /// characteristic through (t_to, x).  Also reports max displacement.
  const std::vector<float>& compute_feet(std::size_t j_from, std::size_t j_to,
                                         double* max_disp, std::vector<float>& scratch) {
    const auto key = std::make_pair(j_from, j_to);
    if (keep_feet) {
      auto it = feet.find(key);
      if (it != feet.end()) {
        *max_disp = it->second.back();  // stashed in the last entry
        return it->second;
      }
    }
    const int n = grid.n;
    const double h = v->time_at(j_from) - v->time_at(j_to);
    const auto& v_to = vel_raw(j_to);
    const auto& v_from = vel_raw(j_from);
    const auto v_mid = vel_half(std::min(j_from, j_to));
    RawLagrange smid{{v_mid[0].data(), v_mid[1].data(), v_mid[2].data()}, 3, n};
    RawLagrange send{{v_from[0].data(), v_from[1].data(), v_from[2].data()}, 3, n};

    std::vector<float>& out = scratch;
    out.assign(grid.real_size() * 3 + 1, 0.0f);
    double worst = 0.0;
    std::size_t p = 0;
    for (int iz = 0; iz < n; ++iz)
      for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix, ++p) {
          const double x = double(ix) / n, y = double(iy) / n, z = double(iz) / n;
          const std::size_t ri = p;
          double k1[3] = {v_to[0][ri], v_to[1][ri], v_to[2][ri]};
          double k2[3], k3[3], k4[3];
          smid.eval(x + 0.5 * h * k1[0], y + 0.5 * h * k1[1], z + 0.5 * h * k1[2], k2);
          smid.eval(x + 0.5 * h * k2[0], y + 0.5 * h * k2[1], z + 0.5 * h * k2[2], k3);
          send.eval(x + h * k3[0], y + h * k3[1], z + h * k3[2], k4);
          double d2 = 0.0;
          for (int c = 0; c < 3; ++c) {
            const double step = (h / 6.0) * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
            out[3 * p + c] = float(step);
            d2 += step * step;
          }
          worst = std::max(worst, d2);
        }
    *max_disp = std::sqrt(worst);
    out.back() = float(*max_disp);
    if (keep_feet) {
      auto [it, ok] = feet.emplace(key, std::move(out));
      (void)ok;
      return it->second;
    }
    return out;
  }
};

TransportSolver::TransportSolver(const TimeSampled<VectorField3>& v)
    : impl_(std::make_unique<Impl>()), v_(&v) {
  impl_->v = &v;
  impl_->grid = v[0].grid();
  bool ident = true;
  for (std::size_t j = 0; j < v.size() && ident; ++j)
    for (int c = 0; c < 3 && ident; ++c)
      for (std::size_t i = 0; i < v[j][c].size(); ++i)
        if (v[j][c][i] != cplx(0.0)) {
          ident = false;
          break;
        }
  identity_ = ident;
  impl_->identity = ident;
}

TransportSolver::~TransportSolver() = default;

void TransportSolver::cache_feet(bool on) { impl_->keep_feet = on; }

namespace {

template <class FieldT>
struct CompCount;
template <>
struct CompCount<ScalarField3> {
  static constexpr int n = 1;
  static ScalarField3* ptr(ScalarField3& f, int) { return &f; }
  static const ScalarField3* ptr(const ScalarField3& f, int) { return &f; }
};
template <>
struct CompCount<VectorField3> {
  static constexpr int n = 3;
  static ScalarField3* ptr(VectorField3& f, int c) { return &f[c]; }
  static const ScalarField3* ptr(const VectorField3& f, int c) { return &f[c]; }
};
template <>
struct CompCount<SymTensorField3> {
  static constexpr int n = 6;
  static ScalarField3* ptr(SymTensorField3& f, int c) { return &f[c]; }
  static const ScalarField3* ptr(const SymTensorField3& f, int c) { return &f[c]; }
};

}  // namespace

template <class FieldT>
static TimeSampled<FieldT> solve_impl(TransportSolver::Impl& im, bool identity,
                                      const FieldT& f0, const TimeSampled<FieldT>* g,
                                      std::size_t i_anchor, std::size_t i_lo,
                                      std::size_t i_hi) {
  constexpr int NC = CompCount<FieldT>::n;
  const TimeSampled<VectorField3>& v = *im.v;
  const Grid3& grid = im.grid;
  if (i_lo > i_anchor || i_anchor > i_hi || i_hi >= v.size())
    throw std::invalid_argument("transport solve: bad window indices");
  long goff = 0;
  if (g) {
    if (std::abs(g->dt - v.dt) > 1e-12 * v.dt)
      throw std::invalid_argument("transport solve: source sampling mismatch");
    goff = std::lround((v.t0 - g->t0) / v.dt);
  }
  // quadrature combination of the source over [t_lo(j), t_lo(j)+dt]
  auto source_G = [&](std::size_t j_interval) -> FieldT {
    FieldT G(grid);
    if (!g) return G;
    const long jg = long(j_interval) + goff;
    QuadStencil st = quad_stencil(jg, goff + long(i_lo), goff + long(i_hi));
    st.base = std::clamp(st.base, 0L, long(g->size()) - 4);
    for (int c = 0; c < NC; ++c) {
      ScalarField3& acc = *CompCount<FieldT>::ptr(G, c);
      for (int a = 0; a < 4; ++a)
        acc.axpy(st.w[a] * v.dt, (*CompCount<FieldT>::ptr((*g)[st.base + a], c)));
    }
    return G;
  };

  std::vector<FieldT> samples(i_hi - i_lo + 1, FieldT(grid));
  samples[i_anchor - i_lo] = f0;
  std::vector<float> feet_scratch;

  auto step = [&](std::size_t j_from, std::size_t j_to) {
    const FieldT& fold = samples[j_from - i_lo];
    FieldT& fnew = samples[j_to - i_lo];
    const double sign = (j_to > j_from) ? 1.0 : -1.0;
    const std::size_t j_interval = std::min(j_from, j_to);
    FieldT G = source_G(j_interval);
    if (identity) {
      fnew = fold;
      for (int c = 0; c < NC; ++c)
        CompCount<FieldT>::ptr(fnew, c)->axpy(sign, *CompCount<FieldT>::ptr(G, c));
      return;
    }
    double max_disp = 0.0;
    const std::vector<float>& ft = im.compute_feet(j_from, j_to, &max_disp, feet_scratch);

    // transported field read on the doubled grid
    std::vector<const ScalarField3*> fold_comps;
    for (int c = 0; c < NC; ++c) fold_comps.push_back(CompCount<FieldT>::ptr(fold, c));
    FieldInterpolator fi(fold_comps);

    const bool taylor_source = g && max_disp < 0.25 / grid.n;
    std::array<std::vector<double>, NC> Gr;
    std::array<std::array<std::vector<double>, 3>, NC> dGr;
    std::unique_ptr<FieldInterpolator> gi;
    if (g) {
      if (taylor_source) {
        for (int c = 0; c < NC; ++c) {
          const ScalarField3& Gc = *CompCount<FieldT>::ptr(G, c);
          Gr[c] = Gc.to_real();
          for (int a = 0; a < 3; ++a) dGr[c][a] = derivative(Gc, a).to_real();
        }
      } else {
        std::vector<const ScalarField3*> gcomps;
        for (int c = 0; c < NC; ++c) gcomps.push_back(CompCount<FieldT>::ptr(G, c));
        gi = std::make_unique<FieldInterpolator>(gcomps);
      }
    }

    const int n = grid.n;
    std::array<std::vector<double>, NC> out;
    for (int c = 0; c < NC; ++c) out[c].resize(grid.real_size());
    std::size_t p = 0;
    double vals[NC], gvals[NC];
    for (int iz = 0; iz < n; ++iz)
      for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix, ++p) {
          const double dx = ft[3 * p], dy = ft[3 * p + 1], dz = ft[3 * p + 2];
          const double x = double(ix) / n, y = double(iy) / n, z = double(iz) / n;
          fi.eval(x + dx, y + dy, z + dz, vals);
          if (g) {
            if (taylor_source) {
              for (int c = 0; c < NC; ++c)
                gvals[c] = Gr[c][p] + 0.5 * (dx * dGr[c][0][p] + dy * dGr[c][1][p] +
                                             dz * dGr[c][2][p]);
            } else {
              gi->eval(x + 0.5 * dx, y + 0.5 * dy, z + 0.5 * dz, gvals);
            }
            for (int c = 0; c < NC; ++c) vals[c] += sign * gvals[c];
          }
          for (int c = 0; c < NC; ++c) out[c][p] = vals[c];
        }
    for (int c = 0; c < NC; ++c)
      *CompCount<FieldT>::ptr(fnew, c) = ScalarField3::from_real(grid, out[c]);
  };

  for (std::size_t j = i_anchor; j < i_hi; ++j) step(j, j + 1);
  for (std::size_t j = i_anchor; j > i_lo; --j) step(j, j - 1);
  return TimeSampled<FieldT>(v.time_at(i_lo), v.dt, std::move(samples));
}

TimeSampled<ScalarField3> TransportSolver::solve(const ScalarField3& f0,
                                                 const TimeSampled<ScalarField3>* g,
                                                 std::size_t ia, std::size_t il,
                                                 std::size_t ih) {
  return solve_impl(*impl_, identity_, f0, g, ia, il, ih);
}
TimeSampled<VectorField3> TransportSolver::solve(const VectorField3& f0,
                                                 const TimeSampled<VectorField3>* g,
                                                 std::size_t ia, std::size_t il,
                                                 std::size_t ih) {
  return solve_impl(*impl_, identity_, f0, g, ia, il, ih);
}
TimeSampled<SymTensorField3> TransportSolver::solve(const SymTensorField3& f0,
                                                    const TimeSampled<SymTensorField3>* g,
                                                    std::size_t ia, std::size_t il,
                                                    std::size_t ih) {
  return solve_impl(*impl_, identity_, f0, g, ia, il, ih);
}

namespace {

template <class FieldT>
TimeSampled<FieldT> run_window(const TimeSampled<VectorField3>& v, const FieldT& f0,
                               const TimeSampled<FieldT>* g, double t0, double t1) {
  const std::size_t ia = sample_index_of(t0, v.t0, v.dt, v.size());
  const std::size_t ib = sample_index_of(t1, v.t0, v.dt, v.size());
  TransportSolver solver(v);
  return solver.solve(f0, g, ia, std::min(ia, ib), std::max(ia, ib));
}

}  // namespace

TimeSampled<SymTensorField3> transport_solve(const TimeSampled<VectorField3>& v,
                                             const SymTensorField3& f0,
                                             const TimeSampled<SymTensorField3>* g,
                                             double t0, double t1) {
  return run_window(v, f0, g, t0, t1);
}
TimeSampled<ScalarField3> transport_solve(const TimeSampled<VectorField3>& v,
                                          const ScalarField3& f0,
                                          const TimeSampled<ScalarField3>* g, double t0,
                                          double t1) {
  return run_window(v, f0, g, t0, t1);
}

TransportEllipticResult transport_elliptic_solve(const TimeSampled<VectorField3>& v,
                                                 const TimeSampled<VectorField3>& Z,
                                                 const SymTensorField3& rho0, double t0,
                                                 double t1, double tol, int max_iter) {
  const Grid3& grid = v[0].grid();
  const std::size_t ia = sample_index_of(t0, v.t0, v.dt, v.size());
  const std::size_t ib = sample_index_of(t1, v.t0, v.dt, v.size());
  const std::size_t ilo = std::min(ia, ib), ihi = std::max(ia, ib);
  const std::size_t m = ihi - ilo + 1;

  TransportSolver solver(v);
  solver.cache_feet(true);

  // velocity gradient, fixed across iterates (real samples; the coupling
  // term is formed pointwise -- the fields here are far below the product
  // Nyquist in every admissible regime)
  std::vector<std::array<std::array<std::vector<double>, 3>, 3>> gradv(m);
  for (std::size_t s = 0; s < m; ++s) {
    Matrix3Field gm = gradient(v[ilo + s]);
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 3; ++a) gradv[s][i][a] = gm(i, a).to_real();
  }

  auto antidiv_source = [&](const TimeSampled<SymTensorField3>& rho)
      -> TimeSampled<SymTensorField3> {
    std::vector<SymTensorField3> src(m, SymTensorField3(grid));
    for (std::size_t s = 0; s < m; ++s) {
      const std::size_t jz = sample_index_of(v.time_at(ilo + s), Z.t0, Z.dt, Z.size());
      VectorField3 w = Z[jz];
      // w^b += grad_a v^i grad_i rho^{ab}
      const SymTensorField3& r = rho[s];
      std::array<std::array<std::vector<double>, 3>, 6> dr;
      for (int k = 0; k < 6; ++k)
        for (int i = 0; i < 3; ++i) dr[k][i] = derivative(r[k], i).to_real();
      for (int b = 0; b < 3; ++b) {
        std::vector<double> acc(grid.real_size(), 0.0);
        for (int a = 0; a < 3; ++a) {
          const int k = SymTensorField3::index(a, b);
          for (int i = 0; i < 3; ++i) {
            const auto& gv = gradv[s][i][a];
            const auto& dri = dr[k][i];
            for (std::size_t pp = 0; pp < acc.size(); ++pp) acc[pp] += gv[pp] * dri[pp];
          }
        }
        w[b] += ScalarField3::from_real(grid, acc);
      }
      src[s] = antidiv_R(w);
    }
    return TimeSampled<SymTensorField3>(v.time_at(ilo), v.dt, std::move(src));
  };

  TransportEllipticResult res;
  TimeSampled<SymTensorField3> cur(v.time_at(ilo), v.dt,
                                   std::vector<SymTensorField3>(m, rho0));
  double prev_inc = -1.0;
  for (int it = 0; it < max_iter; ++it) {
    TimeSampled<SymTensorField3> rhs = antidiv_source(cur);
    TimeSampled<SymTensorField3> next = solver.solve(rho0, &rhs, ia, ilo, ihi);
    double inc = 0.0;
    for (std::size_t s = 0; s < m; ++s) {
      SymTensorField3 d = next[s];
      d -= cur[s];
      inc = std::max(inc, sup_norm(d));
    }
    cur = std::move(next);
    res.increments.push_back(inc);
    res.iterations = it + 1;
    if (inc < tol) {
      res.rho = std::move(cur);
      return res;
    }
    if (prev_inc >= 0.0 && inc > prev_inc && it >= 2)
      throw std::runtime_error(
          "transport_elliptic_solve: Picard iteration is not contracting "
          "(window too long relative to |grad v|)");
    prev_inc = inc;
  }
  throw std::runtime_error("transport_elliptic_solve: no convergence after max_iter");
}

}  // namespace onsager
