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
#include "onsager/flow_maps.hpp"

#include <cmath>
#include <stdexcept>

#include "onsager/interpolation.hpp"

namespace onsager {

FlowChart FlowChart::identity(const Grid3& g, double t_anchor, double t0, double dt,
                              std::size_t nsamples) {
  FlowChart c;
  c.grid_ = g;
  c.t_anchor_ = t_anchor;
  c.t0_ = t0;
  c.dt_ = dt;
  c.size_ = nsamples;
  c.identity_ = true;
  c.zero_ = VectorField3(g);
  return c;
}

FlowChart::FlowChart(double t_anchor, TimeSampled<VectorField3> gamma)
    : grid_(gamma[0].grid()),
      t_anchor_(t_anchor),
      t0_(gamma.t0),
      dt_(gamma.dt),
      size_(gamma.size()),
      gamma_(std::move(gamma)) {
  // determinant guard over the window
  min_det_ = 1e300;
  for (std::size_t j = 0; j < size_; ++j) {
    Matrix3Field gm = grad_at(j);
    std::array<std::vector<double>, 9> r;
    for (int k = 0; k < 9; ++k) r[k] = gm.c[k].to_real();
    for (std::size_t p = 0; p < r[0].size(); ++p) {
      const double det = r[0][p] * (r[4][p] * r[8][p] - r[5][p] * r[7][p]) -
                         r[1][p] * (r[3][p] * r[8][p] - r[5][p] * r[6][p]) +
                         r[2][p] * (r[3][p] * r[7][p] - r[4][p] * r[6][p]);
      min_det_ = std::min(min_det_, det);
    }
  }
  if (min_det_ < 0.5)
    throw std::runtime_error(
        "FlowChart: Jacobian determinant fell below 1/2 (window too long for "
        "this velocity)");
}

std::size_t FlowChart::anchor_index() const {
  return sample_index_of(t_anchor_, t0_, dt_, size_);
}

const VectorField3& FlowChart::gamma_at(std::size_t j) const {
  if (identity_) return zero_;
  return (*gamma_)[j];
}

Matrix3Field FlowChart::grad_at(std::size_t j) const {
  Matrix3Field out(grid_);
  if (!identity_) {
    const VectorField3& gam = (*gamma_)[j];
    for (int i = 0; i < 3; ++i)
      for (int a = 0; a < 3; ++a) out(i, a) = derivative(gam[i], a);
  }
  for (int i = 0; i < 3; ++i) out(i, i).set_mean(out(i, i).mean() + 1.0);
  return out;
}

Matrix3Field FlowChart::grad_inv_at(std::size_t j) const {
  Matrix3Field out(grid_);
  if (identity_) {
    for (int i = 0; i < 3; ++i) out(i, i).set_mean(1.0);
    return out;
  }
  Matrix3Field gm = grad_at(j);
  std::array<std::vector<double>, 9> r;
  for (int k = 0; k < 9; ++k) r[k] = gm.c[k].to_real();
  std::array<std::vector<double>, 9> inv;
  for (auto& v : inv) v.resize(r[0].size());
  for (std::size_t p = 0; p < r[0].size(); ++p) {
    const double a = r[0][p], b = r[1][p], c = r[2][p];
    const double d = r[3][p], e = r[4][p], f = r[5][p];
    const double g = r[6][p], h = r[7][p], i = r[8][p];
    const double A = e * i - f * h, B = c * h - b * i, C = b * f - c * e;
    const double D = f * g - d * i, E = a * i - c * g, F = c * d - a * f;
    const double G = d * h - e * g, H = b * g - a * h, I = a * e - b * d;
    const double det = a * A + b * D + c * G;
    const double s = 1.0 / det;
    inv[0][p] = A * s;
    inv[1][p] = B * s;
    inv[2][p] = C * s;
    inv[3][p] = D * s;
    inv[4][p] = E * s;
    inv[5][p] = F * s;
    inv[6][p] = G * s;
    inv[7][p] = H * s;
    inv[8][p] = I * s;
  }
  for (int k = 0; k < 9; ++k) out.c[k] = ScalarField3::from_real(grid_, inv[k]);
  return out;
}

FlowChart back_to_labels(const TimeSampled<VectorField3>& v_eps, double t_anchor,
                         double t_lo, double t_hi) {
  const Grid3& g = v_eps[0].grid();
  const std::size_t ia = sample_index_of(t_anchor, v_eps.t0, v_eps.dt, v_eps.size());
  const std::size_t il = sample_index_of(t_lo, v_eps.t0, v_eps.dt, v_eps.size());
  const std::size_t ih = sample_index_of(t_hi, v_eps.t0, v_eps.dt, v_eps.size());
  TransportSolver solver(v_eps);
  if (solver.identity_velocity())
    return FlowChart::identity(g, t_anchor, v_eps.time_at(il), v_eps.dt, ih - il + 1);
  // (d_t + v.grad) gamma = -v, gamma(t_anchor) = 0
  std::vector<VectorField3> neg(v_eps.size(), VectorField3(g));
  for (std::size_t j = 0; j < v_eps.size(); ++j) {
    neg[j] = v_eps[j];
    neg[j] *= -1.0;
  }
  TimeSampled<VectorField3> src(v_eps.t0, v_eps.dt, std::move(neg));
  TimeSampled<VectorField3> gamma = solver.solve(VectorField3(g), &src, ia, il, ih);
  return FlowChart(t_anchor, std::move(gamma));
}

std::vector<std::vector<std::array<double, 3>>> integrate_flow(
    const TimeSampled<VectorField3>& v, double t0, const std::vector<double>& s_values,
    const std::vector<std::array<double, 3>>& seeds) {
  const Grid3& g = v[0].grid();
  // raw real samples for the spatial reads
  std::vector<std::array<std::vector<double>, 3>> raw(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    raw[j] = {v[j][0].to_real(), v[j][1].to_real(), v[j][2].to_real()};

  // cubic-in-time, order-6-in-space velocity evaluation
  auto vel = [&](double t, const std::array<double, 3>& x, double* out) {
    const long hi = long(v.size()) - 1;
    double u = (t - v.t0) / v.dt;
    u = std::clamp(u, 0.0, double(hi));
    long b = 0;
    if (hi >= 3) b = std::clamp(long(std::floor(u)) - 1, 0L, hi - 3);
    const int m = int(std::min<long>(4, hi + 1));
    out[0] = out[1] = out[2] = 0.0;
    for (int a = 0; a < m; ++a) {
      double w = 1.0;
      for (int q = 0; q < m; ++q)
        if (q != a) w *= (u - (b + q)) / double(a - q);
      RawLagrange sam{{raw[b + a][0].data(), raw[b + a][1].data(), raw[b + a][2].data()},
                      3, g.n};
      double val[3];
      sam.eval(x[0], x[1], x[2], val);
      for (int c = 0; c < 3; ++c) out[c] += w * val[c];
    }
  };

  std::vector<std::vector<std::array<double, 3>>> result;
  std::vector<std::array<double, 3>> cur = seeds;
  double t_cur = t0;
  for (double s : s_values) {
    const double t_target = t0 + s;
    if (!v.covers(t_cur) || !v.covers(t_target))
      throw std::out_of_range("integrate_flow: window exceeds the sampled range");
    const double span = t_target - t_cur;
    const int nsub = std::max(1, int(std::ceil(std::abs(span) / (0.5 * v.dt))));
    const double h = span / nsub;
    for (int step = 0; step < nsub; ++step) {
      const double t = t_cur + h * step;
      for (auto& x : cur) {
        double k1[3], k2[3], k3[3], k4[3];
        vel(t, x, k1);
        vel(t + 0.5 * h, {x[0] + 0.5 * h * k1[0], x[1] + 0.5 * h * k1[1], x[2] + 0.5 * h * k1[2]}, k2);
        vel(t + 0.5 * h, {x[0] + 0.5 * h * k2[0], x[1] + 0.5 * h * k2[1], x[2] + 0.5 * h * k2[2]}, k3);
        vel(t + h, {x[0] + h * k3[0], x[1] + h * k3[1], x[2] + h * k3[2]}, k4);
        for (int c = 0; c < 3; ++c)
          x[c] += (h / 6.0) * (k1[c] + 2 * k2[c] + 2 * k3[c] + k4[c]);
      }
    }
    t_cur = t_target;
    result.push_back(cur);
  }
  return result;
}

VectorField3 phase_gradient(const FlowChart& chart, const std::array<int, 3>& m,
                            std::size_t j) {
  if (m[0] == 0 && m[1] == 0 && m[2] == 0)
    throw std::invalid_argument("phase_gradient: m must be nonzero");
  Matrix3Field gm = chart.grad_at(j);
  VectorField3 out(chart.grid());
  // (grad xi)_i = m_k d_i Gamma^k
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (m[k] != 0) out[i].axpy(double(m[k]), gm(k, i));
  return out;
}

double phase_gradient_min_ratio(const FlowChart& chart, const std::array<int, 3>& m) {
  const double mm = std::sqrt(double(m[0]) * m[0] + double(m[1]) * m[1] + double(m[2]) * m[2]);
  double worst = 1e300;
  for (std::size_t j = 0; j < chart.size(); ++j) {
    VectorField3 gx = phase_gradient(chart, m, j);
    auto r0 = gx[0].to_real(), r1 = gx[1].to_real(), r2 = gx[2].to_real();
    for (std::size_t p = 0; p < r0.size(); ++p) {
      const double a = std::sqrt(r0[p] * r0[p] + r1[p] * r1[p] + r2[p] * r2[p]);
      worst = std::min(worst, a / mm);
    }
  }
  return worst;
}

}  // namespace onsager
