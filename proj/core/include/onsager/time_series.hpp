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

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace onsager {

/// uniformly sampled time series of spatial fields
template <class FieldT>
struct TimeSampled {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<FieldT> samples;

  TimeSampled() = default;
  TimeSampled(double t0_, double dt_, std::vector<FieldT> s)
      : t0(t0_), dt(dt_), samples(std::move(s)) {
    if (samples.size() < 2) throw std::invalid_argument("TimeSampled: need >= 2 samples");
    if (!(dt > 0.0)) throw std::invalid_argument("TimeSampled: dt must be positive");
  }

  std::size_t size() const { return samples.size(); }
  double time_at(std::size_t i) const { return t0 + dt * double(i); }
  double t_end() const { return time_at(samples.size() - 1); }
  FieldT& operator[](std::size_t i) { return samples[i]; }
  const FieldT& operator[](std::size_t i) const { return samples[i]; }

  bool covers(double t, double slack = 1e-12) const {
    return t >= t0 - slack && t <= t_end() + slack;
  }
};

/// cubic (4-point Lagrange) interpolation in time; clamped to the sampled
/// range, degrades to the available stencil near the ends
template <class FieldT>
FieldT interp_time(const TimeSampled<FieldT>& s, double t) {
  if (!s.covers(t, s.dt * 1e-6))
    throw std::out_of_range("interp_time: t outside sampled range");
  const int nsamp = int(s.size());
  double u = (t - s.t0) / s.dt;
  int j = int(std::floor(u)) - 1;  // stencil start
  j = std::max(0, std::min(j, nsamp - 4));
  if (nsamp < 4) j = 0;
  const int m = std::min(4, nsamp);
  // Lagrange weights on nodes j..j+m-1
  FieldT out = s.samples[j];
  double w0 = 1.0;
  for (int b = 1; b < m; ++b) w0 *= (u - (j + b)) / double(j - (j + b));
  out *= w0;
  for (int a = 1; a < m; ++a) {
    double w = 1.0;
    for (int b = 0; b < m; ++b)
      if (b != a) w *= (u - (j + b)) / double(a - b);
    out.axpy(w, s.samples[j + a]);
  }
  return out;
}

/// second-order central time derivative at sample i (one-sided at the ends)
template <class FieldT>
FieldT time_derivative(const TimeSampled<FieldT>& s, std::size_t i) {
  const std::size_t nlast = s.size() - 1;
  FieldT out = s.samples[std::min(i + 1, nlast)];
  if (i == 0) {
    out -= s.samples[0];
    out *= 1.0 / s.dt;
  } else if (i == nlast) {
    out = s.samples[nlast];
    out -= s.samples[nlast - 1];
    out *= 1.0 / s.dt;
  } else {
    out -= s.samples[i - 1];
    out *= 0.5 / s.dt;
  }
  return out;
}

}  // namespace onsager
