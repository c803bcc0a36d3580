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
#include "onsager/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <memory>

namespace onsager {
namespace fft {
namespace {

struct PlanSet {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  double* rbuf = nullptr;
  fftw_complex* cbuf = nullptr;
  std::size_t rsize = 0, csize = 0;

  explicit PlanSet(int n) {
    rsize = std::size_t(n) * n * n;
    csize = std::size_t(n) * n * (n / 2 + 1);
    rbuf = fftw_alloc_real(rsize);
    cbuf = fftw_alloc_complex(csize);
    // dims are (z, y, x); the x axis is the transformed-last (halved) one
    r2c = fftw_plan_dft_r2c_3d(n, n, n, rbuf, cbuf, FFTW_MEASURE);
    c2r = fftw_plan_dft_c2r_3d(n, n, n, cbuf, rbuf, FFTW_MEASURE);
  }
  ~PlanSet() {
    fftw_destroy_plan(r2c);
    fftw_destroy_plan(c2r);
    fftw_free(rbuf);
    fftw_free(cbuf);
  }
  PlanSet(const PlanSet&) = delete;
  PlanSet& operator=(const PlanSet&) = delete;
};

PlanSet& plans_for(int n) {
  static std::map<int, std::unique_ptr<PlanSet>> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<PlanSet>(n)).first;
  return *it->second;
}

}  // namespace

void forward(const Grid3& g, const double* real, std::complex<double>* spec) {
  PlanSet& p = plans_for(g.n);
  std::memcpy(p.rbuf, real, p.rsize * sizeof(double));
  fftw_execute(p.r2c);
  const double scale = 1.0 / double(p.rsize);
  auto* out = reinterpret_cast<const std::complex<double>*>(p.cbuf);
  for (std::size_t i = 0; i < p.csize; ++i) spec[i] = out[i] * scale;
}

void backward(const Grid3& g, const std::complex<double>* spec, double* real) {
  PlanSet& p = plans_for(g.n);
  std::memcpy(p.cbuf, spec, p.csize * sizeof(fftw_complex));
  fftw_execute(p.c2r);
  std::memcpy(real, p.rbuf, p.rsize * sizeof(double));
}

}  // namespace fft
}  // namespace onsager
