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

#include <complex>
#include <vector>

#include "onsager/grid.hpp"

namespace onsager {

/// FFTW-backed transforms between real samples and Fourier coefficients of
/// f(x) = sum_k fhat(k) e^{2 pi i k.x}.  Plans are cached per grid size;
/// all calls are serialized (the library is single-threaded by design, see
/// the concurrency notes in the module headers).
namespace fft {

/// real samples -> coefficients (includes the 1/n^3 normalization)
void forward(const Grid3& g, const double* real, std::complex<double>* spec);
/// coefficients -> real samples
void backward(const Grid3& g, const std::complex<double>* spec, double* real);

}  // namespace fft
}  // namespace onsager
