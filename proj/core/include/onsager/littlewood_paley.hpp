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

#include "onsager/field.hpp"

namespace onsager {

/// radial Littlewood-Paley cutoff symbol: 1 on [0,1], 0 on [2,inf),
/// quintic smoothstep in between
double lp_chi_hat(double r);

/// largest band index carrying grid content: chi_hat(|k|/2^q) == 1 for all
/// stored modes once q >= lp_qmax(g)
int lp_qmax(const Grid3& g);

/// low-pass projection P_{<= q}; for q <= -1 this is the mean
ScalarField3 lp_project_le(const ScalarField3& f, int q);
/// dyadic band projection P_q = P_{<= q} - P_{<= q-1}
ScalarField3 lp_project(const ScalarField3& f, int q);
/// band range projection P_{<= q2} - P_{<= q1}
ScalarField3 lp_project(const ScalarField3& f, int q1, int q2);

/// Besov-type Holder seminorm  sup_q 2^{alpha q} |P_q f|_inf over the grid
/// bands 0 <= q <= lp_qmax
double holder_seminorm(const ScalarField3& f, double alpha);

}  // namespace onsager
