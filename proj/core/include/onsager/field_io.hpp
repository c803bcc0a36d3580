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

#include <string>
#include <vector>

#include "onsager/field.hpp"

namespace onsager {

/// field snapshot container: one JSON header line
///   {"grid_n":..,"component_count":..,"time":..,
///    "layout":"real-space, component-major, x-fastest"}
/// followed by little-endian 64-bit float samples
void write_f3d(const std::string& path, const std::vector<const ScalarField3*>& comps,
               double time);
void write_f3d(const std::string& path, const ScalarField3& f, double time);
void write_f3d(const std::string& path, const VectorField3& f, double time);
void write_f3d(const std::string& path, const SymTensorField3& f, double time);

struct F3dSnapshot {
  Grid3 grid;
  double time = 0.0;
  std::vector<std::vector<double>> comps;  ///< component-major real samples
};
F3dSnapshot read_f3d(const std::string& path);

}  // namespace onsager
