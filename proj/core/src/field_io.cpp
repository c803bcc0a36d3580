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
#include "onsager/field_io.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace onsager {

static_assert(std::endian::native == std::endian::little,
              "f3d writer assumes a little-endian host");

void write_f3d(const std::string& path, const std::vector<const ScalarField3*>& comps,
               double time) {
  if (comps.empty()) throw std::invalid_argument("write_f3d: no components");
  const Grid3& g = comps[0]->grid();
  nlohmann::json hdr = {{"grid_n", g.n},
                        {"component_count", comps.size()},
                        {"time", time},
                        {"layout", "real-space, component-major, x-fastest"}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_f3d: cannot open " + path);
  out << hdr.dump() << '\n';
  for (const ScalarField3* f : comps) {
    if (!(f->grid() == g)) throw std::invalid_argument("write_f3d: grid mismatch");
    const std::vector<double> r = f->to_real();
    out.write(reinterpret_cast<const char*>(r.data()),
              std::streamsize(r.size() * sizeof(double)));
  }
  if (!out) throw std::runtime_error("write_f3d: write failed for " + path);
}

void write_f3d(const std::string& path, const ScalarField3& f, double time) {
  write_f3d(path, std::vector<const ScalarField3*>{&f}, time);
}
void write_f3d(const std::string& path, const VectorField3& f, double time) {
  write_f3d(path, {&f[0], &f[1], &f[2]}, time);
}
void write_f3d(const std::string& path, const SymTensorField3& f, double time) {
  write_f3d(path, {&f[0], &f[1], &f[2], &f[3], &f[4], &f[5]}, time);
}

F3dSnapshot read_f3d(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_f3d: cannot open " + path);
  std::string line;
  std::getline(in, line);
  const nlohmann::json hdr = nlohmann::json::parse(line);
  F3dSnapshot snap;
  snap.grid = Grid3(hdr.at("grid_n").get<int>());
  snap.time = hdr.at("time").get<double>();
  const std::size_t nc = hdr.at("component_count").get<std::size_t>();
  snap.comps.resize(nc);
  for (std::size_t c = 0; c < nc; ++c) {
    snap.comps[c].resize(snap.grid.real_size());
    in.read(reinterpret_cast<char*>(snap.comps[c].data()),
            std::streamsize(snap.comps[c].size() * sizeof(double)));
    if (!in) throw std::runtime_error("read_f3d: truncated payload in " + path);
  }
  return snap;
}

}  // namespace onsager
