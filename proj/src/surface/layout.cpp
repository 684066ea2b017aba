// Copyright 2026 The msdsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "msd/surface/layout.h"

#include <stdexcept>
#include <string>

namespace msd::surface {

namespace {

// N, E, W, S for X; N, W, E, S for Z.
constexpr std::array<Coord, 4> kXOrder = {{{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}};
constexpr std::array<Coord, 4> kZOrder = {{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}};

}  // namespace

std::vector<size_t> Plaquette::support() const {
  std::vector<size_t> out;
  for (int q : schedule) {
    if (q >= 0) out.push_back(static_cast<size_t>(q));
  }
  return out;
}

int PatchLayout::data_index_at(Coord c) const {
  const int n = static_cast<int>(d);
  if (c.x < 1 || c.y < 1 || c.x > 2 * n - 1 || c.y > 2 * n - 1) return -1;
  if (c.x % 2 == 0 || c.y % 2 == 0) return -1;
  return (c.y / 2) * n + c.x / 2;
}

pauli::PauliString PatchLayout::stabilizer(size_t plaquette) const {
  const Plaquette& pl = plaquettes.at(plaquette);
  return pauli::PauliString::on(num_data(), pl.type == PlaquetteType::X ? 'X' : 'Z',
                                pl.support());
}

pauli::PauliString PatchLayout::logical_x() const {
  return pauli::PauliString::on(num_data(), 'X', logical_x_support);
}

pauli::PauliString PatchLayout::logical_z() const {
  return pauli::PauliString::on(num_data(), 'Z', logical_z_support);
}

PatchLayout build_patch(size_t d) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument("distance must be odd and at least 3, got " + std::to_string(d));
  }
  PatchLayout layout;
  layout.d = d;
  const int n = static_cast<int>(d);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) layout.data_coords.push_back({2 * i + 1, 2 * j + 1});
  }
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      const bool is_x = (i + j) % 2 == 1;
      if (is_x && (i == 0 || i == n)) continue;
      if (!is_x && (j == 0 || j == n)) continue;
      Plaquette pl;
      pl.type = is_x ? PlaquetteType::X : PlaquetteType::Z;
      pl.ancilla = {2 * i, 2 * j};
      const auto& order = is_x ? kXOrder : kZOrder;
      int present = 0;
      for (size_t s = 0; s < 4; ++s) {
        int q = layout.data_index_at({2 * i + order[s].x, 2 * j + order[s].y});
        pl.schedule[s] = q;
        if (q >= 0) ++present;
      }
      if (present < 2) continue;
      (is_x ? layout.x_plaquettes : layout.z_plaquettes).push_back(layout.plaquettes.size());
      layout.plaquettes.push_back(pl);
    }
  }
  for (int j = 0; j < n; ++j) layout.logical_x_support.push_back(static_cast<size_t>(j * n));
  for (int i = 0; i < n; ++i) layout.logical_z_support.push_back(static_cast<size_t>(i));
  return layout;
}

}  // namespace msd::surface
