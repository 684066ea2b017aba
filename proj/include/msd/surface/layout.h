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

#ifndef MSD_SURFACE_LAYOUT_H
#define MSD_SURFACE_LAYOUT_H

#include <array>
#include <cstddef>
#include <vector>

#include "msd/pauli/pauli_string.h"

namespace msd::surface {

enum class PlaquetteType : uint8_t { X, Z };

struct Coord {
  int x;
  int y;
  bool operator==(const Coord&) const = default;
};

struct Plaquette {
  PlaquetteType type;
  Coord ancilla;
  // Data qubit touched in each of the four CNOT layers, -1 when idle.
  std::array<int, 4> schedule;

  std::vector<size_t> support() const;
};

// Rotated surface code. Data qubit (2i+1, 2j+1) has index j*d + i; ancillas
// sit on even coordinates. X-type plaquettes line the top and bottom edges,
// Z-type the left and right. Logical X runs down the column x = 1, logical Z
// along the row y = 1.
struct PatchLayout {
  size_t d = 0;
  std::vector<Coord> data_coords;
  std::vector<Plaquette> plaquettes;
  std::vector<size_t> x_plaquettes;  // indices into plaquettes
  std::vector<size_t> z_plaquettes;
  std::vector<size_t> logical_x_support;
  std::vector<size_t> logical_z_support;

  size_t num_data() const { return data_coords.size(); }
  size_t num_ancillas() const { return plaquettes.size(); }
  size_t num_qubits() const { return num_data() + num_ancillas(); }
  int data_index_at(Coord c) const;

  // Operators over the d*d data qubits.
  pauli::PauliString stabilizer(size_t plaquette) const;
  pauli::PauliString logical_x() const;
  pauli::PauliString logical_z() const;
};

PatchLayout build_patch(size_t d);

}  // namespace msd::surface

#endif  // MSD_SURFACE_LAYOUT_H
