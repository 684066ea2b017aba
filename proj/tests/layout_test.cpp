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


#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "msd/pauli/pauli_string.h"
#include "msd/surface/layout.h"

namespace msd::surface {
namespace {

using pauli::PauliString;

class LayoutTest : public ::testing::TestWithParam<size_t> {};

TEST_P(LayoutTest, Counts) {
  size_t d = GetParam();
  auto p = build_patch(d);
  EXPECT_EQ(p.num_data(), d * d);
  EXPECT_EQ(p.num_ancillas(), d * d - 1);
  EXPECT_EQ(p.x_plaquettes.size(), (d * d - 1) / 2);
  EXPECT_EQ(p.z_plaquettes.size(), (d * d - 1) / 2);
  size_t boundary = 0;
  for (const auto& pl : p.plaquettes) {
    size_t w = pl.support().size();
    EXPECT_TRUE(w == 2 || w == 4);
    boundary += w == 2;
  }
  EXPECT_EQ(boundary, 2 * (d - 1));
}

TEST_P(LayoutTest, StabilizersCommute) {
  auto p = build_patch(GetParam());
  for (size_t a = 0; a < p.plaquettes.size(); ++a) {
    for (size_t b = a + 1; b < p.plaquettes.size(); ++b) {
      EXPECT_TRUE(commutes(p.stabilizer(a), p.stabilizer(b))) << a << " " << b;
    }
    EXPECT_TRUE(commutes(p.stabilizer(a), p.logical_x()));
    EXPECT_TRUE(commutes(p.stabilizer(a), p.logical_z()));
  }
  EXPECT_FALSE(commutes(p.logical_x(), p.logical_z()));
  EXPECT_EQ(p.logical_x().weight(), GetParam());
  EXPECT_EQ(p.logical_z().weight(), GetParam());
}

// Each data qubit is touched at most once per CNOT layer.
TEST_P(LayoutTest, ScheduleHasNoCollisions) {
  auto p = build_patch(GetParam());
  for (size_t layer = 0; layer < 4; ++layer) {
    std::set<int> used;
    for (const auto& pl : p.plaquettes) {
      int q = pl.schedule[layer];
      if (q < 0) continue;
      EXPECT_TRUE(used.insert(q).second) << "layer " << layer << " qubit " << q;
    }
  }
}

// Hook errors from the second and third layers must run along the
// direction that leaves the distance intact.
TEST_P(LayoutTest, HookPairsAreOrthogonalToLogicals) {
  auto p = build_patch(GetParam());
  for (const auto& pl : p.plaquettes) {
    int a = pl.schedule[2];
    int b = pl.schedule[3];
    if (a < 0 || b < 0) continue;
    auto ca = p.data_coords[a];
    auto cb = p.data_coords[b];
    if (pl.type == PlaquetteType::X) {
      EXPECT_EQ(ca.y, cb.y);  // logical X runs vertically
    } else {
      EXPECT_EQ(ca.x, cb.x);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Distances, LayoutTest, ::testing::Values(3, 5, 7));

bool is_logical_x_error(const PatchLayout& p, const PauliString& e) {
  for (size_t z : p.z_plaquettes) {
    if (!commutes(p.stabilizer(z), e)) return false;
  }
  return !commutes(p.logical_z(), e);
}

TEST(Layout, DistanceThreeByExhaustion) {
  auto p = build_patch(3);
  size_t n = p.num_data();
  for (size_t a = 0; a < n; ++a) {
    EXPECT_FALSE(is_logical_x_error(p, PauliString::on(n, 'X', {a})));
    for (size_t b = a + 1; b < n; ++b) {
      EXPECT_FALSE(is_logical_x_error(p, PauliString::on(n, 'X', {a, b})));
    }
  }
  EXPECT_TRUE(is_logical_x_error(p, p.logical_x()));
}

TEST(Layout, DataIndexLookup) {
  auto p = build_patch(3);
  EXPECT_EQ(p.data_index_at({1, 1}), 0);
  EXPECT_EQ(p.data_index_at({5, 5}), 8);
  EXPECT_EQ(p.data_index_at({2, 1}), -1);
  EXPECT_EQ(p.data_index_at({7, 1}), -1);
}

TEST(Layout, RejectsBadDistance) {
  EXPECT_THROW(build_patch(4), std::invalid_argument);
  EXPECT_THROW(build_patch(1), std::invalid_argument);
}

}  // namespace
}  // namespace msd::surface
