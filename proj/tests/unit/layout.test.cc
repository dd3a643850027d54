// Copyright 2026 The topocost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topocost/layout.h"

#include <gtest/gtest.h>

#include "topocost/errors.h"

using namespace topocost;

TEST(footprint, catalog) {
    GateFootprint one = footprint(1);
    EXPECT_EQ(one.volume, 210);
    EXPECT_EQ(one.depth, 5);
    EXPECT_EQ(one.height, 21);
    EXPECT_EQ(one.qubits_per_block, 1);

    GateFootprint two = footprint(2);
    EXPECT_EQ(two.volume, 1386);
    EXPECT_EQ(two.depth, 9);
    EXPECT_EQ(two.height, 77);
    EXPECT_EQ(two.qubits_per_block, 4);

    GateFootprint three = footprint(3);
    EXPECT_EQ(three.volume, 10000);
    EXPECT_EQ(three.depth, 15);
    EXPECT_EQ(three.height, 334);

    EXPECT_THROW(footprint(0), EstimationError);
    EXPECT_THROW(footprint(4), EstimationError);
}

TEST(footprint, cuboid_identities) {
    for (int level : {1, 2}) {
        GateFootprint fp = footprint(level);
        std::int64_t block = fp.depth * fp.height * fp.width_per_qubit * fp.qubits_per_block;
        EXPECT_EQ(block, fp.volume * fp.qubits_per_block) << level;
    }
    EXPECT_EQ(5 * 21 * 2, footprint(1).volume);
    EXPECT_EQ(8 * 77 * 9 / 4, footprint(2).volume);
    EXPECT_EQ(9 * 77 * 8, 4 * footprint(2).volume);
    GateFootprint three = footprint(3);
    EXPECT_EQ(three.height, (three.volume + 2 * three.depth - 1) / (2 * three.depth));
}

TEST(cluster_geometry, examples) {
    ClusterGeometry g = cluster_geometry(1024, CodeDistance(32), 281, footprint(2));
    EXPECT_EQ(g.cells_line, 4096);
    EXPECT_EQ(g.cells_height, 77);
    EXPECT_EQ(g.n1, 163840);
    EXPECT_EQ(g.n2, 3080);
    EXPECT_EQ(to_decimal(g.depth_unit_cells), "3475831133306880");
    EXPECT_NEAR(to_double(g.depth_unit_cells), 3.4758e15, 0.0001e15);
    EXPECT_EQ(g.depth_logical_cells, static_cast<u128>(34359738368ull) * 281 * 9);

    ClusterGeometry small = cluster_geometry(2, CodeDistance(4), 1, footprint(1));
    EXPECT_EQ(small.n1, 40);
    EXPECT_EQ(small.n2, 105);
}

TEST(cluster_geometry, fractional_edge_rounds_only_at_the_end) {
    // d = 5: edge 25/4 unit cells; N2 = ceil(25 * 21 / 4) = ceil(131.25).
    ClusterGeometry g = cluster_geometry(3, CodeDistance(5), 7, footprint(1));
    EXPECT_EQ(g.n1, 75);
    EXPECT_EQ(g.n2, 132);
    // 32 * 27 * 7 * 5 * 25 / 4, exact.
    EXPECT_EQ(g.depth_unit_cells, static_cast<u128>(32 * 27 * 7 * 5) * 25 / 4);
    EXPECT_EQ(g.depth_unit_cells * 4, g.depth_logical_cells * 25);
}

TEST(cluster_geometry, linear_in_distance) {
    for (int d = 4; d <= 200; d += 4) {
        ClusterGeometry g = cluster_geometry(100, CodeDistance(d), 10, footprint(2));
        ClusterGeometry g2 = cluster_geometry(100, CodeDistance(2 * d), 10, footprint(2));
        EXPECT_EQ(g2.n1, 2 * g.n1);
        EXPECT_EQ(g2.n2, 2 * g.n2);
        EXPECT_EQ(g2.depth_unit_cells, 2 * g.depth_unit_cells);
    }
}

TEST(logical_cell_scale, edge) {
    EXPECT_DOUBLE_EQ(LogicalCellScale{32}.edge_unit_cells(), 40.0);
    EXPECT_DOUBLE_EQ(LogicalCellScale{5}.edge_unit_cells(), 6.25);
}
