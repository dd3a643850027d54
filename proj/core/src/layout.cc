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

#include <string>

#include "topocost/errors.h"

namespace topocost {

GateFootprint footprint(int level) {
    switch (level) {
        case 1:
            return GateFootprint{1, 210, 5, 21, 2, 1};
        case 2:
            // 8 x 77 cross-section x 9 deep, shared by four gates.
            return GateFootprint{2, 1386, 9, 77, 2, 4};
        case 3:
            // V and D extrapolated from level 2; height = ceil(V / (2 D)).
            return GateFootprint{3, 10000, 15, 334, 2, 4};
        default:
            fail(ErrorKind::kInvalidArgument, "footprint level must be 1, 2 or 3, got " + std::to_string(level));
    }
}

ClusterGeometry cluster_geometry(std::int64_t bits, CodeDistance d, std::int64_t lambda, const GateFootprint &fp) {
    if (bits < 2 || lambda < 1) {
        fail(ErrorKind::kInvalidArgument, "cluster geometry needs L >= 2 and lambda >= 1");
    }
    LogicalCellScale scale{d.value()};
    constexpr std::int64_t den = LogicalCellScale::kEdgeDenominator;

    ClusterGeometry g{};
    g.cells_line = 4 * bits;
    g.cells_height = fp.height;
    g.n1 = g.cells_line * scale.edge_numerator() / den;
    g.n2 = (g.cells_height * scale.edge_numerator() + den - 1) / den;

    u128 l = static_cast<u128>(bits);
    u128 steps = 32 * l * l * l;
    g.depth_logical_cells = steps * static_cast<u128>(lambda) * static_cast<u128>(fp.depth);
    // 32 L^3 is a multiple of 4, so the 5d/4 edge never leaves a remainder here.
    g.depth_unit_cells = g.depth_logical_cells / den * static_cast<u128>(scale.edge_numerator());
    return g;
}

}  // namespace topocost
