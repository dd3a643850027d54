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

#ifndef TOPOCOST_LAYOUT_H
#define TOPOCOST_LAYOUT_H

#include <cstdint>

#include "topocost/model_core.h"
#include "topocost/wide_int.h"

namespace topocost {

/// Dimensions of one braided Rz(pi/8) block, in logical cells.
struct GateFootprint {
    int level;
    std::int64_t volume;           ///< V, per gate
    std::int64_t depth;            ///< D, along the temporal axis
    std::int64_t height;           ///< cross-section height above/below the qubit line
    std::int64_t width_per_qubit;  ///< two defects per algorithmic qubit
    std::int64_t qubits_per_block; ///< gates sharing one repeating cuboid
};

/// Catalog lookup for levels 1..3. Level 3 is an extrapolation of level 2.
GateFootprint footprint(int level);

/// Logical-cell edge d + d/4 = 5d/4 unit cells, kept as an exact fraction.
struct LogicalCellScale {
    int d;
    std::int64_t edge_numerator() const {
        return 5 * static_cast<std::int64_t>(d);
    }
    static constexpr std::int64_t kEdgeDenominator = 4;
    double edge_unit_cells() const {
        return static_cast<double>(edge_numerator()) / kEdgeDenominator;
    }
};

struct ClusterGeometry {
    std::int64_t cells_line;       ///< 4L logical cells along the qubit line
    std::int64_t cells_height;     ///< footprint height in logical cells
    std::int64_t n1;               ///< 5Ld unit cells
    std::int64_t n2;               ///< ceil(5d/4 * height) unit cells
    u128 depth_logical_cells;      ///< 32 L^3 lambda D
    u128 depth_unit_cells;         ///< 32 L^3 lambda D * 5d/4 (always integral)
};

ClusterGeometry cluster_geometry(std::int64_t bits, CodeDistance d, std::int64_t lambda, const GateFootprint &fp);

}  // namespace topocost

#endif
