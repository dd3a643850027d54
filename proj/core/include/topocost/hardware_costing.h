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

#ifndef TOPOCOST_HARDWARE_COSTING_H
#define TOPOCOST_HARDWARE_COSTING_H

#include <cstdint>

#include "topocost/layout.h"
#include "topocost/model_core.h"

namespace topocost {

inline constexpr double kSecondsPerYear = 365.25 * 86400.0;
/// Bare physical gate time used as the denominator of the temporal overhead.
inline constexpr double kReferenceGateTimeS = 10e-9;

/// Photonic modules needed for an N1 x N2 unit-cell cross-section.
struct ModuleBreakdown {
    std::uint64_t optical_lines;        ///< (2N1+1)(2N2+1)
    std::uint64_t two_module_lines;     ///< ceil(lines/2), detected by two modules
    std::uint64_t four_module_lines;    ///< floor(lines/2), detected by four modules
    std::uint64_t detection_modules;    ///< 3 * lines, the average of 2 and 4
    std::uint64_t source_modules;       ///< one per line
    std::uint64_t preparation_modules;  ///< 2(N1+2)(N2+1) + 2(N2+2)(N1+1)
    std::uint64_t total;                ///< 12 + 14N1 + 14N2 + 20N1N2
};

struct MachineDimensions {
    double s_x_m;
    double s_y_m;
    double s_z_max_m;  ///< bound set by photon-recycling fiber: 2 T c_f
};

struct RuntimeReport {
    double seconds;
    double years;
    double temporal_overhead;  ///< seconds / (32 L^3 * 10 ns)
    double qubit_overhead;     ///< total modules / 2L; zero when not supplied
};

/// Throws kInvalidArgument for N1 < 1 or N2 < 1, or if the count overflows 64 bits.
ModuleBreakdown module_count(std::int64_t n1, std::int64_t n2);

MachineDimensions machine_dimensions(const ClusterGeometry &geometry, const HardwareProfile &hw);

/// 32 L^3 * lambda * D * 5d/4 * 2T.
RuntimeReport runtime(std::int64_t bits, std::int64_t lambda, std::int64_t gate_depth, CodeDistance d,
                      double layer_time_s, std::uint64_t total_modules = 0);

}  // namespace topocost

#endif
