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

#include "topocost/hardware_costing.h"

#include <limits>
#include <string>

#include "topocost/errors.h"
#include "topocost/wide_int.h"

namespace topocost {

namespace {

std::uint64_t narrow(u128 value) {
    if (value > std::numeric_limits<std::uint64_t>::max()) {
        fail(ErrorKind::kInvalidArgument, "module count overflows 64 bits");
    }
    return static_cast<std::uint64_t>(value);
}

}  // namespace

ModuleBreakdown module_count(std::int64_t n1, std::int64_t n2) {
    if (n1 < 1 || n2 < 1) {
        fail(ErrorKind::kInvalidArgument,
             "cross-section must be at least 1x1 unit cells, got " + std::to_string(n1) + "x" + std::to_string(n2));
    }
    u128 a = static_cast<u128>(n1);
    u128 b = static_cast<u128>(n2);
    u128 lines = (2 * a + 1) * (2 * b + 1);

    ModuleBreakdown m{};
    m.optical_lines = narrow(lines);
    m.two_module_lines = narrow((lines + 1) / 2);
    m.four_module_lines = narrow(lines / 2);
    m.detection_modules = narrow(3 * lines);
    m.source_modules = m.optical_lines;
    m.preparation_modules = narrow(2 * (a + 2) * (b + 1) + 2 * (b + 2) * (a + 1));
    m.total = narrow(12 + 14 * a + 14 * b + 20 * a * b);
    return m;
}

MachineDimensions machine_dimensions(const ClusterGeometry &geometry, const HardwareProfile &hw) {
    hw.validate();
    return MachineDimensions{
        static_cast<double>(geometry.n1) * hw.module_edge_m,
        static_cast<double>(geometry.n2) * hw.module_edge_m,
        2.0 * hw.layer_time_s * hw.fiber_light_speed_m_per_s,
    };
}

RuntimeReport runtime(std::int64_t bits, std::int64_t lambda, std::int64_t gate_depth, CodeDistance d,
                      double layer_time_s, std::uint64_t total_modules) {
    if (bits < 2 || lambda < 1 || gate_depth < 1 || !(layer_time_s > 0)) {
        fail(ErrorKind::kInvalidArgument, "runtime needs L >= 2, lambda >= 1, D >= 1 and T > 0");
    }
    u128 l = static_cast<u128>(bits);
    u128 steps = 32 * l * l * l;
    // 32 L^3 * 5d/4 = 40 L^3 d, exact in integers.
    u128 layers = 40 * l * l * l * static_cast<u128>(lambda) * static_cast<u128>(gate_depth) *
                  static_cast<u128>(d.value());

    RuntimeReport r{};
    r.seconds = to_double(layers) * 2.0 * layer_time_s;
    r.years = r.seconds / kSecondsPerYear;
    r.temporal_overhead = r.seconds / (to_double(steps) * kReferenceGateTimeS);
    r.qubit_overhead = static_cast<double>(total_modules) / (2.0 * static_cast<double>(bits));
    return r;
}

}  // namespace topocost
