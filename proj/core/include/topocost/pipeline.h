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

#ifndef TOPOCOST_PIPELINE_H
#define TOPOCOST_PIPELINE_H

#include <cstdint>
#include <optional>
#include <string_view>

#include "topocost/decomposition.h"
#include "topocost/distillation.h"
#include "topocost/hardware_costing.h"
#include "topocost/layout.h"
#include "topocost/model_core.h"

namespace topocost {

struct ModelOptions {
    DistanceRule distance_rule = DistanceRule::kBudgetVerified;
    RedundancyModel redundancy;
};

/// Full output of one (L, p) estimate. Every field is recomputable from
/// input, constants, hardware and options.
struct ResourceReport {
    ProblemInstance input;
    PhysicalConstants constants;
    HardwareProfile hardware;
    ModelOptions options;

    double delta_gate = 0;
    CircuitShape shape{};
    std::int64_t lambda = 0;
    DistillationPlan plan;
    CodeDistance d{1};
    double cell_failure = 0;   ///< p_f at the chosen distance
    double gate_failure = 0;   ///< 1 - (1 - p_f)^(lambda V)
    GateFootprint footprint{};
    ClusterGeometry geometry{};
    ModuleBreakdown modules{};
    MachineDimensions dimensions{};
    RuntimeReport runtime{};
    double shortage_a = 0;
    double shortage_ycorr = 0;
    int fixed_point_iterations = 0;
};

/// Estimates one point.
///
/// The distillation level and the code distance depend on each other: the level
/// fixes the footprint volume V, V fixes d, and d fixes the cell failure rate the
/// distilled states must beat. Starting from level 1 the level only ever rises,
/// so the iteration terminates within three rounds.
ResourceReport estimate(const ProblemInstance &instance, const PhysicalConstants &constants = {},
                        const HardwareProfile &hw = {}, const ModelOptions &options = {});

enum class Metric { kRuntime, kModules, kSx, kSy };

std::string_view metric_name(Metric metric);
std::optional<Metric> parse_metric(std::string_view name);
/// Runtime in seconds, modules as a count, S_x and S_y in meters.
double metric_value(const ResourceReport &report, Metric metric);

inline constexpr std::int64_t kMaxSearchBits = std::int64_t{1} << 20;

/// Largest L in [2, max_bits] with metric(estimate(L, p)) <= bound.
///
/// Exponential bracketing followed by integer bisection; the returned L is
/// checked directly against L + 1. Points that cannot be estimated count as
/// exceeding every finite bound. Throws kBoundUnsatisfiable when L = 2 already
/// exceeds the bound.
std::int64_t max_bits_within(double bound, double error_rate, Metric metric, const PhysicalConstants &constants = {},
                             const HardwareProfile &hw = {}, const ModelOptions &options = {},
                             std::int64_t max_bits = kMaxSearchBits);

}  // namespace topocost

#endif
