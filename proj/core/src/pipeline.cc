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

#include "topocost/pipeline.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "topocost/errors.h"

namespace topocost {

ResourceReport estimate(const ProblemInstance &instance, const PhysicalConstants &constants,
                        const HardwareProfile &hw, const ModelOptions &options) {
    instance.validate();
    constants.validate();
    hw.validate();
    options.redundancy.validate();
    const double p = instance.error_rate;
    if (constants.c2 * p >= constants.p_th) {
        fail(ErrorKind::kAboveThreshold, "above threshold: p = " + std::to_string(p) +
                                             " >= p_th/C2 = " + std::to_string(constants.threshold_error_rate()));
    }

    ResourceReport r;
    r.input = instance;
    r.constants = constants;
    r.hardware = hw;
    r.options = options;

    ErrorBudget budget = target_gate_error(instance.bits);
    r.delta_gate = budget.delta_gate();
    r.shape = circuit_shape(instance.bits);
    r.lambda = sk_sequence_length(budget).lambda;

    int level = 1;
    if (p == 0) {
        r.plan = DistillationPlan{0, 0, 0, 0};
        r.d = CodeDistance(1);
        r.cell_failure = 0;
        r.fixed_point_iterations = 1;
    } else {
        while (true) {
            ++r.fixed_point_iterations;
            assert(r.fixed_point_iterations <= kMaxDistillationLevel);
            std::int64_t volume = footprint(level).volume;
            r.d = required_distance(instance.bits, r.lambda, volume, p, constants, options.distance_rule);
            r.cell_failure = logical_cell_failure(r.d, p, constants);
            DistillationState a = select_level(MagicState::kA, p, r.cell_failure);
            DistillationState y = select_level(MagicState::kY, p, r.cell_failure);
            int next = std::max(a.level, y.level);
            if (next <= level) {
                // A larger block can leave both states needing fewer levels than
                // the footprint already provides; the |A> distillery keeps the
                // footprint's depth so the plan still describes the block.
                r.plan.level_a = next < level ? level : a.level;
                r.plan.level_y = y.level;
                r.plan.residual_a = residual_after(MagicState::kA, r.plan.level_a, p);
                r.plan.residual_y = y.residual;
                break;
            }
            level = next;
        }
    }

    r.footprint = footprint(r.plan.footprint_level());
    r.gate_failure = gate_failure(r.cell_failure, r.lambda, r.footprint.volume);
    r.geometry = cluster_geometry(instance.bits, r.d, r.lambda, r.footprint);
    r.modules = module_count(r.geometry.n1, r.geometry.n2);
    r.dimensions = machine_dimensions(r.geometry, hw);
    r.runtime = runtime(instance.bits, r.lambda, r.footprint.depth, r.d, hw.layer_time_s, r.modules.total);
    r.shortage_a = shortage_prob_a(p, options.redundancy);
    r.shortage_ycorr = shortage_prob_ycorr(p, options.redundancy);
    return r;
}

std::string_view metric_name(Metric metric) {
    switch (metric) {
        case Metric::kRuntime:
            return "runtime";
        case Metric::kModules:
            return "modules";
        case Metric::kSx:
            return "sx";
        case Metric::kSy:
            return "sy";
    }
    return "unknown";
}

std::optional<Metric> parse_metric(std::string_view name) {
    for (Metric m : {Metric::kRuntime, Metric::kModules, Metric::kSx, Metric::kSy}) {
        if (metric_name(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

double metric_value(const ResourceReport &report, Metric metric) {
    switch (metric) {
        case Metric::kRuntime:
            return report.runtime.seconds;
        case Metric::kModules:
            return static_cast<double>(report.modules.total);
        case Metric::kSx:
            return report.dimensions.s_x_m;
        case Metric::kSy:
            return report.dimensions.s_y_m;
    }
    return std::numeric_limits<double>::quiet_NaN();
}

std::int64_t max_bits_within(double bound, double error_rate, Metric metric, const PhysicalConstants &constants,
                             const HardwareProfile &hw, const ModelOptions &options, std::int64_t max_bits) {
    if (max_bits < 2) {
        fail(ErrorKind::kInvalidArgument, "search cap must be >= 2");
    }
    if (std::isnan(bound)) {
        fail(ErrorKind::kInvalidArgument, "bound must not be NaN");
    }
    auto cost = [&](std::int64_t bits) {
        try {
            return metric_value(estimate(ProblemInstance{bits, error_rate}, constants, hw, options), metric);
        } catch (const EstimationError &e) {
            if (e.kind() == ErrorKind::kAboveThreshold || e.kind() == ErrorKind::kInvalidArgument) {
                throw;
            }
            return std::numeric_limits<double>::infinity();
        }
    };
    auto within = [&](std::int64_t bits) { return cost(bits) <= bound; };

    if (!within(2)) {
        fail(ErrorKind::kBoundUnsatisfiable, "bound unsatisfiable: L = 2 already exceeds " +
                                                 std::string(metric_name(metric)) + " <= " + std::to_string(bound));
    }
    if (within(max_bits)) {
        return max_bits;
    }

    // Invariant: within(lo) and !within(hi).
    std::int64_t lo = 2;
    std::int64_t hi = std::min<std::int64_t>(4, max_bits);
    while (within(hi)) {
        lo = hi;
        hi = std::min(hi * 2, max_bits);
    }
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (within(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert(within(lo) && !within(lo + 1));
    return lo;
}

}  // namespace topocost
