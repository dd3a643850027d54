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

#include "topocost/model_core.h"

#include <cmath>
#include <string>

#include "topocost/errors.h"

namespace topocost {

namespace {

constexpr int kMaxDistance = 1'000'000;

void require_subthreshold(double error_rate, const PhysicalConstants &constants) {
    if (!(error_rate >= 0)) {
        fail(ErrorKind::kInvalidArgument, "error rate must be >= 0, got " + std::to_string(error_rate));
    }
    if (constants.c2 * error_rate >= constants.p_th) {
        fail(ErrorKind::kAboveThreshold, "above threshold: C2*p = " + std::to_string(constants.c2 * error_rate) +
                                             " >= p_th = " + std::to_string(constants.p_th));
    }
}

}  // namespace

void ProblemInstance::validate() const {
    if (bits < 2) {
        fail(ErrorKind::kInvalidArgument, "bit length L must be >= 2, got " + std::to_string(bits));
    }
    if (!(error_rate >= 0 && error_rate < 1)) {
        fail(ErrorKind::kInvalidArgument, "error rate p must satisfy 0 <= p < 1, got " + std::to_string(error_rate));
    }
}

void PhysicalConstants::validate() const {
    if (!(p_th > 0 && p_th < 1)) {
        fail(ErrorKind::kInvalidArgument, "p_th must satisfy 0 < p_th < 1");
    }
    if (!(c1 > 0) || !(c2 > 0)) {
        fail(ErrorKind::kInvalidArgument, "C1 and C2 must be positive");
    }
}

void HardwareProfile::validate() const {
    if (!(layer_time_s > 0) || !(module_edge_m > 0) || !(fiber_light_speed_m_per_s > 0)) {
        fail(ErrorKind::kInvalidArgument, "T, M and c_f must be positive");
    }
}

CodeDistance::CodeDistance(int value) : value_(value) {
    if (value < 1) {
        fail(ErrorKind::kInvalidArgument, "code distance must be >= 1, got " + std::to_string(value));
    }
}

ErrorBudget::ErrorBudget(double delta_gate) : delta_gate_(delta_gate) {
    if (!(delta_gate > 0 && delta_gate < 1)) {
        fail(ErrorKind::kInvalidArgument, "gate error budget must satisfy 0 < delta < 1");
    }
}

ErrorBudget target_gate_error(std::int64_t bits) {
    if (bits < 2) {
        fail(ErrorKind::kInvalidArgument, "bit length L must be >= 2, got " + std::to_string(bits));
    }
    double l = static_cast<double>(bits);
    return ErrorBudget(1.0 / (640.0 * l * l * l * l));
}

double logical_cell_failure(CodeDistance d, double error_rate, const PhysicalConstants &constants) {
    require_subthreshold(error_rate, constants);
    double base = constants.c2 * error_rate / constants.p_th;
    return constants.c1 * std::pow(base, d.suppression_exponent());
}

double gate_failure(double cell_failure, std::int64_t lambda, std::int64_t volume) {
    if (!(cell_failure >= 0 && cell_failure <= 1)) {
        fail(ErrorKind::kInvalidArgument, "cell failure probability must lie in [0, 1]");
    }
    if (lambda < 1 || volume < 1) {
        fail(ErrorKind::kInvalidArgument, "lambda and V must be >= 1");
    }
    if (cell_failure == 1) {
        return 1;
    }
    double cells = static_cast<double>(lambda) * static_cast<double>(volume);
    return -std::expm1(cells * std::log1p(-cell_failure));
}

double closed_form_distance(std::int64_t bits, std::int64_t lambda, std::int64_t volume, double error_rate,
                            const PhysicalConstants &constants) {
    require_subthreshold(error_rate, constants);
    if (bits < 1 || lambda < 1 || volume < 1) {
        fail(ErrorKind::kInvalidArgument, "L, lambda and V must be >= 1");
    }
    double l = static_cast<double>(bits);
    double argument = 640.0 * constants.c1 * l * l * l * l * static_cast<double>(lambda) * static_cast<double>(volume);
    if (!(argument > 1)) {
        fail(ErrorKind::kDegenerate, "degenerate distance bound: 640*C1*L^4*lambda*V <= 1");
    }
    // p = 0 sends the denominator to +inf and the bound to -1.
    double numerator = 2.0 * std::log10(argument);
    double denominator = std::log10(constants.p_th) - std::log10(constants.c2 * error_rate);
    return numerator / denominator - 1.0;
}

CodeDistance required_distance(std::int64_t bits, std::int64_t lambda, std::int64_t volume, double error_rate,
                               const PhysicalConstants &constants, DistanceRule rule) {
    double raw = closed_form_distance(bits, lambda, volume, error_rate, constants);
    if (error_rate == 0) {
        return CodeDistance(1);
    }
    double ceiled = std::ceil(raw);
    if (!(ceiled <= kMaxDistance)) {
        fail(ErrorKind::kDegenerate, "required distance exceeds " + std::to_string(kMaxDistance) +
                                         " (error rate too close to threshold)");
    }
    int d = ceiled < 1 ? 1 : static_cast<int>(ceiled);
    if (rule == DistanceRule::kClosedForm) {
        return CodeDistance(d);
    }
    double budget = target_gate_error(bits).delta_gate();
    while (gate_failure(logical_cell_failure(CodeDistance(d), error_rate, constants), lambda, volume) > budget) {
        if (++d > kMaxDistance) {
            fail(ErrorKind::kDegenerate, "no distance up to " + std::to_string(kMaxDistance) + " meets the budget");
        }
    }
    return CodeDistance(d);
}

}  // namespace topocost
