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

#ifndef TOPOCOST_MODEL_CORE_H
#define TOPOCOST_MODEL_CORE_H

#include <compare>
#include <cstdint>

namespace topocost {

/// The (L, p) point being estimated: factor an L-bit number at physical error rate p.
struct ProblemInstance {
    std::int64_t bits = 1024;
    double error_rate = 6.2e-4;

    /// Throws EstimationError(kInvalidArgument) unless L >= 2 and 0 <= p < 1.
    void validate() const;
    bool operator==(const ProblemInstance &) const = default;
};

/// Threshold-law constants: p_f ~= c1 * (c2 * p / p_th)^floor((d+1)/2).
struct PhysicalConstants {
    double p_th = 0.0062;
    double c1 = 0.13;
    double c2 = 0.61;

    void validate() const;
    /// Largest physical error rate (exclusive) for which the scaling law applies: p_th / c2.
    double threshold_error_rate() const {
        return p_th / c2;
    }
    bool operator==(const PhysicalConstants &) const = default;
};

/// Device parameters of the photonic-module architecture.
struct HardwareProfile {
    double layer_time_s = 10e-9;           ///< T: time to prepare one cluster layer.
    double module_edge_m = 0.010;          ///< M: photonic module edge length.
    double fiber_light_speed_m_per_s = 2.0e8;  ///< c_f.

    void validate() const;
    bool operator==(const HardwareProfile &) const = default;
};

class CodeDistance {
   public:
    explicit CodeDistance(int value);
    int value() const noexcept {
        return value_;
    }
    /// floor((d+1)/2): number of errors a logical cell tolerates plus one.
    int suppression_exponent() const noexcept {
        return (value_ + 1) / 2;
    }
    auto operator<=>(const CodeDistance &) const = default;

   private:
    int value_;
};

/// Maximum tolerated failure probability of one algorithmic logical gate.
class ErrorBudget {
   public:
    explicit ErrorBudget(double delta_gate);
    double delta_gate() const noexcept {
        return delta_gate_;
    }

   private:
    double delta_gate_;
};

/// How the code distance is derived from the closed-form estimate.
enum class DistanceRule {
    /// Closed form, then increased until the exact gate-failure budget holds.
    kBudgetVerified,
    /// The closed form alone, as typeset (reproduces the published figures).
    kClosedForm,
};

/// delta = 1 / (640 L^4). The 10^-1 success budget is split over the K*Q = 64 L^4 gate slots.
ErrorBudget target_gate_error(std::int64_t bits);

/// Failure probability of one logical cell at distance d.
/// Throws kAboveThreshold when c2 * p >= p_th.
double logical_cell_failure(CodeDistance d, double error_rate, const PhysicalConstants &constants);

/// 1 - (1 - p_f)^(lambda * volume), evaluated without cancellation.
double gate_failure(double cell_failure, std::int64_t lambda, std::int64_t volume);

/// Real-valued right-hand side of the distance bound before the ceiling:
/// 2 log10(640 c1 L^4 lambda V) / (log10 p_th - log10(c2 p)) - 1.
double closed_form_distance(std::int64_t bits, std::int64_t lambda, std::int64_t volume, double error_rate,
                            const PhysicalConstants &constants);

/// Smallest admissible code distance for a gate made of lambda primitives of volume V.
///
/// The closed form is clamped to d >= 1. Under kBudgetVerified the result is
/// then increased until gate_failure(logical_cell_failure(d)) <= target_gate_error(L),
/// which matters whenever the floor in the suppression exponent is not captured by
/// the continuous approximation. p = 0 gives d = 1.
CodeDistance required_distance(std::int64_t bits, std::int64_t lambda, std::int64_t volume, double error_rate,
                               const PhysicalConstants &constants,
                               DistanceRule rule = DistanceRule::kBudgetVerified);

}  // namespace topocost

#endif
