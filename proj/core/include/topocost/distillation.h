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

#ifndef TOPOCOST_DISTILLATION_H
#define TOPOCOST_DISTILLATION_H

#include <cstdint>
#include <string_view>

namespace topocost {

/// |A> feeds Rz(pi/8) through 15-to-1 distillation; |Y> feeds Rz(pi/4) through 7-to-1.
enum class MagicState { kA, kY };

std::string_view magic_state_name(MagicState kind);

/// Highest concatenation level with a braided footprint.
inline constexpr int kMaxDistillationLevel = 3;

struct DistillationState {
    MagicState kind;
    int level;
    double residual;
};

struct DistillationPlan {
    int level_a = 1;
    int level_y = 1;
    double residual_a = 0;
    double residual_y = 0;

    /// The braided block bundles both distilleries; the deeper one governs. Never below 1.
    int footprint_level() const {
        int level = level_a > level_y ? level_a : level_y;
        return level < 1 ? 1 : level;
    }
};

/// Spare-circuit layout of the level-2 Rz(pi/8) block.
struct RedundancyModel {
    int a_slots = 17;                  ///< level-1 |A> circuits stacked along the input edge
    int a_required = 15;               ///< inputs consumed by one level-2 |A> circuit
    int y_corr_slots = 15;             ///< level-1 |Y> circuits feeding Rz(pi/4) corrections
    double y_corr_demand_prob = 0.5;   ///< chance each correction is needed
    double top_y_demand_prob = 0.5;    ///< chance the final Rz(pi/4) correction is needed
    int top_y_slots = 8;               ///< 7 inputs plus one spare level-1 |Y> circuit
    int top_y_required = 7;
    /// Distillation circuit failure probability is circuit_fail_scale * p.
    double circuit_fail_scale = 1.0;

    void validate() const;
    double circuit_failure(double error_rate) const;
};

/// Residual error after `level` rounds: c^((3^l - 1)/2) p^(3^l), c = 35 (A) or 7 (Y).
/// Clamped to 1 above the recursion's fixed point.
double residual_after(MagicState kind, int level, double error_rate);

/// Smallest level in 1..3 whose residual does not exceed the logical-cell failure rate.
/// Throws kDistillationInsufficient when level 3 is not enough.
DistillationState select_level(MagicState kind, double error_rate, double cell_failure);

/// Probability that fewer than a_required of the a_slots level-1 |A> circuits succeed
/// (exact binomial tail).
double shortage_prob_a(double error_rate, const RedundancyModel &model = {});

/// Leading-order probability that the level-1 |Y> correction circuits run short:
/// every correction is demanded and one circuit fails, slots * q * demand^slots (15p/2^15).
double shortage_prob_ycorr(double error_rate, const RedundancyModel &model = {});

}  // namespace topocost

#endif
