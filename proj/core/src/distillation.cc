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

#include "topocost/distillation.h"

#include <cmath>
#include <string>

#include "topocost/errors.h"

namespace topocost {

namespace {

double suppression_constant(MagicState kind) {
    return kind == MagicState::kA ? 35.0 : 7.0;
}

double binomial(int n, int k) {
    double out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
    }
    return out;
}

void require_probability(double p, const char *what) {
    if (!(p >= 0 && p < 1)) {
        fail(ErrorKind::kInvalidArgument, std::string(what) + " must satisfy 0 <= p < 1");
    }
}

}  // namespace

std::string_view magic_state_name(MagicState kind) {
    return kind == MagicState::kA ? "A" : "Y";
}

void RedundancyModel::validate() const {
    if (a_required < 1 || a_slots < a_required || y_corr_slots < 1 || top_y_required < 1 ||
        top_y_slots < top_y_required) {
        fail(ErrorKind::kInvalidArgument, "redundancy model slot counts are inconsistent");
    }
    for (double prob : {y_corr_demand_prob, top_y_demand_prob}) {
        if (!(prob >= 0 && prob <= 1)) {
            fail(ErrorKind::kInvalidArgument, "demand probabilities must lie in [0, 1]");
        }
    }
    if (!(circuit_fail_scale > 0)) {
        fail(ErrorKind::kInvalidArgument, "circuit failure scale must be positive");
    }
}

double RedundancyModel::circuit_failure(double error_rate) const {
    double q = circuit_fail_scale * error_rate;
    return q > 1 ? 1 : q;
}

double residual_after(MagicState kind, int level, double error_rate) {
    require_probability(error_rate, "error rate");
    if (level < 0) {
        fail(ErrorKind::kInvalidArgument, "distillation level must be >= 0");
    }
    if (level == 0 || error_rate == 0) {
        return error_rate;
    }
    // c^((3^l - 1)/2) p^(3^l) = (sqrt(c) p)^(3^l) / sqrt(c); a single pow keeps
    // deep levels from underflowing in an intermediate p^(3^l).
    double root = std::sqrt(suppression_constant(kind));
    double cube_power = std::pow(3.0, level);
    double residual = std::pow(root * error_rate, cube_power) / root;
    return residual > 1 ? 1 : residual;
}

DistillationState select_level(MagicState kind, double error_rate, double cell_failure) {
    if (!(error_rate > 0 && error_rate < 1)) {
        fail(ErrorKind::kInvalidArgument, "error rate must satisfy 0 < p < 1");
    }
    if (!(cell_failure > 0 && cell_failure < 1)) {
        fail(ErrorKind::kInvalidArgument, "cell failure must satisfy 0 < p_f < 1");
    }
    for (int level = 1; level <= kMaxDistillationLevel; ++level) {
        double residual = residual_after(kind, level, error_rate);
        if (residual <= cell_failure) {
            return DistillationState{kind, level, residual};
        }
    }
    fail(ErrorKind::kDistillationInsufficient,
         "distillation insufficient: |" + std::string(magic_state_name(kind)) + "> residual after " +
             std::to_string(kMaxDistillationLevel) + " levels exceeds p_f = " + std::to_string(cell_failure));
}

double shortage_prob_a(double error_rate, const RedundancyModel &model) {
    require_probability(error_rate, "error rate");
    double q = model.circuit_failure(error_rate);
    if (q == 0) {
        return 0;
    }
    int spares = model.a_slots - model.a_required;
    double tail = 0;
    for (int k = spares + 1; k <= model.a_slots; ++k) {
        tail += binomial(model.a_slots, k) * std::pow(q, k) * std::pow(1 - q, model.a_slots - k);
    }
    return tail;
}

double shortage_prob_ycorr(double error_rate, const RedundancyModel &model) {
    require_probability(error_rate, "error rate");
    double q = model.circuit_failure(error_rate);
    return model.y_corr_slots * q * std::pow(model.y_corr_demand_prob, model.y_corr_slots);
}

}  // namespace topocost
