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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "topocost/errors.h"

using namespace topocost;

TEST(residual_after, examples) {
    EXPECT_EQ(residual_after(MagicState::kA, 0, 3e-4), 3e-4);
    EXPECT_EQ(residual_after(MagicState::kY, 0, 0.2), 0.2);
    EXPECT_NEAR(residual_after(MagicState::kY, 1, 1e-3), 7e-9, 1e-21);
    EXPECT_NEAR(residual_after(MagicState::kA, 2, 6.2e-4), 2.03e-23, 0.01e-23);
    EXPECT_EQ(residual_after(MagicState::kA, 3, 0.0), 0.0);
    EXPECT_THROW(residual_after(MagicState::kA, -1, 1e-3), EstimationError);
    EXPECT_THROW(residual_after(MagicState::kA, 1, 1.0), EstimationError);
}

TEST(residual_after, clamped_above_fixed_point) {
    // 35 p^2 > 1 diverges; the residual is a probability.
    EXPECT_EQ(residual_after(MagicState::kA, 3, 0.5), 1.0);
    EXPECT_EQ(residual_after(MagicState::kY, 2, 0.9), 1.0);
}

TEST(residual_after, closed_form_equals_iterated_recursion) {
    for (double p : {1e-2, 1e-3, 1e-4}) {
        for (int level = 0; level <= 4; ++level) {
            double a = oracle::iterated_residual(35, level, p);
            double y = oracle::iterated_residual(7, level, p);
            EXPECT_NEAR(residual_after(MagicState::kA, level, p) / a, 1.0, 1e-12) << p << " " << level;
            EXPECT_NEAR(residual_after(MagicState::kY, level, p) / y, 1.0, 1e-12) << p << " " << level;
        }
    }
}

TEST(residual_after, y_never_exceeds_a) {
    for (double p = 1e-6; p < 1; p *= 1.5) {
        for (int level = 1; level <= 4; ++level) {
            EXPECT_LE(residual_after(MagicState::kY, level, p), residual_after(MagicState::kA, level, p));
        }
    }
}

TEST(select_level, examples) {
    DistillationState a = select_level(MagicState::kA, 6.2e-4, 4.78e-21);
    EXPECT_EQ(a.level, 2);
    EXPECT_EQ(a.kind, MagicState::kA);
    EXPECT_GT(residual_after(MagicState::kA, 1, 6.2e-4), 4.78e-21);
    EXPECT_NEAR(residual_after(MagicState::kA, 1, 6.2e-4), 8.34e-9, 0.01e-9);

    DistillationState y = select_level(MagicState::kY, 6.2e-4, 4.78e-21);
    EXPECT_EQ(y.level, 2);
    EXPECT_NEAR(residual_after(MagicState::kY, 1, 6.2e-4), 1.67e-9, 0.01e-9);
    EXPECT_NEAR(y.residual, 3.25e-26, 0.01e-26);

    // Minimum level is one even when raw states would do.
    EXPECT_EQ(select_level(MagicState::kA, 1e-9, 0.5).level, 1);

    try {
        select_level(MagicState::kA, 0.1, 1e-30);
        FAIL();
    } catch (const EstimationError &e) {
        EXPECT_EQ(e.kind(), ErrorKind::kDistillationInsufficient);
    }
    EXPECT_THROW(select_level(MagicState::kA, 0.0, 1e-3), EstimationError);
    EXPECT_THROW(select_level(MagicState::kA, 1e-3, 0.0), EstimationError);
}

TEST(select_level, monotone_in_rate_and_target) {
    for (MagicState kind : {MagicState::kA, MagicState::kY}) {
        for (double pf = 1e-40; pf < 1e-3; pf *= 10) {
            int prev = 1;
            for (double p = 1e-7; p < 5e-3; p *= 1.3) {
                int level = 0;
                try {
                    level = select_level(kind, p, pf).level;
                } catch (const EstimationError &) {
                    level = 4;
                }
                EXPECT_GE(level, prev);
                prev = level;
            }
        }
        for (double p = 1e-6; p < 5e-3; p *= 2) {
            int prev = 4;
            for (double pf = 1e-60; pf < 0.5; pf *= 10) {
                int level = 4;
                try {
                    level = select_level(kind, p, pf).level;
                } catch (const EstimationError &) {
                }
                EXPECT_LE(level, prev);
                prev = level;
            }
        }
    }
}

TEST(shortage_prob_a, examples_and_oracle) {
    EXPECT_EQ(shortage_prob_a(0.0), 0.0);
    // Frozen from oracle::enumerated_tail(17, 2, 1e-3).
    EXPECT_NEAR(shortage_prob_a(1e-3), 6.729e-7, 0.001e-7);
    EXPECT_NEAR(shortage_prob_a(1e-3) / 6.80e-7, 1.0, 0.05);
    EXPECT_NEAR(shortage_prob_a(1e-2), 6.122e-4, 0.001e-4);
    for (double p : {1e-4, 1e-3, 1e-2, 5e-2}) {
        EXPECT_NEAR(shortage_prob_a(p) / oracle::enumerated_tail(17, 2, p), 1.0, 1e-10);
    }
}

TEST(shortage_prob_a, leading_order) {
    for (double p = 1e-6; p <= 1e-3; p *= 1.9) {
        EXPECT_NEAR(shortage_prob_a(p) / (680 * p * p * p), 1.0, 0.05);
    }
    for (double p = 1e-5; p < 0.1; p *= 1.4) {
        // Upper tail of Binomial(17, p) beyond k = 2 dominates its first term.
        EXPECT_GE(shortage_prob_a(p), oracle::binomial_pmf(17, 3, p));
    }
}

TEST(shortage_prob_ycorr, examples) {
    EXPECT_EQ(shortage_prob_ycorr(0.0), 0.0);
    EXPECT_DOUBLE_EQ(shortage_prob_ycorr(1e-3), 15e-3 / 32768.0);
    EXPECT_NEAR(shortage_prob_ycorr(1e-3), 4.5776e-7, 1e-11);
}

TEST(shortage_prob_ycorr, leading_order_of_exact_double_sum) {
    double exact = oracle::ycorr_double_sum(1e-4);
    EXPECT_NEAR(exact / shortage_prob_ycorr(1e-4), 1.0, 0.02);
}

TEST(redundancy_model, knob_scales_circuit_failure) {
    RedundancyModel m;
    m.circuit_fail_scale = 2;
    EXPECT_DOUBLE_EQ(shortage_prob_ycorr(1e-3, m), 2 * shortage_prob_ycorr(1e-3));
    EXPECT_NEAR(shortage_prob_a(1e-3, m), oracle::enumerated_tail(17, 2, 2e-3), 1e-15);
    m.circuit_fail_scale = 0;
    EXPECT_THROW(m.validate(), EstimationError);
    RedundancyModel broken;
    broken.a_slots = 10;
    EXPECT_THROW(broken.validate(), EstimationError);
}

TEST(distillation_plan, footprint_level_is_max) {
    EXPECT_EQ((DistillationPlan{1, 2, 0, 0}).footprint_level(), 2);
    EXPECT_EQ((DistillationPlan{3, 1, 0, 0}).footprint_level(), 3);
    EXPECT_EQ((DistillationPlan{0, 0, 0, 0}).footprint_level(), 1);
}
