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

#ifndef TOPOCOST_DISTILLERY_MC_H
#define TOPOCOST_DISTILLERY_MC_H

#include <cstdint>

#include "topocost/distillation.h"

namespace topocost {

struct SimConfig {
    double circuit_failure = 1e-3;  ///< per-attempt failure probability of a level-1 circuit
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    RedundancyModel model;
};

struct RateEstimate {
    std::uint64_t events = 0;
    std::uint64_t trials = 0;
    double rate = 0;
    double standard_error = 0;  ///< sqrt(r (1 - r) / trials)
};

struct SimResult {
    RateEstimate shortage_a;      ///< more than a_slots - a_required |A> circuits fail
    RateEstimate shortage_ycorr;  ///< failed correction circuits exceed the undemanded ones
    RateEstimate top_y;           ///< final correction demanded and the spare is exhausted
};

/// Monte Carlo over independent logical timesteps.
///
/// Trials are split into a fixed number of partitions seeded from `seed`, so
/// the result is identical for any `threads` value.
SimResult simulate(const SimConfig &config, unsigned threads = 0);

}  // namespace topocost

#endif
