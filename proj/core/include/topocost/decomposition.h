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

#ifndef TOPOCOST_DECOMPOSITION_H
#define TOPOCOST_DECOMPOSITION_H

#include <cstdint>

#include "topocost/model_core.h"
#include "topocost/wide_int.h"

namespace topocost {

/// Leading-order shape of the linear-nearest-neighbour Shor circuit.
struct CircuitShape {
    u128 depth_steps;        ///< K = 32 L^3
    std::int64_t qubits;     ///< Q = 2 L
};

/// Number of Rz(pi/8) primitives that approximate one algorithmic rotation.
struct SKLength {
    std::int64_t lambda;
};

CircuitShape circuit_shape(std::int64_t bits);

/// lambda = ceil(19.6 log10(1/delta) - 10.5), clamped to >= 1.
///
/// Every algorithmic gate is pessimistically treated as a full-length sequence
/// of Rz(pi/8) rotations.
SKLength sk_sequence_length(ErrorBudget budget);

}  // namespace topocost

#endif
