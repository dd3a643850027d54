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

#include "topocost/decomposition.h"

#include <cmath>
#include <string>

#include "topocost/errors.h"

namespace topocost {

CircuitShape circuit_shape(std::int64_t bits) {
    if (bits < 2) {
        fail(ErrorKind::kInvalidArgument, "bit length L must be >= 2, got " + std::to_string(bits));
    }
    u128 l = static_cast<u128>(bits);
    return CircuitShape{32 * l * l * l, 2 * bits};
}

SKLength sk_sequence_length(ErrorBudget budget) {
    double raw = 19.6 * std::log10(1.0 / budget.delta_gate()) - 10.5;
    double lambda = std::ceil(raw);
    return SKLength{lambda < 1 ? 1 : static_cast<std::int64_t>(lambda)};
}

}  // namespace topocost
