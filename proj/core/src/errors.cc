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

#include "topocost/errors.h"
#include "topocost/wide_int.h"

#include <algorithm>
#include <stdexcept>

namespace topocost {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kInvalidArgument:
            return "invalid_argument";
        case ErrorKind::kAboveThreshold:
            return "above_threshold";
        case ErrorKind::kDegenerate:
            return "degenerate";
        case ErrorKind::kDistillationInsufficient:
            return "distillation_insufficient";
        case ErrorKind::kBoundUnsatisfiable:
            return "bound_unsatisfiable";
    }
    return "unknown";
}

std::string to_decimal(u128 value) {
    if (value == 0) {
        return "0";
    }
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(const std::string &text) {
    if (text.empty()) {
        throw std::invalid_argument("empty integer");
    }
    constexpr u128 kMax = ~u128{0};
    u128 value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a decimal integer: " + text);
        }
        auto digit = static_cast<unsigned>(c - '0');
        if (value > (kMax - digit) / 10) {
            throw std::out_of_range("integer exceeds 128 bits: " + text);
        }
        value = value * 10 + digit;
    }
    return value;
}

double to_double(u128 value) {
    return static_cast<double>(value);
}

}  // namespace topocost
