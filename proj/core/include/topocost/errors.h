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

#ifndef TOPOCOST_ERRORS_H
#define TOPOCOST_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace topocost {

/// Classifies why an estimate could not be produced.
enum class ErrorKind {
    kInvalidArgument,
    kAboveThreshold,
    kDegenerate,
    kDistillationInsufficient,
    kBoundUnsatisfiable,
};

/// Stable snake_case identifier, used in structured CLI errors and serialized grids.
std::string_view error_kind_name(ErrorKind kind);

class EstimationError : public std::domain_error {
   public:
    EstimationError(ErrorKind kind, const std::string &what) : std::domain_error(what), kind_(kind) {
    }
    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
    throw EstimationError(kind, what);
}

}  // namespace topocost

#endif
