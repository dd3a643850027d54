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

#ifndef TOPOCOST_WIDE_INT_H
#define TOPOCOST_WIDE_INT_H

#include <cstdint>
#include <string>

namespace topocost {

// Cluster depths and the circuit depth 32L^3 overflow 64 bits for L near 2^20.
__extension__ typedef unsigned __int128 u128;

std::string to_decimal(u128 value);
u128 parse_u128(const std::string &text);
double to_double(u128 value);

}  // namespace topocost

#endif
