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

#ifndef TOPOCOST_SERIALIZATION_H
#define TOPOCOST_SERIALIZATION_H

#include <string>
#include <string_view>

#include "topocost/distillery_mc.h"
#include "topocost/pipeline.h"
#include "topocost/sweep_contour.h"

namespace topocost {

/// Environment variable naming a default hardware-profile file.
inline constexpr const char *kProfileEnvVar = "TOPOCOST_PROFILE";

struct Profile {
    PhysicalConstants constants;
    HardwareProfile hardware;
};

/// Parses `key = value` lines. Keys: p_th, C1, C2, T_ns, M_mm, cf_m_per_s.
/// Blank lines and `#` comments are ignored; missing keys keep `base` values.
Profile parse_profile(std::string_view text, const Profile &base = {});
Profile load_profile(const std::string &path, const Profile &base = {});
std::string format_profile(const Profile &profile);

std::string_view distance_rule_name(DistanceRule rule);

// Units are carried in field names (runtime_seconds, S_x_m, ...). Integers wider
// than 64 bits are written as decimal strings. Output is deterministic.
std::string report_to_json(const ResourceReport &report, int indent = 2);
ResourceReport report_from_json(std::string_view text);

/// Checks every invariant of a report and that it equals a fresh estimate of its
/// own input. Throws EstimationError(kInvalidArgument) naming the first violation.
void validate_report(const ResourceReport &report);

std::string sweep_to_json(const SweepGrid &grid, int indent = 2);
/// One row per (L, p) cell with a header row; column order is sweep_csv_header().
std::string sweep_to_csv(const SweepGrid &grid);
std::string_view sweep_csv_header();

std::string contour_to_json(const ContourLine &line, int indent = 2);
std::string contour_to_csv(const ContourLine &line);

std::string sim_to_json(const SimConfig &config, const SimResult &result, int indent = 2);
std::string sim_to_csv(const SimConfig &config, const SimResult &result);

}  // namespace topocost

#endif
