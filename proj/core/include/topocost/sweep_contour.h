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

#ifndef TOPOCOST_SWEEP_CONTOUR_H
#define TOPOCOST_SWEEP_CONTOUR_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "topocost/errors.h"
#include "topocost/pipeline.h"

namespace topocost {

/// A grid cell that could not be estimated (above threshold, distillation-insufficient, ...).
struct CellError {
    ErrorKind kind;
    std::string message;
};

using CellResult = std::variant<ResourceReport, CellError>;

/// Row-major grid of estimates: rows are bit lengths, columns are error rates.
struct SweepGrid {
    std::vector<std::int64_t> bits;
    std::vector<double> error_rates;
    std::vector<CellResult> cells;

    const CellResult &at(std::size_t bits_index, std::size_t rate_index) const {
        return cells[bits_index * error_rates.size() + rate_index];
    }
};

/// A change in the estimate's (footprint level, d) between adjacent error-rate samples.
struct Discontinuity {
    std::int64_t bits_before;
    std::int64_t bits_after;
    double p_before;
    double p_after;
    int level_before;
    int level_after;
    int d_before;
    int d_after;
};

struct ContourPoint {
    double error_rate;
    std::optional<std::int64_t> bits_boundary;  ///< empty when the bound is unsatisfiable at L = 2
    std::optional<CellError> error;
};

struct ContourLine {
    Metric metric;
    double threshold;
    std::vector<ContourPoint> points;
    std::vector<Discontinuity> discontinuities;
};

/// Worker count used when `threads` is 0.
unsigned default_thread_count();

/// `count` log-spaced integers in [lo, hi], rounded, duplicates removed.
std::vector<std::int64_t> log_spaced_bits(std::int64_t lo, std::int64_t hi, std::size_t count);
std::vector<std::int64_t> linear_spaced_bits(std::int64_t lo, std::int64_t hi, std::size_t count);
std::vector<double> log_spaced(double lo, double hi, std::size_t count);
std::vector<double> linear_spaced(double lo, double hi, std::size_t count);

/// Evaluates every (L, p) cell. Axes must be strictly increasing. The result does
/// not depend on `threads` or on evaluation order.
SweepGrid sweep(std::span<const std::int64_t> bits_axis, std::span<const double> rate_axis,
                const PhysicalConstants &constants = {}, const HardwareProfile &hw = {},
                const ModelOptions &options = {}, unsigned threads = 0);

/// Adjacent error-rate samples, along each row, whose footprint levels differ.
std::vector<Discontinuity> level_discontinuities(const SweepGrid &grid);

/// Iso-line of `metric` at `threshold`: the largest L within the bound for each p.
ContourLine contour(Metric metric, double threshold, std::span<const double> rate_axis,
                    const PhysicalConstants &constants = {}, const HardwareProfile &hw = {},
                    const ModelOptions &options = {}, unsigned threads = 0,
                    std::int64_t max_bits = kMaxSearchBits);

}  // namespace topocost

#endif
