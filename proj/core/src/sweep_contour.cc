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

#include "topocost/sweep_contour.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace topocost {

namespace {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn &&fn) {
    if (threads == 0) {
        threads = default_thread_count();
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                fn(i);
            }
        });
    }
}

template <typename T>
void require_increasing(std::span<const T> axis, const char *name) {
    for (std::size_t i = 1; i < axis.size(); ++i) {
        if (!(axis[i - 1] < axis[i])) {
            fail(ErrorKind::kInvalidArgument, std::string(name) + " axis must be strictly increasing");
        }
    }
}

CellResult evaluate(std::int64_t bits, double p, const PhysicalConstants &constants, const HardwareProfile &hw,
                    const ModelOptions &options) {
    try {
        return estimate(ProblemInstance{bits, p}, constants, hw, options);
    } catch (const EstimationError &e) {
        return CellError{e.kind(), e.what()};
    }
}

Discontinuity make_discontinuity(const ResourceReport &a, const ResourceReport &b) {
    return Discontinuity{a.input.bits,
                         b.input.bits,
                         a.input.error_rate,
                         b.input.error_rate,
                         a.plan.footprint_level(),
                         b.plan.footprint_level(),
                         a.d.value(),
                         b.d.value()};
}

std::vector<std::int64_t> round_unique(const std::vector<double> &values) {
    std::vector<std::int64_t> out;
    for (double v : values) {
        auto b = static_cast<std::int64_t>(std::llround(v));
        if (out.empty() || b > out.back()) {
            out.push_back(b);
        }
    }
    return out;
}

}  // namespace

unsigned default_thread_count() {
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> log_spaced(double lo, double hi, std::size_t count) {
    if (!(lo > 0) || !(hi >= lo)) {
        fail(ErrorKind::kInvalidArgument, "log spacing needs 0 < lo <= hi");
    }
    std::vector<double> out;
    if (count == 0) {
        return out;
    }
    if (count == 1 || lo == hi) {
        out.push_back(lo);
        return out;
    }
    const double ratio = hi / lo;
    const double last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(i + 1 == count ? hi : lo * std::pow(ratio, static_cast<double>(i) / last));
    }
    return out;
}

std::vector<double> linear_spaced(double lo, double hi, std::size_t count) {
    if (!(hi >= lo)) {
        fail(ErrorKind::kInvalidArgument, "linear spacing needs lo <= hi");
    }
    std::vector<double> out;
    if (count == 0) {
        return out;
    }
    if (count == 1 || lo == hi) {
        out.push_back(lo);
        return out;
    }
    double step = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(i + 1 == count ? hi : lo + step * static_cast<double>(i));
    }
    return out;
}

std::vector<std::int64_t> log_spaced_bits(std::int64_t lo, std::int64_t hi, std::size_t count) {
    return round_unique(log_spaced(static_cast<double>(lo), static_cast<double>(hi), count));
}

std::vector<std::int64_t> linear_spaced_bits(std::int64_t lo, std::int64_t hi, std::size_t count) {
    return round_unique(linear_spaced(static_cast<double>(lo), static_cast<double>(hi), count));
}

SweepGrid sweep(std::span<const std::int64_t> bits_axis, std::span<const double> rate_axis,
                const PhysicalConstants &constants, const HardwareProfile &hw, const ModelOptions &options,
                unsigned threads) {
    require_increasing(bits_axis, "bit-length");
    require_increasing(rate_axis, "error-rate");

    SweepGrid grid;
    grid.bits.assign(bits_axis.begin(), bits_axis.end());
    grid.error_rates.assign(rate_axis.begin(), rate_axis.end());
    grid.cells.resize(grid.bits.size() * grid.error_rates.size(), CellError{ErrorKind::kInvalidArgument, ""});

    const std::size_t columns = grid.error_rates.size();
    parallel_for(grid.cells.size(), threads, [&](std::size_t i) {
        grid.cells[i] = evaluate(grid.bits[i / columns], grid.error_rates[i % columns], constants, hw, options);
    });
    return grid;
}

std::vector<Discontinuity> level_discontinuities(const SweepGrid &grid) {
    std::vector<Discontinuity> out;
    for (std::size_t i = 0; i < grid.bits.size(); ++i) {
        for (std::size_t j = 1; j < grid.error_rates.size(); ++j) {
            const auto *a = std::get_if<ResourceReport>(&grid.at(i, j - 1));
            const auto *b = std::get_if<ResourceReport>(&grid.at(i, j));
            if (a != nullptr && b != nullptr && a->plan.footprint_level() != b->plan.footprint_level()) {
                out.push_back(make_discontinuity(*a, *b));
            }
        }
    }
    return out;
}

ContourLine contour(Metric metric, double threshold, std::span<const double> rate_axis,
                    const PhysicalConstants &constants, const HardwareProfile &hw, const ModelOptions &options,
                    unsigned threads, std::int64_t max_bits) {
    require_increasing(rate_axis, "error-rate");

    ContourLine line{metric, threshold, {}, {}};
    line.points.resize(rate_axis.size());
    std::vector<std::optional<ResourceReport>> boundary(rate_axis.size());

    parallel_for(rate_axis.size(), threads, [&](std::size_t i) {
        ContourPoint &point = line.points[i];
        point.error_rate = rate_axis[i];
        try {
            std::int64_t bits = max_bits_within(threshold, rate_axis[i], metric, constants, hw, options, max_bits);
            point.bits_boundary = bits;
            CellResult cell = evaluate(bits, rate_axis[i], constants, hw, options);
            if (auto *report = std::get_if<ResourceReport>(&cell)) {
                boundary[i] = std::move(*report);
            }
        } catch (const EstimationError &e) {
            point.error = CellError{e.kind(), e.what()};
        }
    });

    for (std::size_t i = 1; i < boundary.size(); ++i) {
        if (!boundary[i - 1] || !boundary[i]) {
            continue;
        }
        const ResourceReport &a = *boundary[i - 1];
        const ResourceReport &b = *boundary[i];
        if (a.plan.footprint_level() != b.plan.footprint_level() || a.d != b.d) {
            line.discontinuities.push_back(make_discontinuity(a, b));
        }
    }
    return line;
}

}  // namespace topocost
