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

#include "topocost/distillery_mc.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "topocost/errors.h"

namespace topocost {

namespace {

// Fixed so that results do not depend on the worker count.
constexpr std::uint64_t kPartitions = 64;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct Counts {
    std::uint64_t a = 0;
    std::uint64_t ycorr = 0;
    std::uint64_t top_y = 0;
};

Counts run_partition(const SimConfig &config, std::uint64_t trials, std::uint64_t seed) {
    const RedundancyModel &m = config.model;
    const double q = config.circuit_failure;
    std::mt19937_64 rng(seed);
    std::binomial_distribution<int> a_failures(m.a_slots, q);
    std::binomial_distribution<int> y_failures(m.y_corr_slots, q);
    std::binomial_distribution<int> y_demand(m.y_corr_slots, m.y_corr_demand_prob);
    std::binomial_distribution<int> top_failures(m.top_y_slots, q);
    std::bernoulli_distribution top_demand(m.top_y_demand_prob);
    const int a_spares = m.a_slots - m.a_required;
    const int top_spares = m.top_y_slots - m.top_y_required;

    Counts c;
    for (std::uint64_t t = 0; t < trials; ++t) {
        if (a_failures(rng) > a_spares) {
            ++c.a;
        }
        int demand = y_demand(rng);
        if (y_failures(rng) > m.y_corr_slots - demand) {
            ++c.ycorr;
        }
        bool needed = top_demand(rng);
        if (top_failures(rng) > top_spares && needed) {
            ++c.top_y;
        }
    }
    return c;
}

RateEstimate make_estimate(std::uint64_t events, std::uint64_t trials) {
    RateEstimate e;
    e.events = events;
    e.trials = trials;
    e.rate = static_cast<double>(events) / static_cast<double>(trials);
    e.standard_error = std::sqrt(e.rate * (1 - e.rate) / static_cast<double>(trials));
    return e;
}

}  // namespace

SimResult simulate(const SimConfig &config, unsigned threads) {
    if (config.trials == 0) {
        fail(ErrorKind::kInvalidArgument, "trials must be >= 1");
    }
    if (!(config.circuit_failure >= 0 && config.circuit_failure <= 1)) {
        fail(ErrorKind::kInvalidArgument, "circuit failure probability must lie in [0, 1]");
    }
    config.model.validate();

    std::uint64_t parts = std::min(kPartitions, config.trials);
    std::vector<Counts> counts(parts);
    auto work = [&](std::uint64_t i) {
        std::uint64_t share = config.trials / parts + (i < config.trials % parts ? 1 : 0);
        counts[i] = run_partition(config, share, splitmix64(config.seed ^ splitmix64(i)));
    };

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, parts));
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < parts; ++i) {
            work(i);
        }
    } else {
        std::vector<std::jthread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                for (std::uint64_t i = t; i < parts; i += threads) {
                    work(i);
                }
            });
        }
    }

    Counts total;
    for (const Counts &c : counts) {
        total.a += c.a;
        total.ycorr += c.ycorr;
        total.top_y += c.top_y;
    }
    return SimResult{make_estimate(total.a, config.trials), make_estimate(total.ycorr, config.trials),
                     make_estimate(total.top_y, config.trials)};
}

}  // namespace topocost
