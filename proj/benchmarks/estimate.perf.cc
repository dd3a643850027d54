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

#include <benchmark/benchmark.h>

#include "topocost/distillery_mc.h"
#include "topocost/pipeline.h"
#include "topocost/sweep_contour.h"

namespace {

void BM_estimate(benchmark::State &state) {
    topocost::ProblemInstance instance{state.range(0), 6.2e-4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(topocost::estimate(instance));
    }
}
BENCHMARK(BM_estimate)->Arg(64)->Arg(1024)->Arg(8192);

void BM_max_bits_within(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            topocost::max_bits_within(topocost::kSecondsPerYear, 6.2e-4, topocost::Metric::kRuntime));
    }
}
BENCHMARK(BM_max_bits_within);

void BM_sweep(benchmark::State &state) {
    auto n = static_cast<std::size_t>(state.range(0));
    std::vector<std::int64_t> bits = topocost::log_spaced_bits(4, 8192, n);
    std::vector<double> rates = topocost::log_spaced(1e-5, 6e-3, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(topocost::sweep(bits, rates, {}, {}, {}, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(bits.size() * rates.size()));
}
BENCHMARK(BM_sweep)->Arg(16)->Arg(64);

void BM_simulate(benchmark::State &state) {
    topocost::SimConfig config;
    config.circuit_failure = 1e-2;
    config.trials = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(topocost::simulate(config, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_simulate)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
