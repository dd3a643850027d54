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

#include "cli.h"

#include <cstdlib>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "topocost/distillery_mc.h"
#include "topocost/errors.h"
#include "topocost/pipeline.h"
#include "topocost/serialization.h"
#include "topocost/sweep_contour.h"

namespace topocost::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AxisSpec {
    double lo = 0;
    double hi = 0;
    std::size_t count = 1;
};

/// "a:b:n" or a single value "a".
AxisSpec parse_axis(const std::string &text, const char *flag) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    for (std::string part; std::getline(in, part, ':');) {
        parts.push_back(part);
    }
    auto number = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size()) {
            throw UsageError(std::string(flag) + ": '" + text + "' is not a:b:n");
        }
        return v;
    };
    if (parts.size() == 1) {
        double v = number(parts[0]);
        return AxisSpec{v, v, 1};
    }
    if (parts.size() != 3) {
        throw UsageError(std::string(flag) + ": expected a:b:n, got '" + text + "'");
    }
    AxisSpec spec{number(parts[0]), number(parts[1]), 0};
    double n = number(parts[2]);
    if (n < 1 || n != static_cast<double>(static_cast<std::size_t>(n))) {
        throw UsageError(std::string(flag) + ": point count must be a positive integer");
    }
    spec.count = static_cast<std::size_t>(n);
    if (!(spec.hi >= spec.lo)) {
        throw UsageError(std::string(flag) + ": axis must satisfy a <= b");
    }
    return spec;
}

std::vector<double> rate_axis(const AxisSpec &spec, bool log_spacing) {
    if (!(spec.lo >= 0 && spec.hi < 1)) {
        throw UsageError("--perr: error rates must lie in [0, 1)");
    }
    if (log_spacing && spec.lo <= 0 && spec.count > 1) {
        throw UsageError("--perr: log spacing needs a > 0");
    }
    return log_spacing && spec.count > 1 ? log_spaced(spec.lo, spec.hi, spec.count)
                                         : linear_spaced(spec.lo, spec.hi, spec.count);
}

std::vector<std::int64_t> bits_axis(const AxisSpec &spec, bool log_spacing) {
    if (spec.lo < 2) {
        throw UsageError("--bits: L must be >= 2");
    }
    auto lo = static_cast<std::int64_t>(spec.lo);
    auto hi = static_cast<std::int64_t>(spec.hi);
    return log_spacing ? log_spaced_bits(lo, hi, spec.count) : linear_spaced_bits(lo, hi, spec.count);
}

void write_error(std::ostream &err, std::string_view kind, const std::string &message) {
    nlohmann::ordered_json j{{"error", {{"kind", kind}, {"message", message}}}};
    err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Resource estimates for fault-tolerant factoring on a topological cluster-state machine", "topocost"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string profile_path;
    std::optional<double> p_th, c1, c2, t_ns, m_mm, cf;
    std::string format = "json";
    std::string output_path;
    std::string rule_name = "budget_verified";
    unsigned threads = 0;
    double fail_scale = 1.0;

    app.add_option("--profile", profile_path, "Hardware profile file (key = value); default from $TOPOCOST_PROFILE");
    app.add_option("--p-th", p_th, "Threshold error rate");
    app.add_option("--c1", c1, "Threshold-law prefactor C1");
    app.add_option("--c2", c2, "Threshold-law rescaling C2");
    app.add_option("--T-ns", t_ns, "Cluster layer preparation time [ns]");
    app.add_option("--M-mm", m_mm, "Photonic module edge [mm]");
    app.add_option("--cf", cf, "Speed of light in fiber [m/s]");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output,-o", output_path, "Write the artifact to this file instead of stdout");
    app.add_option("--distance-rule", rule_name, "budget_verified or closed_form")
        ->check(CLI::IsMember({"budget_verified", "closed_form"}));
    app.add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    app.add_option("--fail-scale", fail_scale, "Distillation circuit failure = scale * p")
        ->check(CLI::PositiveNumber);

    std::int64_t bits = 0;
    double perr = 0;
    auto *estimate_cmd = app.add_subcommand("estimate", "Estimate a single (L, p) point");
    estimate_cmd->add_option("--bits", bits, "Bit length L of the number to factor")
        ->required()
        ->check(CLI::Range(std::int64_t{2}, kMaxSearchBits));
    estimate_cmd->add_option("--perr", perr, "Physical error rate p")->required()->check(CLI::Range(0.0, 0.999999));

    std::string bits_spec, perr_spec;
    std::string spacing = "log";
    auto *sweep_cmd = app.add_subcommand("sweep", "Evaluate an (L, p) grid");
    sweep_cmd->add_option("--bits", bits_spec, "L axis a:b:n")->default_val("4:8192:64");
    sweep_cmd->add_option("--perr", perr_spec, "p axis c:d:m")->default_val("1e-5:6e-3:64");
    sweep_cmd->add_option("--spacing", spacing, "Axis spacing")->check(CLI::IsMember({"log", "lin"}));

    std::string metric_text = "runtime";
    double threshold = 0;
    std::int64_t max_bits = kMaxSearchBits;
    auto *contour_cmd = app.add_subcommand("contour", "Largest L within a bound, per error rate");
    contour_cmd->add_option("--metric", metric_text, "runtime [s], modules [count], sx or sy [m]")
        ->check(CLI::IsMember({"runtime", "modules", "sx", "sy"}));
    contour_cmd->add_option("--threshold", threshold, "Bound in the metric's unit")->required();
    contour_cmd->add_option("--perr", perr_spec, "p axis c:d:m")->required();
    contour_cmd->add_option("--max-bits", max_bits, "Search cap for L")->check(CLI::Range(std::int64_t{2}, kMaxSearchBits));
    contour_cmd->add_option("--spacing", spacing, "Axis spacing")->check(CLI::IsMember({"log", "lin"}));

    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    auto *sim_cmd = app.add_subcommand("simulate", "Monte Carlo check of the spare-circuit shortage rates");
    sim_cmd->add_option("--perr", perr, "Physical error rate p")->required()->check(CLI::Range(0.0, 1.0));
    sim_cmd->add_option("--trials", trials, "Number of simulated logical timesteps")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--seed", seed, "Master seed");

    std::vector<std::string> argv_store{"topocost"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        write_error(err, "usage", e.what());
        return kExitUsageError;
    }

    try {
        Profile profile;
        if (profile_path.empty()) {
            if (const char *env = std::getenv(kProfileEnvVar); env != nullptr && *env != '\0') {
                profile_path = env;
            }
        }
        if (!profile_path.empty()) {
            profile = load_profile(profile_path, profile);
        }
        if (p_th) profile.constants.p_th = *p_th;
        if (c1) profile.constants.c1 = *c1;
        if (c2) profile.constants.c2 = *c2;
        if (t_ns) profile.hardware.layer_time_s = *t_ns * 1e-9;
        if (m_mm) profile.hardware.module_edge_m = *m_mm * 1e-3;
        if (cf) profile.hardware.fiber_light_speed_m_per_s = *cf;
        profile.constants.validate();
        profile.hardware.validate();

        ModelOptions options;
        options.distance_rule = rule_name == "closed_form" ? DistanceRule::kClosedForm : DistanceRule::kBudgetVerified;
        options.redundancy.circuit_fail_scale = fail_scale;
        const bool csv = format == "csv";
        const bool log_spacing = spacing == "log";

        std::string artifact;
        try {
            if (*estimate_cmd) {
                ResourceReport report = estimate(ProblemInstance{bits, perr}, profile.constants, profile.hardware, options);
                if (csv) {
                    SweepGrid one{{bits}, {perr}, {report}};
                    artifact = sweep_to_csv(one);
                } else {
                    artifact = report_to_json(report) + "\n";
                }
            } else if (*sweep_cmd) {
                auto l_axis = bits_axis(parse_axis(bits_spec, "--bits"), log_spacing);
                auto p_axis = rate_axis(parse_axis(perr_spec, "--perr"), log_spacing);
                SweepGrid grid = sweep(l_axis, p_axis, profile.constants, profile.hardware, options, threads);
                artifact = csv ? sweep_to_csv(grid) : sweep_to_json(grid) + "\n";
            } else if (*contour_cmd) {
                auto p_axis = rate_axis(parse_axis(perr_spec, "--perr"), log_spacing);
                Metric metric = *parse_metric(metric_text);
                ContourLine line =
                    contour(metric, threshold, p_axis, profile.constants, profile.hardware, options, threads, max_bits);
                artifact = csv ? contour_to_csv(line) : contour_to_json(line) + "\n";
            } else if (*sim_cmd) {
                SimConfig config;
                config.model = options.redundancy;
                config.circuit_failure = options.redundancy.circuit_failure(perr);
                config.trials = trials;
                config.seed = seed;
                SimResult result = simulate(config, threads);
                artifact = csv ? sim_to_csv(config, result) : sim_to_json(config, result) + "\n";
            }
        } catch (const UsageError &e) {
            write_error(err, "usage", e.what());
            return kExitUsageError;
        }

        if (output_path.empty()) {
            out << artifact;
        } else {
            std::ofstream file(output_path, std::ios::binary);
            if (!file || !(file << artifact)) {
                write_error(err, "io", "cannot write " + output_path);
                return kExitDomainError;
            }
        }
        return kExitOk;
    } catch (const EstimationError &e) {
        write_error(err, error_kind_name(e.kind()), e.what());
        return e.kind() == ErrorKind::kInvalidArgument ? kExitUsageError : kExitDomainError;
    }
}

}  // namespace topocost::cli
