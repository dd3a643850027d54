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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "topocost/serialization.h"

using namespace topocost;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::path(::testing::TempDir()) / name;
}

}  // namespace

TEST(cli, estimate_json) {
    Result r = run({"estimate", "--bits", "1024", "--perr", "6.2e-4"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["Lambda"], 281);
    EXPECT_EQ(j["d"], 33);
    EXPECT_EQ(j["plan"]["footprint_level"], 2);
    EXPECT_TRUE(r.err.empty());
}

TEST(cli, estimate_output_round_trips) {
    Result r = run({"estimate", "--bits", "300", "--perr", "2e-4"});
    ASSERT_EQ(r.code, cli::kExitOk);
    ResourceReport back = report_from_json(r.out);
    EXPECT_NO_THROW(validate_report(back));
    EXPECT_EQ(report_to_json(back) + "\n", r.out);
}

TEST(cli, closed_form_rule) {
    Result r = run({"--distance-rule", "closed_form", "estimate", "--bits", "1024", "--perr", "6.2e-4"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(json::parse(r.out)["d"], 32);
}

TEST(cli, above_threshold_is_a_domain_error) {
    Result r = run({"estimate", "--bits", "1024", "--perr", "0.0102"});
    EXPECT_EQ(r.code, cli::kExitDomainError);
    EXPECT_TRUE(r.out.empty());
    json j = json::parse(r.err);
    EXPECT_EQ(j["error"]["kind"], "above_threshold");
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({"estimate", "--bits", "1", "--perr", "1e-4"}).code, cli::kExitUsageError);
    EXPECT_EQ(run({"estimate", "--perr", "1e-4"}).code, cli::kExitUsageError);
    EXPECT_EQ(run({}).code, cli::kExitUsageError);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsageError);
    EXPECT_EQ(run({"--format", "xml", "estimate", "--bits", "8", "--perr", "1e-4"}).code, cli::kExitUsageError);
    EXPECT_EQ(run({"sweep", "--bits", "4:8"}).code, cli::kExitUsageError);
    EXPECT_EQ(run({"contour", "--metric", "volume", "--threshold", "1", "--perr", "1e-4:1e-3:3"}).code,
              cli::kExitUsageError);
    EXPECT_EQ(run({"--c2", "-1", "estimate", "--bits", "8", "--perr", "1e-4"}).code, cli::kExitUsageError);
    Result r = run({"estimate", "--bits", "1", "--perr", "1e-4"});
    EXPECT_EQ(json::parse(r.err)["error"]["kind"], "usage");
}

TEST(cli, help_exits_cleanly) {
    Result r = run({"--help"});
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_NE(r.out.find("estimate"), std::string::npos);
}

TEST(cli, sweep_csv) {
    Result r = run({"--format", "csv", "sweep", "--bits", "16:256:3", "--perr", "1e-5:1e-3:4"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 3 * 4);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), sweep_csv_header());
}

TEST(cli, sweep_linear_spacing) {
    Result r = run({"sweep", "--bits", "10:30:3", "--perr", "1e-4:3e-4:3", "--spacing", "lin"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["bits"], json({10, 20, 30}));
    EXPECT_DOUBLE_EQ(j["error_rates"][1].get<double>(), 2e-4);
}

TEST(cli, sweep_output_is_byte_identical_across_runs_and_threads) {
    std::vector<std::string> base{"sweep", "--bits", "4:2048:8", "--perr", "1e-6:5e-3:8"};
    Result a = run(base);
    std::vector<std::string> threaded{"--threads", "4"};
    threaded.insert(threaded.end(), base.begin(), base.end());
    Result b = run(threaded);
    ASSERT_EQ(a.code, cli::kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, run(base).out);
}

TEST(cli, contour) {
    Result r = run({"contour", "--metric", "runtime", "--threshold", "31557600", "--perr", "6.2e-4:6.2e-4:1"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    json j = json::parse(r.out);
    std::int64_t l = j["points"][0]["L_boundary"];
    EXPECT_GE(l, 780);
    EXPECT_LE(l, 860);
}

TEST(cli, simulate) {
    Result r = run({"--format", "csv", "simulate", "--perr", "1e-2", "--trials", "20000", "--seed", "5"});
    ASSERT_EQ(r.code, cli::kExitOk) << r.err;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
    EXPECT_EQ(r.out, run({"--format", "csv", "--threads", "3", "simulate", "--perr", "1e-2", "--trials", "20000",
                          "--seed", "5"})
                         .out);
    EXPECT_EQ(run({"simulate", "--perr", "1e-2", "--trials", "0"}).code, cli::kExitUsageError);
}

TEST(cli, profile_file_env_and_overrides) {
    auto path = temp_file("slow.profile");
    std::ofstream(path) << "# slower layers\nT_ns = 20\n";
    Result base = run({"estimate", "--bits", "128", "--perr", "1e-4"});
    Result file = run({"--profile", path.string(), "estimate", "--bits", "128", "--perr", "1e-4"});
    ASSERT_EQ(file.code, cli::kExitOk) << file.err;
    double t0 = json::parse(base.out)["runtime"]["runtime_seconds"];
    double t1 = json::parse(file.out)["runtime"]["runtime_seconds"];
    EXPECT_DOUBLE_EQ(t1, 2 * t0);

    ::setenv(kProfileEnvVar, path.c_str(), 1);
    Result env = run({"estimate", "--bits", "128", "--perr", "1e-4"});
    Result flag = run({"--T-ns", "10", "estimate", "--bits", "128", "--perr", "1e-4"});
    ::unsetenv(kProfileEnvVar);
    EXPECT_EQ(env.out, file.out);
    EXPECT_EQ(flag.out, base.out);

    EXPECT_EQ(run({"--profile", "/nonexistent", "estimate", "--bits", "8", "--perr", "1e-4"}).code,
              cli::kExitUsageError);
}

TEST(cli, output_file) {
    auto path = temp_file("report.json");
    Result r = run({"-o", path.string(), "estimate", "--bits", "64", "--perr", "1e-4"});
    ASSERT_EQ(r.code, cli::kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), run({"estimate", "--bits", "64", "--perr", "1e-4"}).out);
}

TEST(cli, executable_exit_codes) {
    auto status = [](const std::string &args) {
        int raw = std::system((std::string(TOPOCOST_CLI_PATH) + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    EXPECT_EQ(status("estimate --bits 64 --perr 1e-4"), 0);
    EXPECT_EQ(status("estimate --bits 64 --perr 0.0102"), 1);
    EXPECT_EQ(status("estimate --bits 1 --perr 1e-4"), 2);
}
