// Copyright 2026 The wpipol Authors
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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace wpipol::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<double> column(const std::string &csv, std::size_t index) {
    std::vector<double> values;
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);  // header
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::string cell;
        for (std::size_t k = 0; k <= index; ++k) {
            std::getline(cells, cell, ',');
        }
        values.push_back(std::stod(cell));
    }
    return values;
}

std::string write_temp(const std::string &name, const std::string &content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST(Grid, forms) {
    EXPECT_EQ(parse_grid("0.5"), std::vector<double>{0.5});
    EXPECT_EQ(parse_grid("0.1,0.2, 0.3"), (std::vector<double>{0.1, 0.2, 0.3}));
    EXPECT_EQ(parse_grid("0:1:0.25"), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
    EXPECT_EQ(parse_grid("0:1:0.5"), (std::vector<double>{0.0, 0.5, 1.0}));
    const std::vector<double> tenths = parse_grid("0:1:0.1");
    ASSERT_EQ(tenths.size(), 11u);
    EXPECT_EQ(tenths.back(), 1.0);
    EXPECT_EQ(parse_grid("0.3:0.3:0.1"), std::vector<double>{0.3});
}

TEST(Grid, malformed) {
    for (const char *bad : {"", "abc", "0:1", "0:1:0", "1:0:0.1", "0:1:-0.1", "0.1,,0.2", "0:1:0.1:2", "nan"}) {
        EXPECT_THROW(parse_grid(bad), UsageError) << bad;
    }
}

TEST(Cli, analyze_complete_which_path_information) {
    const Result r = run_cli({"analyze", "--alpha1-sq", "0.5", "--indist", "0"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["report"]["deg_pol"].get<double>(), 0.0, 1e-12);
    EXPECT_EQ(doc["report"]["indistinguishability"].get<double>(), 0.0);
    EXPECT_TRUE(doc["report"]["best_circumstances"].get<bool>());
    EXPECT_TRUE(doc.contains("polarization_matrix"));
    EXPECT_TRUE(doc.contains("stokes"));
}

TEST(Cli, analyze_single_path_is_degenerate) {
    const Result r = run_cli({"analyze", "--alpha1-sq", "1.0", "--indist", "0.3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_DOUBLE_EQ(doc["report"]["deg_pol"].get<double>(), 1.0);
    EXPECT_TRUE(doc["report"]["degenerate"].get<bool>());
}

TEST(Cli, analyze_input_file) {
    const std::string path =
        write_temp("wpipol_cli_rho.json", R"({"rho": [[[0.5, 0], [0.25, 0]], [[0.25, 0], [0.5, 0]]]})");
    const Result r = run_cli({"analyze", "--input", path});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["report"]["indistinguishability"].get<double>(), 0.5, 1e-15);
    EXPECT_NEAR(doc["report"]["deg_pol"].get<double>(), 0.5, 1e-15);
}

TEST(Cli, analyze_invalid_state_exit_codes) {
    const std::string bad =
        write_temp("wpipol_cli_bad.json", R"({"rho": [[[0.5, 0], [0.6, 0]], [[0.6, 0], [0.5, 0]]]})");
    const Result r = run_cli({"analyze", "--input", bad});
    EXPECT_EQ(r.code, kExitInvalidState);
    EXPECT_NE(r.err.find("PositivityError"), std::string::npos) << r.err;

    EXPECT_EQ(run_cli({"analyze", "--alpha1-sq", "0.5", "--indist", "1.5"}).code, kExitInvalidState);

    const std::string garbage = write_temp("wpipol_cli_garbage.json", "{");
    EXPECT_EQ(run_cli({"analyze", "--input", garbage}).code, kExitUsage);
    EXPECT_EQ(run_cli({"analyze", "--input", "/nonexistent/rho.json"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"analyze"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"analyze", "--alpha1-sq", "0.5"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"analyze", "--input", bad, "--alpha1-sq", "0.5", "--indist", "0"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run_cli({}).code, kExitUsage);
    EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, tolerance_override) {
    const std::string path =
        write_temp("wpipol_cli_loose.json", R"({"rho": [[[0.5, 0], [0, 0]], [[0, 0], [0.5000001, 0]]]})");
    EXPECT_EQ(run_cli({"analyze", "--input", path}).code, kExitInvalidState);
    EXPECT_EQ(run_cli({"analyze", "--input", path, "--tol", "1e-6"}).code, kExitOk);

    ::setenv("WPI_POL_TOL", "1e-6", 1);
    EXPECT_EQ(run_cli({"analyze", "--input", path}).code, kExitOk);
    ::setenv("WPI_POL_TOL", "bogus", 1);
    EXPECT_EQ(run_cli({"analyze", "--input", path}).code, kExitUsage);
    ::unsetenv("WPI_POL_TOL");
}

TEST(Cli, sweep_best_circumstances_line) {
    const Result r = run_cli({"sweep", "--alpha1-sq", "0.5", "--indist", "0:1:0.25"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const std::vector<double> p = column(r.out, 2);
    const std::vector<double> expected{0.0, 0.25, 0.5, 0.75, 1.0};
    ASSERT_EQ(p.size(), expected.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        EXPECT_NEAR(p[k], expected[k], 1e-12);
    }
}

TEST(Cli, sweep_other_grids) {
    const Result pure = run_cli({"sweep", "--alpha1-sq", "0:1:0.5", "--indist", "1"});
    ASSERT_EQ(pure.code, kExitOk);
    for (double p : column(pure.out, 2)) {
        EXPECT_NEAR(p, 1.0, 1e-12);
    }
    EXPECT_EQ(column(pure.out, 2).size(), 3u);

    const Result single = run_cli({"sweep", "--alpha1-sq", "0.7", "--indist", "0.5"});
    ASSERT_EQ(single.code, kExitOk);
    ASSERT_EQ(column(single.out, 2).size(), 1u);
    EXPECT_NEAR(column(single.out, 2)[0], 0.6082762530298219, 1e-15);

    const Result json = run_cli({"sweep", "--alpha1-sq", "0.7", "--indist", "0.5", "--format", "json"});
    ASSERT_EQ(json.code, kExitOk);
    EXPECT_EQ(nlohmann::json::parse(json.out).size(), 1u);

    EXPECT_EQ(run_cli({"sweep", "--alpha1-sq", "0:1", "--indist", "1"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--alpha1-sq", "0:2:0.5", "--indist", "1"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "--alpha1-sq", "0.5"}).code, kExitUsage);
}

TEST(Cli, simulate_best_circumstances) {
    const std::vector<std::string> args{"simulate", "--alpha1-sq", "0.5", "--indist", "0.6",
                                        "--shots",  "1000000",     "--seed", "7"};
    const Result r = run_cli(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    const double p_hat = doc["tomography"]["deg_pol_hat"].get<double>();
    const double sigma = doc["tomography"]["std_err"].get<double>();
    EXPECT_LE(std::abs(p_hat - 0.6), 3.0 * sigma);
    EXPECT_LE(std::abs(doc["discrepancy_sigma"].get<double>()), 3.0);
    EXPECT_EQ(run_cli(args).out, r.out);
}

TEST(Cli, simulate_x_photon_and_options) {
    const Result r = run_cli({"simulate", "--alpha1-sq", "1", "--indist", "0", "--seed", "123"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["tomography"]["deg_pol_hat"].get<double>(), 1.0);

    const Result analytic = run_cli({"simulate", "--alpha1-sq", "0.7", "--indist", "0.5", "--analytic"});
    ASSERT_EQ(analytic.code, kExitOk);
    EXPECT_NEAR(nlohmann::json::parse(analytic.out)["tomography"]["deg_pol_hat"].get<double>(), 0.6082762530298219,
                1e-12);

    const Result custom = run_cli({"simulate", "--alpha1-sq", "0.5", "--indist", "0.6", "--shots", "10000", "--settings",
                                   "0,0;1.5707963267948966,0;0.7853981633974483,0;0.7853981633974483,1.5707963267948966;"
                                   "2.356194490192345,0", "--format", "csv"});
    ASSERT_EQ(custom.code, kExitOk) << custom.err;
    EXPECT_EQ(custom.out.substr(0, 11), "deg_pol_hat");

    EXPECT_EQ(run_cli({"simulate", "--alpha1-sq", "0.5", "--indist", "0.6", "--shots", "0"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"simulate", "--alpha1-sq", "0.5", "--indist", "0.6", "--settings", "0"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"simulate", "--alpha1-sq", "0.5", "--indist", "0.6", "--settings", "0,0;0.1,0"}).code,
              kExitInvalidState);
}

TEST(Cli, verify_smoke) {
    const Result r = run_cli({"verify", "--trials", "10"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("PASS duality-identity"), std::string::npos) << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
