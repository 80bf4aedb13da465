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

#ifndef WPIPOL_TOOLS_CLI_H
#define WPIPOL_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wpipol::cli {

enum class Command { kAnalyze, kSweep, kSimulate, kVerify };
enum class OutputFormat { kCsv, kJson };

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidState = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Raised for malformed command lines; maps to kExitUsage.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses a value list: "x", "x,y,z" or "start:end:step". Ranges include both
/// endpoints; a value within 1e-12 of `end` is snapped to it.
std::vector<double> parse_grid(std::string_view text);

/// Parses "theta,delta;theta,delta;..." (radians).
std::vector<std::pair<double, double>> parse_settings(std::string_view text);

struct RunConfig {
    Command command = Command::kAnalyze;
    std::optional<std::string> input_path;
    std::optional<std::string> alpha1_sq;
    std::optional<std::string> indist;
    double relative_phase = 0.0;
    double c_sq = 1.0;
    std::optional<std::int64_t> shots;
    std::optional<std::string> settings;
    bool analytic = false;
    std::uint64_t seed = 0;
    std::size_t trials = 100000;
    std::optional<std::uint64_t> replay_seed;
    std::optional<OutputFormat> output_format;
    double tolerance = 1e-9;
};

/// Default validity tolerance, or the value of WPI_POL_TOL when set.
double default_tolerance();

/// Runs the tool on argv-style arguments (without the program name). All
/// output goes to `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace wpipol::cli

#endif
