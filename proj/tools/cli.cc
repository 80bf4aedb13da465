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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wpipol/duality.h"
#include "wpipol/errors.h"
#include "wpipol/io.h"
#include "wpipol/polarimeter.h"
#include "wpipol/polarization.h"
#include "wpipol/states.h"
#include "wpipol/verify.h"

namespace wpipol::cli {

namespace {

constexpr double kGridSnap = 1e-12;

double parse_number(std::string_view text) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw UsageError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

double single_value(const std::string &text, const char *flag) {
    const std::vector<double> v = parse_grid(text);
    if (v.size() != 1) {
        throw UsageError(std::string(flag) + " takes a single value for this command");
    }
    return v.front();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DensityOperator resolve_state(const RunConfig &cfg) {
    const bool from_file = cfg.input_path.has_value();
    const bool from_params = cfg.alpha1_sq.has_value() || cfg.indist.has_value();
    if (from_file == from_params) {
        throw UsageError("specify the state with either --input or both --alpha1-sq and --indist");
    }
    if (from_file) {
        try {
            return read_density_json(read_file(*cfg.input_path), cfg.tolerance);
        } catch (const FormatError &e) {
            throw UsageError(*cfg.input_path + ": " + e.invariant());
        }
    }
    if (!cfg.alpha1_sq || !cfg.indist) {
        throw UsageError("--alpha1-sq and --indist must be given together");
    }
    const double a = single_value(*cfg.alpha1_sq, "--alpha1-sq");
    const double i = single_value(*cfg.indist, "--indist");
    return build_rho(AmplitudePair::from_weights(a, cfg.relative_phase), i);
}

void check_unit_interval(const std::vector<double> &grid, const char *flag) {
    for (double v : grid) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw UsageError(std::string(flag) + " values must lie in [0, 1], got " + format_double(v));
        }
    }
}

int cmd_analyze(const RunConfig &cfg, std::ostream &out) {
    const DensityOperator rho = resolve_state(cfg);
    const FieldScale scale = FieldScale::from_c_sq(cfg.c_sq);
    const DualityReport report = duality_report(rho, scale);
    const PolarizationMatrix gamma = polarization_matrix(rho, scale);
    const StokesVector stokes = stokes_from_gamma(gamma);

    if (cfg.output_format.value_or(OutputFormat::kJson) == OutputFormat::kCsv) {
        out << sweep_to_csv(std::span<const DualityReport>(&report, 1));
        return kExitOk;
    }
    out << "{\"state\": " << density_to_json(rho) << ",\n"
        << " \"report\": " << report_to_json(report) << ",\n"
        << " \"polarization_matrix\": " << gamma_to_json(gamma) << ",\n"
        << " \"stokes\": " << stokes_to_json(stokes) << "}\n";
    return kExitOk;
}

int cmd_sweep(const RunConfig &cfg, std::ostream &out) {
    if (!cfg.alpha1_sq || !cfg.indist) {
        throw UsageError("sweep needs --alpha1-sq and --indist grids");
    }
    const std::vector<double> alpha = parse_grid(*cfg.alpha1_sq);
    const std::vector<double> indist = parse_grid(*cfg.indist);
    check_unit_interval(alpha, "--alpha1-sq");
    check_unit_interval(indist, "--indist");
    const std::vector<DualityReport> reports = sweep(alpha, indist, FieldScale::from_c_sq(cfg.c_sq));

    if (cfg.output_format.value_or(OutputFormat::kCsv) == OutputFormat::kCsv) {
        out << sweep_to_csv(reports);
        return kExitOk;
    }
    out << "[";
    for (std::size_t k = 0; k < reports.size(); ++k) {
        out << (k ? ",\n " : "") << report_to_json(reports[k]);
    }
    out << "]\n";
    return kExitOk;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out) {
    const DensityOperator rho = resolve_state(cfg);
    const std::int64_t shots = cfg.shots.value_or(1000000);
    if (shots <= 0) {
        throw UsageError("--shots must be positive");
    }
    std::vector<AnalyzerSetting> settings = default_settings();
    if (cfg.settings) {
        settings.clear();
        for (const auto &[theta, delta] : parse_settings(*cfg.settings)) {
            settings.push_back(AnalyzerSetting::wrapped(theta, delta));
        }
    }
    const SamplingMode mode = cfg.analytic ? SamplingMode::kAnalytic : SamplingMode::kSampled;
    const TomographyResult t = tomograph(rho, shots, cfg.seed, settings, mode);
    const double analytic = degree_of_polarization(polarization_matrix(rho));
    const double sigma = t.std_err > 0.0 ? (t.deg_pol_hat - analytic) / t.std_err : 0.0;

    if (cfg.output_format.value_or(OutputFormat::kJson) == OutputFormat::kCsv) {
        out << "deg_pol_hat,std_err,deg_pol,discrepancy_sigma,s1_hat,s2_hat,s3_hat\n"
            << format_double(t.deg_pol_hat) << ',' << format_double(t.std_err) << ',' << format_double(analytic)
            << ',' << format_double(sigma) << ',' << format_double(t.stokes_hat.s1) << ','
            << format_double(t.stokes_hat.s2) << ',' << format_double(t.stokes_hat.s3) << '\n';
        return kExitOk;
    }
    out << "{\"tomography\": " << tomography_to_json(t) << ",\n"
        << " \"deg_pol\": " << format_double(analytic) << ",\n"
        << " \"discrepancy_sigma\": " << format_double(sigma) << ",\n"
        << " \"seed\": " << cfg.seed << ", \"shots_per_setting\": " << shots
        << ", \"analytic_mode\": " << (cfg.analytic ? "true" : "false") << "}\n";
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    VerifyOptions options;
    options.trials = cfg.trials;
    options.seed = cfg.seed;
    options.replay_seed = cfg.replay_seed;
    const std::vector<InvariantResult> results = run_verification(options);

    const InvariantResult *first_failure = nullptr;
    for (const InvariantResult &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << r.name << " trials=" << r.trials
            << " max_residual=" << std::setw(9) << short_number(r.max_residual) << " tol=" << std::setw(7)
            << short_number(r.tolerance) << "  # "
            << r.description << '\n';
        if (!r.passed && first_failure == nullptr) {
            first_failure = &r;
        }
    }
    if (first_failure != nullptr) {
        out << "first failing invariant: " << first_failure->name << " (trial seed " << *first_failure->failing_seed
            << "; reproduce with: verify --replay-seed " << *first_failure->failing_seed << ")\n";
        return kExitVerifyFailed;
    }
    out << "all " << results.size() << " invariants hold\n";
    return kExitOk;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
    if (text.empty()) {
        throw UsageError("empty grid");
    }
    if (text.find(':') != std::string_view::npos) {
        const std::vector<std::string_view> parts = split(text, ':');
        if (parts.size() != 3) {
            throw UsageError("range grids take the form start:end:step");
        }
        const double start = parse_number(parts[0]);
        const double end = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (!(step > 0.0) || end < start) {
            throw UsageError("range grid needs step > 0 and end >= start");
        }
        const double span = (end - start) / step;
        if (span > 1e7) {
            throw UsageError("range grid has too many points");
        }
        std::vector<double> values;
        for (std::size_t k = 0;; ++k) {
            double v = start + static_cast<double>(k) * step;
            if (v > end + kGridSnap) {
                break;
            }
            if (std::abs(v - end) <= kGridSnap) {
                v = end;
            }
            values.push_back(v);
        }
        return values;
    }
    std::vector<double> values;
    for (std::string_view part : split(text, ',')) {
        values.push_back(parse_number(part));
    }
    return values;
}

std::vector<std::pair<double, double>> parse_settings(std::string_view text) {
    std::vector<std::pair<double, double>> out;
    for (std::string_view item : split(text, ';')) {
        const std::vector<std::string_view> angles = split(item, ',');
        if (angles.size() != 2) {
            throw UsageError("analyzer settings take the form theta,delta;theta,delta;...");
        }
        out.emplace_back(parse_number(angles[0]), parse_number(angles[1]));
    }
    return out;
}

double default_tolerance() {
    if (const char *env = std::getenv("WPI_POL_TOL"); env != nullptr && *env != '\0') {
        const double tol = parse_number(env);
        if (!(tol >= 0.0)) {
            throw UsageError("WPI_POL_TOL must be non-negative");
        }
        return tol;
    }
    return kValidityTol;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;

    CLI::App app{"Which-path information versus degree of polarization for a single photon"};
    app.require_subcommand(1);

    std::string format;
    std::optional<double> tol;
    auto add_state_options = [&](CLI::App *cmd, bool grids) {
        cmd->add_option("--alpha1-sq", cfg.alpha1_sq,
                        grids ? "Grid of |a1|^2 values (x | x,y,... | start:end:step)" : "|a1|^2 in [0, 1]");
        cmd->add_option("--indist", cfg.indist,
                        grids ? "Grid of I values (x | x,y,... | start:end:step)" : "Degree of indistinguishability");
        cmd->add_option("--c-sq", cfg.c_sq, "Field scale |C|^2")->capture_default_str();
        cmd->add_option("--format", format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
        if (!grids) {
            cmd->add_option("--input", cfg.input_path, "JSON file {\"rho\": [[[re,im],[re,im]],[[re,im],[re,im]]]}");
            cmd->add_option("--phase", cfg.relative_phase, "Relative phase arg(a2) - arg(a1) in radians");
            cmd->add_option("--tol", tol, "Validity tolerance (default 1e-9 or $WPI_POL_TOL)");
        }
    };

    CLI::App *analyze = app.add_subcommand("analyze", "Duality report, polarization matrix and Stokes vector");
    add_state_options(analyze, false);

    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Tabulate P, I and the identity residual over a grid");
    add_state_options(sweep_cmd, true);

    CLI::App *simulate = app.add_subcommand("simulate", "Monte Carlo polarimetry behind analyzers");
    add_state_options(simulate, false);
    simulate->add_option("--shots", cfg.shots, "Shots per analyzer setting (default 1000000)");
    simulate->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    simulate->add_option("--settings", cfg.settings, "Analyzer list theta,delta;... (default H,V,D,R)");
    simulate->add_flag("--analytic", cfg.analytic, "Use exact probabilities instead of sampled counts");

    CLI::App *verify = app.add_subcommand("verify", "Run every invariant on seeded random states");
    verify->add_option("--trials", cfg.trials, "Number of random trials")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
    verify->add_option("--replay-seed", cfg.replay_seed, "Replay one trial by its reported trial seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        std::ostringstream help;
        const int code = app.exit(e, help, help);
        (code == 0 ? out : err) << help.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.tolerance = tol.value_or(default_tolerance());
        if (!format.empty()) {
            cfg.output_format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
        }
        if (analyze->parsed()) {
            cfg.command = Command::kAnalyze;
            return cmd_analyze(cfg, out);
        }
        if (sweep_cmd->parsed()) {
            cfg.command = Command::kSweep;
            return cmd_sweep(cfg, out);
        }
        if (simulate->parsed()) {
            cfg.command = Command::kSimulate;
            return cmd_simulate(cfg, out);
        }
        cfg.command = Command::kVerify;
        return cmd_verify(cfg, out);
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << e.what() << '\n';
        return kExitInvalidState;
    }
}

}  // namespace wpipol::cli
