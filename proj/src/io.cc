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

#include "wpipol/io.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace wpipol {

namespace {

std::string complex_pair(Complex z) {
    return "[" + format_double(z.real()) + ", " + format_double(z.imag()) + "]";
}

std::string boolean(bool b) {
    return b ? "true" : "false";
}

Complex parse_complex(const nlohmann::json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw FormatError("complex entries must be [re, im] number pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

CMat2 parse_rho_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rho")) {
        throw FormatError("expected an object with a \"rho\" member");
    }
    const nlohmann::json &rows = doc["rho"];
    if (!rows.is_array() || rows.size() != 2 || !rows[0].is_array() || rows[0].size() != 2 ||
        !rows[1].is_array() || rows[1].size() != 2) {
        throw FormatError("\"rho\" must be a 2x2 array of [re, im] pairs");
    }
    return {parse_complex(rows[0][0]), parse_complex(rows[0][1]), parse_complex(rows[1][0]),
            parse_complex(rows[1][1])};
}

DensityOperator read_density_json(std::string_view text, double tol) {
    return validate_density(parse_rho_json(text), tol);
}

std::string matrix_to_json(const CMat2 &m) {
    return "[[" + complex_pair(m.m11) + ", " + complex_pair(m.m12) + "], [" + complex_pair(m.m21) + ", " +
           complex_pair(m.m22) + "]]";
}

std::string density_to_json(const DensityOperator &rho) {
    return "{\"rho\": " + matrix_to_json(rho.mat()) + "}";
}

std::string gamma_to_json(const PolarizationMatrix &g) {
    return "{\"c_sq\": " + format_double(g.c_sq) + ", \"gamma\": " + matrix_to_json(g.mat) + "}";
}

std::string stokes_to_json(const StokesVector &s) {
    return "{\"s0\": " + format_double(s.s0) + ", \"s1\": " + format_double(s.s1) +
           ", \"s2\": " + format_double(s.s2) + ", \"s3\": " + format_double(s.s3) + "}";
}

std::string report_to_json(const DualityReport &r) {
    std::ostringstream out;
    out << "{\"alpha1_sq\": " << format_double(r.alpha1_sq)
        << ", \"indistinguishability\": " << format_double(r.indist)
        << ", \"deg_pol\": " << format_double(r.deg_pol)
        << ", \"inequality_margin\": " << format_double(r.inequality_margin)
        << ", \"identity_residual\": " << format_double(r.identity_residual)
        << ", \"best_circumstances\": " << boolean(r.best_circumstances)
        << ", \"degenerate\": " << boolean(r.degenerate) << "}";
    return out.str();
}

std::string shot_record_to_json(const ShotRecord &r) {
    std::ostringstream out;
    out << "{\"theta\": " << format_double(r.setting.theta()) << ", \"delta\": " << format_double(r.setting.delta())
        << ", \"shots\": " << r.shots << ", \"clicks\": " << r.clicks << "}";
    return out.str();
}

std::string tomography_to_json(const TomographyResult &t) {
    std::ostringstream out;
    out << "{\"stokes_hat\": " << stokes_to_json(t.stokes_hat) << ", \"deg_pol_hat\": " << format_double(t.deg_pol_hat)
        << ", \"std_err\": " << format_double(t.std_err) << ", \"records\": [";
    for (std::size_t k = 0; k < t.records.size(); ++k) {
        out << (k ? ", " : "") << shot_record_to_json(t.records[k]);
    }
    out << "]}";
    return out.str();
}

std::string sweep_to_csv(std::span<const DualityReport> reports) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    for (const DualityReport &r : reports) {
        out += format_double(r.alpha1_sq) + ',' + format_double(r.indist) + ',' + format_double(r.deg_pol) + ',' +
               format_double(r.inequality_margin) + ',' + format_double(r.identity_residual) + ',' +
               boolean(r.best_circumstances) + '\n';
    }
    return out;
}

}  // namespace wpipol
