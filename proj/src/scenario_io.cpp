// SPDX-License-Identifier: Apache-2.0
//
// uavris: joint UAV trajectory and RIS passive beamforming optimization
// Copyright (C) 2026 The uavris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "uavris/scenario_io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <set>

namespace uavris {

namespace {

using nlohmann::json;

const json& require(const json& config, const char* key) {
    auto it = config.find(key);
    if (it == config.end()) throw ConfigError(key, "required key is missing");
    return *it;
}

double number(const json& value, const char* key) {
    if (!value.is_number()) throw ConfigError(key, "expected a number, got " + std::string(value.type_name()));
    return value.get<double>();
}

double number_field(const json& config, const char* key) { return number(require(config, key), key); }

Point2 point(const json& config, const char* key) {
    const json& v = require(config, key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ConfigError(key, "expected a [x, y] pair of numbers");
    return {v[0].get<double>(), v[1].get<double>()};
}

int integer(const json& config, const char* key) {
    const json& v = require(config, key);
    if (!v.is_number_integer()) {
        if (v.is_number_float()) {
            const double d = v.get<double>();
            if (d == std::floor(d) && std::abs(d) < 1e9) return static_cast<int>(d);
        }
        throw ConfigError(key, "expected an integer");
    }
    return v.get<int>();
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Scenario scenario_from_json(const json& config) {
    if (!config.is_object()) throw ConfigError("", "scenario config must be a JSON object");

    static const std::set<std::string> known = {
        "q0", "qF", "wG", "wR", "zU", "zR", "T", "delta_t", "vmax", "M", "P_dBm", "P_W",
        "sigma2_dBm", "rho_dB", "kappa", "alpha", "beta_dB", "d_over_lambda"};
    for (const auto& [key, _] : config.items())
        if (!known.count(key)) throw ConfigError(key, "unknown key");

    Scenario s;
    s.q0 = point(config, "q0");
    s.qF = point(config, "qF");
    s.wG = point(config, "wG");
    s.wR = point(config, "wR");
    s.zU = number_field(config, "zU");
    s.zR = number_field(config, "zR");
    s.T = number_field(config, "T");
    s.delta_t = number_field(config, "delta_t");
    s.vmax = number_field(config, "vmax");
    s.M = integer(config, "M");

    const bool has_dbm = config.contains("P_dBm");
    const bool has_w = config.contains("P_W");
    if (has_dbm == has_w) throw ConfigError("P_dBm", "exactly one of P_dBm or P_W is required");
    s.P = has_dbm ? dbm_to_watts(number_field(config, "P_dBm")) : number_field(config, "P_W");

    s.sigma2 = dbm_to_watts(number_field(config, "sigma2_dBm"));
    s.rho = db_to_linear(number_field(config, "rho_dB"));
    s.kappa = number_field(config, "kappa");
    s.alpha = number_field(config, "alpha");
    s.beta = db_to_linear(number_field(config, "beta_dB"));
    s.d_over_lambda = config.contains("d_over_lambda") ? number_field(config, "d_over_lambda") : 0.5;

    if (!(s.delta_t > 0.0)) throw ConfigError("delta_t", "must be strictly positive");
    const double slots = s.T / s.delta_t;
    if (!std::isfinite(slots) || slots < 1.0 || slots > 1e7)
        throw ConfigError("T", "T / delta_t must be a positive slot count");
    s.N = static_cast<int>(std::lround(slots));
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file " + path.string());
    json config;
    try {
        config = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("", "malformed JSON in " + path.string() + ": " + e.what());
    }
    Scenario s = scenario_from_json(config);
    validate(s);
    return s;
}

json scenario_to_json(const Scenario& s) {
    json j;
    j["q0"] = {s.q0.x(), s.q0.y()};
    j["qF"] = {s.qF.x(), s.qF.y()};
    j["wG"] = {s.wG.x(), s.wG.y()};
    j["wR"] = {s.wR.x(), s.wR.y()};
    j["zU"] = s.zU;
    j["zR"] = s.zR;
    j["T"] = s.T;
    j["delta_t"] = s.delta_t;
    j["vmax"] = s.vmax;
    j["M"] = s.M;
    j["P_W"] = s.P;
    j["sigma2_dBm"] = 10.0 * std::log10(s.sigma2) + 30.0;
    j["rho_dB"] = 10.0 * std::log10(s.rho);
    j["kappa"] = s.kappa;
    j["alpha"] = s.alpha;
    j["beta_dB"] = 10.0 * std::log10(s.beta);
    j["d_over_lambda"] = s.d_over_lambda;
    return j;
}

std::string canonical_scenario_string(const Scenario& s) {
    // Fixed key order and %.17g so that equal scenarios hash equally.
    std::string out;
    char buf[64];
    auto field = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out += key;
        out += '=';
        out += buf;
        out += ';';
    };
    field("M", s.M);
    field("N", s.N);
    field("P", s.P);
    field("T", s.T);
    field("alpha", s.alpha);
    field("beta", s.beta);
    field("d_over_lambda", s.d_over_lambda);
    field("delta_t", s.delta_t);
    field("kappa", s.kappa);
    field("q0.x", s.q0.x());
    field("q0.y", s.q0.y());
    field("qF.x", s.qF.x());
    field("qF.y", s.qF.y());
    field("rho", s.rho);
    field("sigma2", s.sigma2);
    field("vmax", s.vmax);
    field("wG.x", s.wG.x());
    field("wG.y", s.wG.y());
    field("wR.x", s.wR.x());
    field("wR.y", s.wR.y());
    field("zR", s.zR);
    field("zU", s.zU);
    return out;
}

std::string scenario_hash(const Scenario& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_scenario_string(s))));
    return buf;
}

}  // namespace uavris
