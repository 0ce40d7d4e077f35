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

#include "uavris/channel.hpp"

#include "uavris/beamforming.hpp"
#include "uavris/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uavris {

ChannelRealization make_realization(std::complex<double> h_tilde, Eigen::VectorXcd h_rg, double rho,
                                    std::uint64_t seed) {
    ChannelRealization r;
    r.h_tilde = h_tilde;
    r.h_rg = std::move(h_rg);
    r.h_rg_mag = r.h_rg.cwiseAbs();
    r.h_rg_phase.resize(r.h_rg.size());
    for (Eigen::Index i = 0; i < r.h_rg.size(); ++i) r.h_rg_phase[i] = wrap_phase(std::arg(r.h_rg[i]));
    r.A = std::sqrt(rho) * std::abs(h_tilde);
    r.B = std::sqrt(rho) * r.h_rg_mag.sum();
    r.seed = seed;
    return r;
}

Eigen::VectorXcd ula_response(int M, double d_over_lambda, double cos_angle) {
    Eigen::VectorXcd a(M);
    const double step = -2.0 * std::numbers::pi * d_over_lambda * cos_angle;
    for (int i = 0; i < M; ++i) a[i] = std::polar(1.0, step * i);
    return a;
}

namespace {

ChannelRealization draw(const Scenario& s, std::uint64_t seed, const std::string& suffix) {
    RandomStream direct(seed, "h_tilde" + suffix);
    const std::complex<double> h_tilde = direct.cscg();

    RandomStream scatter(seed, "h_rg_nlos" + suffix);
    Eigen::VectorXcd nlos(s.M);
    for (int i = 0; i < s.M; ++i) nlos[i] = scatter.cscg();

    const double path_loss = std::sqrt(s.rho * std::pow(distance_ris_user(s), -s.alpha));
    const Eigen::VectorXcd los = ula_response(s.M, s.d_over_lambda, cos_aod_ris_user(s));
    const Eigen::VectorXcd h_rg =
        path_loss * (std::sqrt(s.beta / (1.0 + s.beta)) * los + std::sqrt(1.0 / (1.0 + s.beta)) * nlos);
    return make_realization(h_tilde, h_rg, s.rho, seed);
}

}  // namespace

ChannelRealization sample_realization(const Scenario& s, std::uint64_t seed) { return draw(s, seed, ""); }

std::vector<ChannelRealization> sample_per_slot_realizations(const Scenario& s, std::uint64_t seed) {
    std::vector<ChannelRealization> out;
    out.reserve(static_cast<std::size_t>(s.N));
    for (int n = 0; n < s.N; ++n) out.push_back(draw(s, seed, "/slot/" + std::to_string(n)));
    return out;
}

std::complex<double> gain_ug(const Point2& q, const ChannelRealization& r, const Scenario& s) {
    return std::sqrt(s.rho) * std::pow(distance_uav_user(q, s), -0.5 * s.kappa) * r.h_tilde;
}

Eigen::VectorXcd gain_ur(const Point2& q, const Scenario& s) {
    return (std::sqrt(s.rho) / distance_uav_ris(q, s)) * ula_response(s.M, s.d_over_lambda, cos_aoa_uav_ris(q, s));
}

nlohmann::json realization_to_json(const ChannelRealization& r, double rho) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["rho"] = rho;
    j["h_tilde"] = {r.h_tilde.real(), r.h_tilde.imag()};
    nlohmann::json h = nlohmann::json::array();
    for (Eigen::Index i = 0; i < r.h_rg.size(); ++i) h.push_back({r.h_rg[i].real(), r.h_rg[i].imag()});
    j["h_rg"] = std::move(h);
    j["A"] = r.A;
    j["B"] = r.B;
    return j;
}

ChannelRealization realization_from_json(const nlohmann::json& j) {
    auto complex_of = [](const nlohmann::json& v, const char* field) {
        if (!v.is_array() || v.size() != 2) throw ConfigError(field, "complex numbers must be [re, im] pairs");
        return std::complex<double>(v[0].get<double>(), v[1].get<double>());
    };
    try {
        const auto& h = j.at("h_rg");
        Eigen::VectorXcd h_rg(static_cast<Eigen::Index>(h.size()));
        for (std::size_t i = 0; i < h.size(); ++i) h_rg[static_cast<Eigen::Index>(i)] = complex_of(h[i], "h_rg");
        return make_realization(complex_of(j.at("h_tilde"), "h_tilde"), std::move(h_rg), j.at("rho").get<double>(),
                                j.value("seed", std::uint64_t{0}));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("realization", e.what());
    }
}

}  // namespace uavris
