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

#pragma once

#include "uavris/scenario.hpp"

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace uavris {

/// One draw of the random fading quantities of a flight, plus derived
/// magnitudes/phases and the reduced-form amplitudes A and B.
struct ChannelRealization {
    std::complex<double> h_tilde;   // U-G scattering coefficient, CSCG(0, 1)
    Eigen::VectorXcd h_rg;          // R-G channel including path loss
    Eigen::VectorXd h_rg_mag;       // |h_RG,i|
    Eigen::VectorXd h_rg_phase;     // omega_i in [0, 2pi)
    double A = 0.0;                 // sqrt(rho) |h_tilde|
    double B = 0.0;                 // sqrt(rho) sum_i |h_RG,i|
    std::uint64_t seed = 0;

    Eigen::Index elements() const noexcept { return h_rg.size(); }
};

/// Assembles a realization from its random parts and fills the derived fields.
ChannelRealization make_realization(std::complex<double> h_tilde, Eigen::VectorXcd h_rg, double rho,
                                    std::uint64_t seed = 0);

/// Unit-modulus ULA response [exp(-j 2pi (d/lambda) i cos_angle)], i = 0..M-1.
Eigen::VectorXcd ula_response(int M, double d_over_lambda, double cos_angle);

/// Draws h_tilde ~ CSCG(0,1) and the Rician R-G vector
///   h_rg = sqrt(rho d_RG^-alpha) (sqrt(beta/(1+beta)) a(cos_aod) + sqrt(1/(1+beta)) g),
/// with g i.i.d. CSCG(0,1). Streams "h_tilde" and "h_rg_nlos" are derived
/// from `seed`, so the two parts are reproducible independently.
ChannelRealization sample_realization(const Scenario& s, std::uint64_t seed);

/// Extension for sensitivity studies: an independent realization per slot
/// (streams tagged with the slot index). The reference model draws one
/// realization per flight.
std::vector<ChannelRealization> sample_per_slot_realizations(const Scenario& s, std::uint64_t seed);

/// h_UG = sqrt(rho) d_UG^(-kappa/2) h_tilde.
std::complex<double> gain_ug(const Point2& q, const ChannelRealization& r, const Scenario& s);

/// h_UR: sqrt(rho)/d_UR times the ULA response at the arrival cosine.
Eigen::VectorXcd gain_ur(const Point2& q, const Scenario& s);

inline const Eigen::VectorXcd& gain_rg(const ChannelRealization& r) noexcept { return r.h_rg; }

/// Fading seen by a flight: either one realization for all slots or one per
/// slot. `fading_at` picks the realization that applies to slot n.
using FadingView = std::span<const ChannelRealization>;

inline const ChannelRealization& fading_at(FadingView fading, std::size_t n) {
    return fading.size() == 1 ? fading[0] : fading[n];
}

/// Serialized form: complex numbers as [re, im] pairs.
nlohmann::json realization_to_json(const ChannelRealization& r, double rho);
/// Inverse of realization_to_json; derived fields are recomputed.
ChannelRealization realization_from_json(const nlohmann::json& j);

}  // namespace uavris
