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

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace uavris {

/// dB -> linear power ratio.
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
/// dBm -> watts.
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

/// Parses a scenario config object. Required keys: q0, qF, wG, wR, zU, zR,
/// T, delta_t, vmax, M, one of P_dBm / P_W, sigma2_dBm, rho_dB, kappa,
/// alpha, beta_dB. d_over_lambda is optional (default 0.5). Unknown keys are
/// rejected. Throws ConfigError naming the field; does not run validate().
Scenario scenario_from_json(const nlohmann::json& config);

/// Reads and parses a config file, then validates it.
Scenario load_scenario(const std::filesystem::path& path);

/// Config-style object (dB/dBm units, P given as P_W) that parses back into
/// an equivalent scenario.
nlohmann::json scenario_to_json(const Scenario& s);

/// Canonical linear-unit representation with sorted keys; the input to
/// scenario_hash().
std::string canonical_scenario_string(const Scenario& s);

/// 16 hex digits of FNV-1a over canonical_scenario_string().
std::string scenario_hash(const Scenario& s);

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace uavris
