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

#include "uavris/beamforming.hpp"
#include "uavris/channel.hpp"
#include "uavris/sca.hpp"
#include "uavris/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace uavris {

/// Fly to wG at full speed, hover there, and leave at full speed so that
/// q[N] reaches qF. Throws InfeasibleError (naming the minimum T) when
/// |q0 - wG| + |wG - qF| > N D.
Trajectory heuristic_trajectory(const Scenario& s);

/// Minimum flight time of the heuristic path, rounded up to whole slots [s].
double heuristic_minimum_duration(const Scenario& s);

/// Phase policies without passive beamforming.
enum class NpbMode {
    Zero,    // theta = 0 everywhere
    Random,  // i.i.d. uniform phases per (slot, element)
    NoRis,   // reflected path removed; direct link only
};

std::string_view npb_mode_name(NpbMode mode) noexcept;
std::optional<NpbMode> parse_npb_mode(std::string_view name) noexcept;

inline constexpr int kDefaultNpbDraws = 100;

/// Schedule for one NPB draw; empty for NoRis. Random draws use the stream
/// tagged "npb_phase/<draw>".
std::optional<PhaseSchedule> npb_schedule(NpbMode mode, const Scenario& s, std::uint64_t seed = 0, int draw = 0);

/// Average rate with the direct link only.
double direct_only_rate(const Trajectory& traj, FadingView fading, const Scenario& s);

struct RateEstimate {
    double mean = 0.0;
    double stderr_mean = 0.0;  // zero for deterministic modes
    int draws = 1;
};

/// Average rate of a trajectory under an NPB policy. Random mode averages
/// `draws` phase draws, evaluated concurrently.
RateEstimate npb_rate(const Trajectory& traj, FadingView fading, const Scenario& s, NpbMode mode,
                      std::uint64_t seed, int draws = kDefaultNpbDraws);

/// Trajectory-only design: run_sca planning on the direct link (B = 0).
ScaOutcome t_npb_optimize(const Scenario& s, FadingView fading, ScaOptions options = {});

}  // namespace uavris
