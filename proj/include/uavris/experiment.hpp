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

#include "uavris/baselines.hpp"
#include "uavris/beamforming.hpp"
#include "uavris/channel.hpp"
#include "uavris/lemma_verification.hpp"
#include "uavris/sca.hpp"
#include "uavris/scenario.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uavris {

enum class Algorithm { Jtpb, TNpb, HtPb, HtNpb };

inline constexpr std::array<Algorithm, 4> kAllAlgorithms{Algorithm::Jtpb, Algorithm::TNpb, Algorithm::HtPb,
                                                         Algorithm::HtNpb};

/// "jtpb", "t_npb", "ht_pb", "ht_npb".
std::string_view algorithm_name(Algorithm a) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct ExperimentOptions {
    std::uint64_t seed = 1;
    NpbMode npb_mode = NpbMode::Random;
    int npb_draws = kDefaultNpbDraws;
    double epsilon = 1e-4;
    int max_iter = 200;
    /// Independent fading per slot instead of one draw per flight.
    bool per_slot_fading = false;
    /// Replayed realization; replaces sampling when set.
    std::optional<ChannelRealization> realization;
};

struct ExperimentResult {
    Algorithm algorithm = Algorithm::Jtpb;
    std::uint64_t seed = 0;
    std::string scenario_hash;
    double T_s = 0.0;
    double avg_rate = 0.0;
    double stderr_rate = 0.0;
    Trajectory trajectory;
    std::optional<PhaseSchedule> schedule;  // set for the beamforming algorithms
    std::vector<double> objective_log;      // SCA algorithms only
    std::vector<ScaIteration> log;
    int iterations = 0;
    bool converged = true;
    double wall_seconds = 0.0;
};

/// Fading used by every algorithm of one experiment.
std::vector<ChannelRealization> experiment_fading(const Scenario& s, const ExperimentOptions& options);

ExperimentResult run_algorithm(Algorithm a, const Scenario& s, FadingView fading, const ExperimentOptions& options);

// Output files. Slots and elements are numbered from 1. Trajectories are
// checked against the mobility constraints before writing (InfeasibleError).
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj, const Scenario& s);
void write_phases_csv(const std::filesystem::path& path, const PhaseSchedule& schedule);
void write_iterations_csv(const std::filesystem::path& path, const ExperimentResult& result);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

/// Wall-clock free description of a result.
nlohmann::json summary_json(const ExperimentResult& result, const ExperimentOptions& options);

/// Writes trajectory.csv, phases.csv (beamforming algorithms) and
/// iterations.csv (SCA algorithms) into `dir`.
void write_result_files(const std::filesystem::path& dir, const ExperimentResult& result, const Scenario& s);

/// JT&PB end to end. Writes trajectory.csv, phases.csv, iterations.csv,
/// summary.json, realization.json and timing.json into `out_dir`.
ExperimentResult cmd_optimize(const Scenario& s, const ExperimentOptions& options,
                              const std::filesystem::path& out_dir);

/// Runs the selected algorithms concurrently on one realization. Writes one
/// subdirectory per algorithm plus comparison.csv
/// (algorithm,avg_rate_bps_hz,stderr,iterations,converged), summary.json,
/// realization.json and timing.json.
std::vector<ExperimentResult> cmd_benchmark(const Scenario& s, const std::vector<Algorithm>& algorithms,
                                            const ExperimentOptions& options,
                                            const std::filesystem::path& out_dir);

struct SweepRow {
    double T_s = 0.0;
    Algorithm algorithm = Algorithm::Jtpb;
    double avg_rate = 0.0;
    double stderr_rate = 0.0;
};

/// Every algorithm at every duration, durations run concurrently. Writes
/// sweep.csv (T_s,algorithm,avg_rate_bps_hz,stderr), per-point result
/// directories T_<T>/<algorithm>/, summary.json and timing.json.
std::vector<SweepRow> cmd_sweep_T(const Scenario& s, const std::vector<double>& T_values,
                                  const ExperimentOptions& options, const std::filesystem::path& out_dir);

/// Runs the convexity sweep and writes lemma_report.json when `out_dir` is set.
LemmaSweepReport cmd_verify_lemma(const LemmaSweepOptions& options,
                                  const std::optional<std::filesystem::path>& out_dir);

}  // namespace uavris
