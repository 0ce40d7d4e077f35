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

#include "uavris/baselines.hpp"

#include "uavris/rng.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace uavris {

namespace {

double path_length(const Scenario& s) { return (s.wG - s.q0).norm() + (s.qF - s.wG).norm(); }

// Point at arc length t along q0 -> wG -> qF.
Point2 along_path(const Scenario& s, double t) {
    const double first = (s.wG - s.q0).norm();
    if (t <= first) return first > 0.0 ? Point2(s.q0 + (t / first) * (s.wG - s.q0)) : s.q0;
    const double second = (s.qF - s.wG).norm();
    if (second == 0.0) return s.wG;
    return s.wG + (std::min(t - first, second) / second) * (s.qF - s.wG);
}

}  // namespace

double heuristic_minimum_duration(const Scenario& s) {
    const double steps = std::ceil(path_length(s) / s.max_step() - 1e-12);
    return std::max(steps, 0.0) * s.delta_t;
}

Trajectory heuristic_trajectory(const Scenario& s) {
    validate(s);
    const double D = s.max_step();
    const double first = (s.wG - s.q0).norm();
    const double total = path_length(s);
    if (total > s.N * D * (1.0 + 1e-12))
    {
        char msg[128];
        std::snprintf(msg, sizeof msg, "heuristic trajectory needs T >= %g s to pass over the user",
                      heuristic_minimum_duration(s));
        throw InfeasibleError(msg);
    }

    Eigen::Matrix2Xd q(2, s.N);
    for (int n = 0; n < s.N; ++n) {
        const double outbound = std::min(n * D, first);
        const double inbound = total - static_cast<double>(s.N - n) * D;
        q.col(n) = along_path(s, std::max(outbound, inbound));
    }
    return Trajectory(std::move(q));
}

std::string_view npb_mode_name(NpbMode mode) noexcept {
    switch (mode) {
    case NpbMode::Zero: return "zero";
    case NpbMode::Random: return "random";
    case NpbMode::NoRis: return "no-ris";
    }
    return "random";
}

std::optional<NpbMode> parse_npb_mode(std::string_view name) noexcept {
    if (name == "zero") return NpbMode::Zero;
    if (name == "random") return NpbMode::Random;
    if (name == "no-ris") return NpbMode::NoRis;
    return std::nullopt;
}

std::optional<PhaseSchedule> npb_schedule(NpbMode mode, const Scenario& s, std::uint64_t seed, int draw) {
    if (mode == NpbMode::NoRis) return std::nullopt;
    PhaseSchedule out{Eigen::MatrixXd::Zero(s.N, s.M)};
    if (mode == NpbMode::Random) {
        RandomStream stream(seed, "npb_phase/" + std::to_string(draw));
        for (Eigen::Index n = 0; n < out.theta.rows(); ++n)
            for (Eigen::Index i = 0; i < out.theta.cols(); ++i)
                out.theta(n, i) = 2.0 * std::numbers::pi * stream.uniform();
    }
    return out;
}

double direct_only_rate(const Trajectory& traj, FadingView fading, const Scenario& s) {
    return planning_rate(traj, fading, s, LinkModel::DirectOnly);
}

RateEstimate npb_rate(const Trajectory& traj, FadingView fading, const Scenario& s, NpbMode mode,
                      std::uint64_t seed, int draws) {
    if (mode == NpbMode::NoRis) return {direct_only_rate(traj, fading, s), 0.0, 1};
    if (mode == NpbMode::Zero) return {average_rate(traj, *npb_schedule(mode, s), fading, s), 0.0, 1};
    if (draws < 1) throw std::invalid_argument("npb_rate: draws must be positive");

    std::vector<double> rates(static_cast<std::size_t>(draws));
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(draws)));
    std::vector<std::future<void>> tasks;
    for (unsigned w = 0; w < workers; ++w)
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (auto d = static_cast<std::size_t>(w); d < rates.size(); d += workers)
                rates[d] = average_rate(traj, *npb_schedule(mode, s, seed, static_cast<int>(d)), fading, s);
        }));
    for (auto& t : tasks) t.get();

    const Eigen::Map<const Eigen::ArrayXd> r(rates.data(), draws);
    RateEstimate out;
    out.mean = r.mean();
    out.draws = draws;
    if (draws > 1) out.stderr_mean = std::sqrt((r - out.mean).square().sum() / (draws - 1) / draws);
    return out;
}

ScaOutcome t_npb_optimize(const Scenario& s, FadingView fading, ScaOptions options) {
    options.link = LinkModel::DirectOnly;
    return run_sca(s, fading, options);
}

}  // namespace uavris
