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
#include "uavris/scenario.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace uavris {

/// Slack variables u >= d_UG and v >= d_UR, one entry per slot.
struct SlackVariables {
    Eigen::VectorXd u;
    Eigen::VectorXd v;
};

/// Tight slacks: u[n] = d_UG(q[n]), v[n] = d_UR(q[n]).
SlackVariables slack_from_trajectory(const Trajectory& traj, const Scenario& s);

/// Per-slot amplitudes of the phase-aligned composite gain A/u^(k/2) + B/v.
struct ReducedChannel {
    Eigen::VectorXd A;
    Eigen::VectorXd B;
};

ReducedChannel reduce(FadingView fading, std::size_t slots);

/// First-order expansion of log2(1 + g0 (A/u^(k/2) + B/v)^2) around (u0, v0):
///   A0 = 1 + g0 [A^2/u0^k + B^2/v0^2 + 2AB/(u0^(k/2) v0)]
///   B0 = -g0 [k A^2/u0^(k+1) + k AB/(v0 u0^(k/2+1))]
///   C0 = -g0 [2 B^2/v0^3 + 2AB/(u0^(k/2) v0^2)]
struct SurrogateCoeffs {
    Eigen::VectorXd A0;
    Eigen::VectorXd B0;
    Eigen::VectorXd C0;
    double gamma0 = 0.0;
};

/// Throws std::domain_error if any expansion point is not strictly positive.
SurrogateCoeffs taylor_coeffs(const Eigen::VectorXd& u0, const Eigen::VectorXd& v0, const ReducedChannel& channel,
                              double gamma0, double kappa);
SurrogateCoeffs taylor_coeffs(const Eigen::VectorXd& u0, const Eigen::VectorXd& v0, double A, double B,
                              double gamma0, double kappa);

/// sum_n log2 A0 + B0 (u - u0)/(A0 ln2) + C0 (v - v0)/(A0 ln2). A global
/// under-estimator of slack_objective() with equality at (u0, v0).
double surrogate_lower_bound(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Eigen::VectorXd& u0,
                             const Eigen::VectorXd& v0, const SurrogateCoeffs& coeffs);

/// sum_n log2(1 + g0 (A/u^(k/2) + B/v)^2).
double slack_objective(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const ReducedChannel& channel,
                       double gamma0, double kappa);

/// Weights of the surrogate after eliminating the slacks: the objective is
/// sum_n c1[n] |q[n] - wG|^2 + c2[n] |q[n] - wR|^2 + const, with
/// c1 = B0/(2 u0 A0 ln2) <= 0 and c2 = C0/(2 v0 A0 ln2) <= 0.
struct EliminatedWeights {
    Eigen::VectorXd c1;
    Eigen::VectorXd c2;
};

EliminatedWeights eliminated_weights(const SurrogateCoeffs& coeffs, const SlackVariables& expansion);

/// Smallest slacks allowed by the linearized constraints:
///   u = (d_UG^2 + u0^2) / (2 u0),  v = (d_UR^2 + v0^2) / (2 v0).
SlackVariables eliminated_slacks(const Trajectory& traj, const SlackVariables& expansion, const Scenario& s);

enum class SubproblemMethod {
    /// Cyclic single-slot block-coordinate ascent from the expansion trajectory.
    BlockCoordinate,
    /// ADMM on the whole chain, repaired to feasibility, then block-coordinate
    /// polishing.
    WarmStartedBlockCoordinate,
};

struct SubproblemOptions {
    /// Stop once a sweep improves the surrogate by less than this (bits, summed over slots).
    double tolerance = 1e-8;
    int max_sweeps = 200;
    SubproblemMethod method = SubproblemMethod::WarmStartedBlockCoordinate;
    int admm_max_iterations = 20000;
};

struct SubproblemResult {
    Trajectory trajectory;
    SlackVariables slack;            // eliminated (not re-tightened) slacks
    double surrogate_value = 0.0;    // surrogate_lower_bound at the solution
    double surrogate_at_start = 0.0; // same, at the expansion trajectory
    int sweeps = 0;
    int admm_iterations = 0;
};

/// Maximizes the convex surrogate around `traj0` subject to the mobility
/// constraints. Throws InfeasibleError if traj0 is infeasible and
/// std::runtime_error on non-finite coefficients.
SubproblemResult solve_subproblem(const Trajectory& traj0, const ReducedChannel& channel, const Scenario& s,
                                  const SubproblemOptions& options = {});
SubproblemResult solve_subproblem(const Trajectory& traj0, const ChannelRealization& r, const Scenario& s,
                                  const SubproblemOptions& options = {});

/// The eliminated surrogate relative to the expansion trajectory:
/// sum_n c1 (|q - wG|^2 - |q0 - wG|^2) + c2 (|q - wR|^2 - |q0 - wR|^2).
double eliminated_objective_gain(const Trajectory& traj, const Trajectory& expansion, const EliminatedWeights& w,
                                 const Scenario& s);

/// Which links the optimizer sees. DirectOnly plans as if the RIS were absent
/// (B = 0) and evaluates the direct-link rate.
enum class LinkModel { Joint, DirectOnly };

struct ScaOptions {
    double epsilon = 1e-4;
    int max_iter = 200;
    std::optional<Trajectory> init;  // straight line when empty
    SubproblemOptions subproblem;
    LinkModel link = LinkModel::Joint;
};

struct ScaIteration {
    int iter = 0;
    double avg_rate = 0.0;    // true average rate after the update
    double surrogate = 0.0;   // surrogate value / N (bps/Hz)
    double max_step_m = 0.0;  // largest per-slot displacement from the previous iterate
    int sweeps = 0;
    /// max_n max(|u_sub - d_UG|/u_sub, |v_sub - d_UR|/v_sub) for the
    /// subproblem's eliminated slacks; vanishes as the iterates converge.
    double subproblem_slack_gap = 0.0;
};

struct ScaOutcome {
    Trajectory trajectory;
    PhaseSchedule schedule;
    /// Average rate per outer iteration; entry 0 is the initial trajectory.
    std::vector<double> objective_log;
    std::vector<ScaIteration> log;
    /// Accepted iterates and their (re-tightened) slack expansion points.
    std::vector<Trajectory> iterates;
    std::vector<SlackVariables> accepted_slacks;
    int iterations = 0;
    bool converged = false;
};

/// Alternates the trajectory subproblem with the closed-form phases until
/// the relative improvement of the average rate drops below epsilon.
ScaOutcome run_sca(const Scenario& s, FadingView fading, const ScaOptions& options = {});
inline ScaOutcome run_sca(const Scenario& s, const ChannelRealization& r, const ScaOptions& options = {}) {
    return run_sca(s, FadingView(&r, 1), options);
}

/// Average rate that run_sca optimizes for the given link model.
double planning_rate(const Trajectory& traj, FadingView fading, const Scenario& s, LinkModel link);

}  // namespace uavris
