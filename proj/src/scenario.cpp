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

#include "uavris/scenario.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace uavris {

Scenario reference_scenario(double T) { return with_duration(Scenario{}, T); }

Scenario with_duration(const Scenario& s, double T) {
    Scenario out = s;
    out.T = T;
    out.N = static_cast<int>(std::lround(T / s.delta_t));
    return out;
}

namespace {

void require_positive(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw ConfigError(field, "must be finite and strictly positive, got " + std::to_string(value));
}

void require_finite(const Point2& p, const char* field) {
    if (!p.allFinite()) throw ConfigError(field, "coordinates must be finite");
}

}  // namespace

void validate(const Scenario& s) {
    require_finite(s.q0, "q0");
    require_finite(s.qF, "qF");
    require_finite(s.wG, "wG");
    require_finite(s.wR, "wR");
    require_positive(s.zR, "zR");
    require_positive(s.zU, "zU");
    if (!(s.zU > s.zR)) throw ConfigError("zU", "UAV altitude must exceed RIS altitude");
    require_positive(s.T, "T");
    require_positive(s.delta_t, "delta_t");
    require_positive(s.vmax, "vmax");
    require_positive(s.P, "P");
    require_positive(s.sigma2, "sigma2");
    require_positive(s.rho, "rho");
    require_positive(s.kappa, "kappa");
    require_positive(s.alpha, "alpha");
    require_positive(s.beta, "beta");
    require_positive(s.d_over_lambda, "d_over_lambda");
    if (s.M < 1) throw ConfigError("M", "at least one RIS element is required");
    if (s.N < 2) throw ConfigError("T", "T / delta_t must give at least two slots");
    if (std::abs(s.N * s.delta_t - s.T) > 1e-9 * s.T)
        throw ConfigError("T", "T must be an integer multiple of delta_t");

    const double reach = s.N * s.max_step();
    const double span = (s.qF - s.q0).norm();
    if (span > reach)
        throw InfeasibleError("qF is " + std::to_string(span) + " m from q0 but at most " +
                              std::to_string(reach) + " m can be covered in " + std::to_string(s.N) +
                              " slots");
}

Trajectory straight_line(const Scenario& s) {
    Eigen::Matrix2Xd q(2, s.N);
    for (int n = 0; n < s.N; ++n)
        q.col(n) = s.q0 + (static_cast<double>(n) / s.N) * (s.qF - s.q0);
    return Trajectory(std::move(q));
}

double distance_uav_user(const Point2& q, const Scenario& s) {
    return std::sqrt(s.zU * s.zU + (q - s.wG).squaredNorm());
}

double distance_uav_ris(const Point2& q, const Scenario& s) {
    const double dz = s.zU - s.zR;
    return std::sqrt(dz * dz + (q - s.wR).squaredNorm());
}

double distance_ris_user(const Scenario& s) {
    return std::sqrt(s.zR * s.zR + (s.wR - s.wG).squaredNorm());
}

double cos_aoa_uav_ris(const Point2& q, const Scenario& s) {
    const double d = distance_uav_ris(q, s);
    if (d == 0.0) throw std::domain_error("cos_aoa_uav_ris: UAV coincides with the RIS reference element");
    return (s.wR.x() - q.x()) / d;
}

double cos_aod_ris_user(const Scenario& s) {
    const double d = distance_ris_user(s);
    if (d == 0.0) throw std::domain_error("cos_aod_ris_user: user coincides with the RIS reference element");
    return (s.wG.x() - s.wR.x()) / d;
}

std::vector<MobilityViolation> check_mobility(const Trajectory& traj, const Scenario& s, double tolerance) {
    std::vector<MobilityViolation> out;
    const double D = s.max_step();
    const std::size_t N = traj.size();
    if (N == 0) {
        out.push_back({MobilityConstraint::InitialPosition, 0, std::numeric_limits<double>::infinity()});
        return out;
    }
    const double start_gap = (traj[0] - s.q0).norm();
    if (start_gap > tolerance) out.push_back({MobilityConstraint::InitialPosition, 0, start_gap});
    for (std::size_t n = 0; n + 1 < N; ++n) {
        const double step = (traj[n + 1] - traj[n]).norm();
        if (step > D + tolerance) out.push_back({MobilityConstraint::Step, n, step - D});
    }
    const double final_gap = (traj[N - 1] - s.qF).norm();
    if (final_gap > D + tolerance) out.push_back({MobilityConstraint::FinalReach, N - 1, final_gap - D});
    return out;
}

}  // namespace uavris
