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

// Independent reference for the trajectory subproblem on tiny instances:
// the surrogate is rebuilt from its definition and maximized exactly over a
// per-slot lattice by dynamic programming along the chain.

#include "uavris/scenario.hpp"

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace uavris::testing {

struct SlotSurrogate {
    double log2_A0 = 0.0;
    double slope_u = 0.0;  // B0 / (A0 ln2)
    double slope_v = 0.0;  // C0 / (A0 ln2)
    double u0 = 0.0;
    double v0 = 0.0;
};

inline SlotSurrogate slot_surrogate(const Point2& q0, double A, double B, const Scenario& s) {
    const double u0 = std::sqrt(s.zU * s.zU + (q0 - s.wG).squaredNorm());
    const double v0 = std::sqrt((s.zU - s.zR) * (s.zU - s.zR) + (q0 - s.wR).squaredNorm());
    const double g0 = s.P / s.sigma2;
    const double k = s.kappa;
    const double a0 = 1 + g0 * (A * A / std::pow(u0, k) + B * B / (v0 * v0) + 2 * A * B / (std::pow(u0, k / 2) * v0));
    const double b0 = -g0 * (k * A * A / std::pow(u0, k + 1) + k * A * B / (v0 * std::pow(u0, k / 2 + 1)));
    const double c0 = -g0 * (2 * B * B / (v0 * v0 * v0) + 2 * A * B / (std::pow(u0, k / 2) * v0 * v0));
    return {std::log2(a0), b0 / (a0 * std::numbers::ln2), c0 / (a0 * std::numbers::ln2), u0, v0};
}

/// Surrogate of one slot at q with the slacks at their smallest admissible
/// values u = (d_UG^2 + u0^2)/(2 u0), v = (d_UR^2 + v0^2)/(2 v0).
inline double slot_value(const SlotSurrogate& c, const Point2& q, const Scenario& s) {
    const double dug2 = s.zU * s.zU + (q - s.wG).squaredNorm();
    const double dur2 = (s.zU - s.zR) * (s.zU - s.zR) + (q - s.wR).squaredNorm();
    const double u = (dug2 + c.u0 * c.u0) / (2 * c.u0);
    const double v = (dur2 + c.v0 * c.v0) / (2 * c.v0);
    return c.log2_A0 + c.slope_u * (u - c.u0) + c.slope_v * (v - c.v0);
}

struct GridOracleResult {
    double value = -std::numeric_limits<double>::infinity();  // best surrogate, summed over slots
    Eigen::Matrix2Xd trajectory;
    std::vector<double> cell_diagonal;  // per slot
};

/// Slot 0 is pinned to q0. Slot n >= 1 is searched on a grid x grid lattice
/// spanning the square of half-width n D around q0.
inline GridOracleResult grid_oracle(const Scenario& s, const Eigen::Matrix2Xd& expansion, const Eigen::VectorXd& A,
                                    const Eigen::VectorXd& B, int grid = 41) {
    const int N = static_cast<int>(expansion.cols());
    const double D = s.vmax * s.delta_t;
    const double tol = 1e-9;
    const double minus_inf = -std::numeric_limits<double>::infinity();

    std::vector<SlotSurrogate> coeff;
    for (int n = 0; n < N; ++n) coeff.push_back(slot_surrogate(expansion.col(n), A[n], B[n], s));

    GridOracleResult out;
    out.cell_diagonal.assign(static_cast<std::size_t>(N), 0.0);
    std::vector<Eigen::Matrix2Xd> nodes(static_cast<std::size_t>(N));
    nodes[0] = s.q0;
    for (int n = 1; n < N; ++n) {
        const double half = n * D;
        const double h = 2 * half / (grid - 1);
        out.cell_diagonal[static_cast<std::size_t>(n)] = h * std::sqrt(2.0);
        nodes[static_cast<std::size_t>(n)].resize(2, grid * grid);
        for (int a = 0; a < grid; ++a)
            for (int b = 0; b < grid; ++b)
                nodes[static_cast<std::size_t>(n)].col(a * grid + b) = s.q0 + Point2(-half + a * h, -half + b * h);
    }

    // value[n][j]: best surrogate of slots 0..n ending at node j of slot n.
    std::vector<Eigen::VectorXd> value(static_cast<std::size_t>(N));
    std::vector<Eigen::VectorXi> parent(static_cast<std::size_t>(N));
    value[0] = Eigen::VectorXd::Constant(1, slot_value(coeff[0], s.q0, s));
    for (int n = 1; n < N; ++n) {
        const auto& here = nodes[static_cast<std::size_t>(n)];
        const auto& prev = nodes[static_cast<std::size_t>(n - 1)];
        value[static_cast<std::size_t>(n)] = Eigen::VectorXd::Constant(here.cols(), minus_inf);
        parent[static_cast<std::size_t>(n)] = Eigen::VectorXi::Constant(here.cols(), -1);
        for (Eigen::Index j = 0; j < here.cols(); ++j) {
            if (n == N - 1 && (here.col(j) - s.qF).norm() > D + tol) continue;
            double best = minus_inf;
            int arg = -1;
            for (Eigen::Index i = 0; i < prev.cols(); ++i) {
                const double v = value[static_cast<std::size_t>(n - 1)][i];
                if (v > best && (here.col(j) - prev.col(i)).norm() <= D + tol) {
                    best = v;
                    arg = static_cast<int>(i);
                }
            }
            if (arg < 0) continue;
            value[static_cast<std::size_t>(n)][j] = best + slot_value(coeff[static_cast<std::size_t>(n)], here.col(j), s);
            parent[static_cast<std::size_t>(n)][j] = arg;
        }
    }

    Eigen::Index last;
    out.value = value.back().maxCoeff(&last);
    out.trajectory.resize(2, N);
    for (int n = N - 1; n >= 1; --n) {
        out.trajectory.col(n) = nodes[static_cast<std::size_t>(n)].col(last);
        last = parent[static_cast<std::size_t>(n)][last];
    }
    out.trajectory.col(0) = s.q0;
    return out;
}

/// Largest change of the summed surrogate when every free slot moves by at
/// most one cell diagonal from `traj`.
inline double one_cell_bound(const Scenario& s, const Eigen::Matrix2Xd& expansion, const Eigen::VectorXd& A,
                             const Eigen::VectorXd& B, const Eigen::Matrix2Xd& traj,
                             const std::vector<double>& cell_diagonal) {
    double bound = 0.0;
    for (Eigen::Index n = 1; n < traj.cols(); ++n) {
        const SlotSurrogate c = slot_surrogate(expansion.col(n), A[n], B[n], s);
        const double w1 = c.slope_u / (2 * c.u0);
        const double w2 = c.slope_v / (2 * c.v0);
        const Point2 q = traj.col(n);
        const double grad = (2 * w1 * (q - s.wG) + 2 * w2 * (q - s.wR)).norm();
        const double curvature = 2 * std::abs(w1 + w2);
        const double d = cell_diagonal[static_cast<std::size_t>(n)];
        bound += grad * d + 0.5 * curvature * d * d;
    }
    return bound;
}

}  // namespace uavris::testing
