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

#include "uavris/sca.hpp"

#include "uavris/disc_projection.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavris {

SlackVariables slack_from_trajectory(const Trajectory& traj, const Scenario& s) {
    const auto N = static_cast<Eigen::Index>(traj.size());
    SlackVariables out{Eigen::VectorXd(N), Eigen::VectorXd(N)};
    for (Eigen::Index n = 0; n < N; ++n) {
        out.u[n] = distance_uav_user(traj[n], s);
        out.v[n] = distance_uav_ris(traj[n], s);
    }
    return out;
}

ReducedChannel reduce(FadingView fading, std::size_t slots) {
    ReducedChannel out{Eigen::VectorXd(static_cast<Eigen::Index>(slots)), Eigen::VectorXd(static_cast<Eigen::Index>(slots))};
    for (std::size_t n = 0; n < slots; ++n) {
        const auto& r = fading_at(fading, n);
        out.A[static_cast<Eigen::Index>(n)] = r.A;
        out.B[static_cast<Eigen::Index>(n)] = r.B;
    }
    return out;
}

SurrogateCoeffs taylor_coeffs(const Eigen::VectorXd& u0, const Eigen::VectorXd& v0, const ReducedChannel& channel,
                              double gamma0, double kappa) {
    if (u0.size() != v0.size() || channel.A.size() != u0.size() || channel.B.size() != u0.size())
        throw std::invalid_argument("taylor_coeffs: size mismatch");
    if ((u0.array() <= 0.0).any() || (v0.array() <= 0.0).any())
        throw std::domain_error("taylor_coeffs: expansion points must be strictly positive");

    const Eigen::ArrayXd u = u0.array();
    const Eigen::ArrayXd v = v0.array();
    const Eigen::ArrayXd A = channel.A.array();
    const Eigen::ArrayXd B = channel.B.array();
    const Eigen::ArrayXd uk = u.pow(-kappa);        // u0^-k
    const Eigen::ArrayXd uh = u.pow(-0.5 * kappa);  // u0^(-k/2)

    SurrogateCoeffs c;
    c.gamma0 = gamma0;
    c.A0 = (1.0 + gamma0 * (A.square() * uk + B.square() / v.square() + 2.0 * A * B * uh / v)).matrix();
    c.B0 = (-gamma0 * (kappa * A.square() * uk / u + kappa * A * B * uh / (v * u))).matrix();
    c.C0 = (-gamma0 * (2.0 * B.square() / v.cube() + 2.0 * A * B * uh / v.square())).matrix();
    return c;
}

SurrogateCoeffs taylor_coeffs(const Eigen::VectorXd& u0, const Eigen::VectorXd& v0, double A, double B,
                              double gamma0, double kappa) {
    const ReducedChannel channel{Eigen::VectorXd::Constant(u0.size(), A), Eigen::VectorXd::Constant(u0.size(), B)};
    return taylor_coeffs(u0, v0, channel, gamma0, kappa);
}

double surrogate_lower_bound(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const Eigen::VectorXd& u0,
                             const Eigen::VectorXd& v0, const SurrogateCoeffs& c) {
    const double ln2 = std::numbers::ln2;
    const Eigen::ArrayXd A0 = c.A0.array();
    return (A0.log() / ln2 + c.B0.array() * (u - u0).array() / (A0 * ln2) +
            c.C0.array() * (v - v0).array() / (A0 * ln2))
        .sum();
}

double slack_objective(const Eigen::VectorXd& u, const Eigen::VectorXd& v, const ReducedChannel& channel,
                       double gamma0, double kappa) {
    const Eigen::ArrayXd g = channel.A.array() * u.array().pow(-0.5 * kappa) + channel.B.array() / v.array();
    return (gamma0 * g.square()).log1p().sum() / std::numbers::ln2;
}

EliminatedWeights eliminated_weights(const SurrogateCoeffs& c, const SlackVariables& expansion) {
    const Eigen::ArrayXd denom = c.A0.array() * std::numbers::ln2;
    return {(c.B0.array() / (2.0 * expansion.u.array() * denom)).matrix(),
            (c.C0.array() / (2.0 * expansion.v.array() * denom)).matrix()};
}

SlackVariables eliminated_slacks(const Trajectory& traj, const SlackVariables& expansion, const Scenario& s) {
    const SlackVariables tight = slack_from_trajectory(traj, s);
    return {((tight.u.array().square() + expansion.u.array().square()) / (2.0 * expansion.u.array())).matrix(),
            ((tight.v.array().square() + expansion.v.array().square()) / (2.0 * expansion.v.array())).matrix()};
}

double eliminated_objective_gain(const Trajectory& traj, const Trajectory& expansion, const EliminatedWeights& w,
                                 const Scenario& s) {
    double total = 0.0;
    for (std::size_t n = 0; n < traj.size(); ++n) {
        const auto i = static_cast<Eigen::Index>(n);
        total += w.c1[i] * ((traj[n] - s.wG).squaredNorm() - (expansion[n] - s.wG).squaredNorm()) +
                 w.c2[i] * ((traj[n] - s.wR).squaredNorm() - (expansion[n] - s.wR).squaredNorm());
    }
    return total;
}

namespace {

// The block objective of slot n is (c1 + c2) |q - p|^2 + const with the
// attractor p = (c1 wG + c2 wR) / (c1 + c2); returns false when the slot
// carries no weight.
bool slot_attractor(const EliminatedWeights& w, Eigen::Index n, const Scenario& s, Point2& p, double& weight) {
    weight = -(w.c1[n] + w.c2[n]);
    if (!(weight > 0.0)) return false;
    p = (w.c1[n] * s.wG + w.c2[n] * s.wR) / (w.c1[n] + w.c2[n]);
    return true;
}

int block_coordinate_ascent(Trajectory& traj, const Trajectory& expansion, const EliminatedWeights& w,
                            const Scenario& s, const SubproblemOptions& options) {
    const auto N = static_cast<Eigen::Index>(traj.size());
    const double D = s.max_step();
    double value = eliminated_objective_gain(traj, expansion, w, s);
    int sweeps = 0;
    while (sweeps < options.max_sweeps) {
        ++sweeps;
        for (Eigen::Index n = 1; n < N; ++n) {
            Point2 p;
            double weight;
            if (!slot_attractor(w, n, s, p, weight)) continue;
            const Disc behind{traj.q.col(n - 1), D};
            const Disc ahead = n + 1 < N ? Disc{traj.q.col(n + 1), D} : Disc{s.qF, D};
            traj.q.col(n) = project_onto_disc_intersection(p, behind, ahead);
        }
        const double next = eliminated_objective_gain(traj, expansion, w, s);
        const double improvement = next - value;
        value = next;
        if (improvement < options.tolerance) break;
    }
    return sweeps;
}

// Largest t in [0, 1] such that x0 + t (x1 - x0) satisfies every step
// constraint, given that x0 does.
double feasible_fraction(const Trajectory& x0, const Trajectory& x1, const Scenario& s) {
    const double D = s.max_step();
    const auto N = static_cast<Eigen::Index>(x0.size());
    double t = 1.0;
    auto limit = [&](const Point2& a, const Point2& d) {
        const double dd = d.squaredNorm();
        if (dd == 0.0) return;
        const double ad = a.dot(d);
        const double c = std::min(0.0, a.squaredNorm() - D * D);
        const double root = (-ad + std::sqrt(ad * ad - dd * c)) / dd;
        t = std::min(t, std::max(0.0, root));
    };
    for (Eigen::Index n = 0; n + 1 < N; ++n)
        limit(x0.q.col(n + 1) - x0.q.col(n), (x1.q.col(n + 1) - x1.q.col(n)) - (x0.q.col(n + 1) - x0.q.col(n)));
    limit(s.qF - x0.q.col(N - 1), -(x1.q.col(N - 1) - x0.q.col(N - 1)));
    return t;
}

// ADMM for  min sum_j w_j |X_j - p_j|^2  s.t. every step of the chain
// q0, X_1, ..., X_{N-1}, qF has length <= D. Steps are split off as
// Z = L X + b and projected onto the D-ball; the X-update is a symmetric
// tridiagonal solve shared by both coordinates.
Trajectory admm_chain(const Trajectory& start, const Eigen::VectorXd& weight, const Eigen::Matrix2Xd& target,
                      const Scenario& s, int max_iterations, int& iterations) {
    const Eigen::Index m = static_cast<Eigen::Index>(start.size()) - 1;  // free points
    const double D = s.max_step();

    auto apply_L = [&](const Eigen::Matrix2Xd& X) {
        Eigen::Matrix2Xd Z(2, m + 1);
        Z.col(0) = X.col(0);
        for (Eigen::Index c = 1; c < m; ++c) Z.col(c) = X.col(c) - X.col(c - 1);
        Z.col(m) = -X.col(m - 1);
        return Z;
    };
    auto apply_Lt = [&](const Eigen::Matrix2Xd& V) {
        Eigen::Matrix2Xd X(2, m);
        for (Eigen::Index j = 0; j < m; ++j) X.col(j) = V.col(j) - V.col(j + 1);
        return X;
    };
    Eigen::Matrix2Xd b = Eigen::Matrix2Xd::Zero(2, m + 1);
    b.col(0) = -s.q0;
    b.col(m) = s.qF;

    const Eigen::Matrix2Xd pull = (target.array().rowwise() * (2.0 * weight.transpose().array())).matrix();

    const double positive_mean = weight.sum() / std::max<Eigen::Index>(1, (weight.array() > 0.0).count());
    double rho = std::max(positive_mean, 1e-300);

    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
    auto factorize = [&] {
        std::vector<Eigen::Triplet<double>> entries;
        entries.reserve(static_cast<std::size_t>(3 * m));
        for (Eigen::Index j = 0; j < m; ++j) {
            entries.emplace_back(j, j, 2.0 * weight[j] + 2.0 * rho);
            if (j + 1 < m) {
                entries.emplace_back(j, j + 1, -rho);
                entries.emplace_back(j + 1, j, -rho);
            }
        }
        Eigen::SparseMatrix<double> K(m, m);
        K.setFromTriplets(entries.begin(), entries.end());
        solver.compute(K);
        if (solver.info() != Eigen::Success) throw std::runtime_error("solve_subproblem: factorization failed");
    };
    factorize();

    auto project_steps = [&](Eigen::Matrix2Xd V) {
        for (Eigen::Index c = 0; c <= m; ++c) {
            const double len = V.col(c).norm();
            if (len > D) V.col(c) *= D / len;
        }
        return V;
    };

    Eigen::Matrix2Xd X = start.q.rightCols(m);
    Eigen::Matrix2Xd Z = project_steps(apply_L(X) + b);
    Eigen::Matrix2Xd Y = Eigen::Matrix2Xd::Zero(2, m + 1);

    const double abs_tol = 1e-10 * D;
    const double rel_tol = 1e-10;
    iterations = 0;
    for (int it = 0; it < max_iterations; ++it) {
        ++iterations;
        const Eigen::Matrix2Xd rhs = pull + rho * apply_Lt(Z - b - Y);
        X = solver.solve(rhs.transpose()).transpose();
        const Eigen::Matrix2Xd LXb = apply_L(X) + b;
        const Eigen::Matrix2Xd Z_prev = Z;
        Z = project_steps(LXb + Y);
        Y += LXb - Z;

        const double primal = (LXb - Z).norm();
        const double dual = rho * apply_Lt(Z - Z_prev).norm();
        const double eps_primal =
            std::sqrt(static_cast<double>(m + 1)) * abs_tol + rel_tol * std::max({LXb.norm(), Z.norm(), b.norm()});
        const double eps_dual = std::sqrt(static_cast<double>(m)) * abs_tol * positive_mean +
                                rel_tol * rho * apply_Lt(Y).norm();
        if (primal <= eps_primal && dual <= eps_dual) break;

        if (it % 10 == 9) {
            // Residual balancing.
            if (primal > 10.0 * dual * (eps_primal / eps_dual)) {
                rho *= 2.0;
                Y /= 2.0;
                factorize();
            } else if (dual * (eps_primal / eps_dual) > 10.0 * primal) {
                rho /= 2.0;
                Y *= 2.0;
                factorize();
            }
        }
    }

    Trajectory out = start;
    out.q.rightCols(m) = X;
    return out;
}

}  // namespace

SubproblemResult solve_subproblem(const Trajectory& traj0, const ReducedChannel& channel, const Scenario& s,
                                  const SubproblemOptions& options) {
    if (traj0.size() != static_cast<std::size_t>(s.N))
        throw std::invalid_argument("solve_subproblem: trajectory length does not match the slot count");
    if (!check_mobility(traj0, s).empty())
        throw InfeasibleError("solve_subproblem: expansion trajectory violates the mobility constraints");

    const SlackVariables expansion = slack_from_trajectory(traj0, s);
    const SurrogateCoeffs coeffs = taylor_coeffs(expansion.u, expansion.v, channel, s.gamma0(), s.kappa);
    if (!coeffs.A0.allFinite() || !coeffs.B0.allFinite() || !coeffs.C0.allFinite())
        throw std::runtime_error("solve_subproblem: non-finite surrogate coefficients");
    const EliminatedWeights w = eliminated_weights(coeffs, expansion);

    SubproblemResult result;
    Trajectory traj = traj0;

    if (options.method == SubproblemMethod::WarmStartedBlockCoordinate && traj0.size() >= 2) {
        const auto m = static_cast<Eigen::Index>(traj0.size()) - 1;
        Eigen::VectorXd weight(m);
        Eigen::Matrix2Xd target(2, m);
        for (Eigen::Index j = 0; j < m; ++j) {
            Point2 p = traj0.q.col(j + 1);
            double wt = 0.0;
            if (!slot_attractor(w, j + 1, s, p, wt)) wt = 0.0;
            weight[j] = wt;
            target.col(j) = p;
        }
        if (weight.maxCoeff() > 0.0) {
            const Trajectory global = admm_chain(traj0, weight, target, s, options.admm_max_iterations,
                                                 result.admm_iterations);
            const double t = feasible_fraction(traj0, global, s);
            Trajectory candidate = traj0;
            candidate.q = traj0.q + t * (global.q - traj0.q);
            if (check_mobility(candidate, s).empty() && eliminated_objective_gain(candidate, traj0, w, s) >= 0.0)
                traj = std::move(candidate);
        }
    }

    result.sweeps = block_coordinate_ascent(traj, traj0, w, s, options);
    result.slack = eliminated_slacks(traj, expansion, s);
    result.surrogate_value = surrogate_lower_bound(result.slack.u, result.slack.v, expansion.u, expansion.v, coeffs);
    result.surrogate_at_start = surrogate_lower_bound(expansion.u, expansion.v, expansion.u, expansion.v, coeffs);
    result.trajectory = std::move(traj);
    return result;
}

SubproblemResult solve_subproblem(const Trajectory& traj0, const ChannelRealization& r, const Scenario& s,
                                  const SubproblemOptions& options) {
    return solve_subproblem(traj0, reduce(FadingView(&r, 1), traj0.size()), s, options);
}

double planning_rate(const Trajectory& traj, FadingView fading, const Scenario& s, LinkModel link) {
    if (link == LinkModel::Joint) return average_rate(traj, optimal_phases(traj, fading, s), fading, s);
    double total = 0.0;
    for (std::size_t n = 0; n < traj.size(); ++n)
        total += slot_rate(snr_of_gain(gain_ug(traj[n], fading_at(fading, n), s), s));
    return total / static_cast<double>(traj.size());
}

ScaOutcome run_sca(const Scenario& s, FadingView fading, const ScaOptions& options) {
    validate(s);
    if (fading.empty() || (fading.size() != 1 && fading.size() != static_cast<std::size_t>(s.N)))
        throw std::invalid_argument("run_sca: expected one realization or one per slot");
    if (!(options.epsilon > 0.0)) throw std::invalid_argument("run_sca: epsilon must be positive");

    Trajectory traj = options.init ? *options.init : straight_line(s);
    if (!check_mobility(traj, s).empty())
        throw InfeasibleError("run_sca: initial trajectory violates the mobility constraints");

    ReducedChannel channel = reduce(fading, traj.size());
    if (options.link == LinkModel::DirectOnly) channel.B.setZero();

    ScaOutcome out;
    double previous = planning_rate(traj, fading, s, options.link);
    out.objective_log.push_back(previous);
    out.iterates.push_back(traj);
    out.accepted_slacks.push_back(slack_from_trajectory(traj, s));

    for (int k = 1; k <= options.max_iter; ++k) {
        SubproblemResult sub = solve_subproblem(traj, channel, s, options.subproblem);
        const double rate = planning_rate(sub.trajectory, fading, s, options.link);

        // Accepted iterate: the next expansion point uses tight slacks.
        SlackVariables tight = slack_from_trajectory(sub.trajectory, s);
        ScaIteration entry;
        entry.iter = k;
        entry.avg_rate = rate;
        entry.surrogate = sub.surrogate_value / static_cast<double>(s.N);
        entry.max_step_m = (sub.trajectory.q - traj.q).colwise().norm().maxCoeff();
        entry.sweeps = sub.sweeps;
        entry.subproblem_slack_gap = std::max(((sub.slack.u - tight.u).array() / sub.slack.u.array()).abs().maxCoeff(),
                                              ((sub.slack.v - tight.v).array() / sub.slack.v.array()).abs().maxCoeff());
        out.log.push_back(entry);
        out.objective_log.push_back(rate);
        out.iterates.push_back(sub.trajectory);
        out.accepted_slacks.push_back(std::move(tight));
        out.iterations = k;
        traj = std::move(sub.trajectory);

        if (!(rate > 0.0) || (rate - previous) / rate < options.epsilon) {
            out.converged = true;
            break;
        }
        previous = rate;
    }

    out.schedule = optimal_phases(traj, fading, s);
    out.trajectory = std::move(traj);
    return out;
}

}  // namespace uavris
