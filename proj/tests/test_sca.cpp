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

#include "sca_oracle.hpp"

#include "uavris/beamforming.hpp"
#include "uavris/channel.hpp"
#include "uavris/rng.hpp"
#include "uavris/sca.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

using namespace uavris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Scenario tiny_scenario(int N, double D) {
    Scenario s = reference_scenario(static_cast<double>(N));
    s.vmax = D;
    s.q0 = Point2(0, 0);
    s.qF = Point2(1.5 * D, 0.5 * D);
    s.wG = Point2(2.0 * D, 2.5 * D);
    s.wR = Point2(-1.0 * D, 1.5 * D);
    s.zU = 3.0 * D;
    s.zR = 1.0 * D;
    return s;
}

ReducedChannel constant_channel(int N, double A, double B) {
    return {Eigen::VectorXd::Constant(N, A), Eigen::VectorXd::Constant(N, B)};
}

double surrogate_of(const Trajectory& traj, const Trajectory& expansion, const ReducedChannel& ch, const Scenario& s) {
    const SlackVariables e = slack_from_trajectory(expansion, s);
    const SurrogateCoeffs c = taylor_coeffs(e.u, e.v, ch, s.gamma0(), s.kappa);
    const SlackVariables el = eliminated_slacks(traj, e, s);
    return surrogate_lower_bound(el.u, el.v, e.u, e.v, c);
}

}  // namespace

TEST_CASE("slacks from trajectories") {
    const Scenario s = reference_scenario(20.0);
    Trajectory user(Eigen::Matrix2Xd(2, s.N));
    user.q.colwise() = s.wG;
    CHECK((slack_from_trajectory(user, s).u.array() == s.zU).all());

    Trajectory ris(Eigen::Matrix2Xd(2, s.N));
    ris.q.colwise() = s.wR;
    CHECK((slack_from_trajectory(ris, s).v.array() == s.zU - s.zR).all());

    const Trajectory line = straight_line(reference_scenario());
    const Scenario ref = reference_scenario();
    const SlackVariables sl = slack_from_trajectory(line, ref);
    for (std::size_t n = 0; n < line.size(); n += 37) {
        const Point2 q = line[n];
        const double du = std::hypot(ref.zU, (q - ref.wG).norm());
        const double dv = std::hypot(ref.zU - ref.zR, (q - ref.wR).norm());
        CHECK_THAT(sl.u[static_cast<Eigen::Index>(n)], WithinRel(du, 1e-14));
        CHECK_THAT(sl.v[static_cast<Eigen::Index>(n)], WithinRel(dv, 1e-14));
    }
}

TEST_CASE("taylor coefficient special cases") {
    const Eigen::VectorXd u0 = Eigen::VectorXd::LinSpaced(5, 80, 600);
    const Eigen::VectorXd v0 = Eigen::VectorXd::LinSpaced(5, 40, 500);
    const double g0 = 1e9, kappa = 3.5, B = 2e-3;

    const SurrogateCoeffs no_direct = taylor_coeffs(u0, v0, 0.0, B, g0, kappa);
    CHECK(no_direct.B0.isZero());
    for (Eigen::Index n = 0; n < 5; ++n)
        CHECK_THAT(no_direct.C0[n], WithinRel(-g0 * 2 * B * B / std::pow(v0[n], 3), 1e-14));

    const SurrogateCoeffs no_ris = taylor_coeffs(u0, v0, 0.1, 0.0, g0, kappa);
    CHECK(no_ris.C0.isZero());

    const SurrogateCoeffs both = taylor_coeffs(u0, v0, 0.1, B, g0, kappa);
    CHECK((both.A0.array() >= 1.0).all());
    CHECK((both.B0.array() <= 0.0).all());
    CHECK((both.C0.array() <= 0.0).all());

    Eigen::VectorXd bad = u0;
    bad[2] = 0.0;
    CHECK_THROWS_AS(taylor_coeffs(bad, v0, 0.1, B, g0, kappa), std::domain_error);
    CHECK_THROWS_AS(taylor_coeffs(u0, -v0, 0.1, B, g0, kappa), std::domain_error);
}

TEST_CASE("taylor coefficients are derivatives of the rate argument") {
    RandomStream rng(21, "taylor_fd");
    const double g0 = 1e9, kappa = 3.5;
    for (int k = 0; k < 1000; ++k) {
        const double A = 0.2 * rng.uniform();
        const double B = 0.005 * rng.uniform();
        const double u = 80.0 + 900.0 * rng.uniform();
        const double v = 40.0 + 900.0 * rng.uniform();
        // The constant 1 of the argument is dropped for the differences.
        auto interior = [&](long double uu, long double vv) {
            const long double g = A / std::pow(uu, kappa / 2.0L) + B / vv;
            return static_cast<long double>(g0) * g * g;
        };
        const SurrogateCoeffs c = taylor_coeffs(Eigen::VectorXd::Constant(1, u), Eigen::VectorXd::Constant(1, v), A, B, g0, kappa);
        const long double hu = 1e-6L * u, hv = 1e-6L * v;
        const double du = static_cast<double>((interior(u + hu, v) - interior(u - hu, v)) / (2 * hu));
        const double dv = static_cast<double>((interior(u, v + hv) - interior(u, v - hv)) / (2 * hv));
        CHECK_THAT(c.A0[0], WithinRel(1.0 + static_cast<double>(interior(u, v)), 1e-14));
        CHECK_THAT(c.B0[0], WithinRel(du, 1e-6));
        CHECK_THAT(c.C0[0], WithinRel(dv, 1e-6));
    }
}

TEST_CASE("surrogate is a tangent under-estimator") {
    RandomStream rng(22, "surrogate_bound");
    const double g0 = 1e9, kappa = 3.5;
    const int N = 1;
    for (int k = 0; k < 10000; ++k) {
        const ReducedChannel ch = constant_channel(N, 0.2 * rng.uniform(), 0.005 * rng.uniform());
        const Eigen::VectorXd u0 = Eigen::VectorXd::Constant(N, 80.0 + 900.0 * rng.uniform());
        const Eigen::VectorXd v0 = Eigen::VectorXd::Constant(N, 40.0 + 900.0 * rng.uniform());
        const Eigen::VectorXd u = Eigen::VectorXd::Constant(N, 80.0 + 900.0 * rng.uniform());
        const Eigen::VectorXd v = Eigen::VectorXd::Constant(N, 40.0 + 900.0 * rng.uniform());
        const SurrogateCoeffs c = taylor_coeffs(u0, v0, ch, g0, kappa);
        const double at_point = slack_objective(u0, v0, ch, g0, kappa);
        REQUIRE(std::abs(surrogate_lower_bound(u0, v0, u0, v0, c) - at_point) <= 1e-12 * std::max(1.0, at_point));
        REQUIRE(surrogate_lower_bound(u, v, u0, v0, c) <= slack_objective(u, v, ch, g0, kappa) + 1e-12);
    }
}

TEST_CASE("surrogate slope in u") {
    const ReducedChannel ch = constant_channel(1, 0.1, 0.002);
    const Eigen::VectorXd u0 = Eigen::VectorXd::Constant(1, 150.0);
    const Eigen::VectorXd v0 = Eigen::VectorXd::Constant(1, 90.0);
    const SurrogateCoeffs c = taylor_coeffs(u0, v0, ch, 1e9, 3.5);
    const Eigen::VectorXd u1 = u0.array() + 7.0;
    const double slope = (surrogate_lower_bound(u1, v0, u0, v0, c) - surrogate_lower_bound(u0, v0, u0, v0, c)) / 7.0;
    CHECK_THAT(slope, WithinRel(c.B0[0] / (c.A0[0] * std::numbers::ln2), 1e-10));
}

TEST_CASE("eliminated objective matches the surrogate") {
    const Scenario s = reference_scenario(60.0);
    const ChannelRealization r = sample_realization(s, 3);
    const ReducedChannel ch = reduce(FadingView(&r, 1), static_cast<std::size_t>(s.N));
    const Trajectory expansion = straight_line(s);
    Trajectory moved = expansion;
    RandomStream rng(23, "eliminated");
    for (Eigen::Index n = 1; n < moved.q.cols(); ++n) moved.q.col(n) += Point2(rng.uniform() - 0.5, rng.uniform() - 0.5) * 30.0;

    const SlackVariables e = slack_from_trajectory(expansion, s);
    const SurrogateCoeffs c = taylor_coeffs(e.u, e.v, ch, s.gamma0(), s.kappa);
    const EliminatedWeights w = eliminated_weights(c, e);
    CHECK((w.c1.array() < 0.0).all());
    CHECK((w.c2.array() < 0.0).all());
    const double direct = surrogate_of(moved, expansion, ch, s) - surrogate_of(expansion, expansion, ch, s);
    CHECK_THAT(eliminated_objective_gain(moved, expansion, w, s), WithinRel(direct, 1e-9));

    const SlackVariables el = eliminated_slacks(moved, e, s);
    const SlackVariables tight = slack_from_trajectory(moved, s);
    CHECK((el.u.array() >= tight.u.array() - 1e-12).all());
    CHECK((el.v.array() >= tight.v.array() - 1e-12).all());
}

TEST_CASE("single attractor without the RIS") {
    Scenario s = reference_scenario(40.0);
    s.qF = s.q0 + Point2(100, 0);
    s.wG = s.q0 + Point2(150, 100);
    const ReducedChannel ch = constant_channel(s.N, 0.1, 0.0);
    const SubproblemResult r = solve_subproblem(straight_line(s), ch, s);
    CHECK(check_mobility(r.trajectory, s).empty());
    // Every slot that can reach wG and still return to qF in time sits on it.
    const double D = s.max_step();
    const double to_user = (s.wG - s.q0).norm();
    const double back = (s.qF - s.wG).norm();
    for (int n = 0; n < s.N; ++n) {
        if (n * D >= to_user && (s.N - n) * D >= back)
            CHECK((r.trajectory[static_cast<std::size_t>(n)] - s.wG).norm() <= 1e-6);
    }
}

TEST_CASE("unconstrained slots sit at the weighted centroid") {
    Scenario s = tiny_scenario(3, 10.0);
    s.vmax = 1e5;
    const ReducedChannel ch{Eigen::Vector3d(0.1, 0.05, 0.2), Eigen::Vector3d(0.004, 0.01, 0.001)};
    const Trajectory start = straight_line(s);
    const SubproblemResult r = solve_subproblem(start, ch, s);

    const SlackVariables e = slack_from_trajectory(start, s);
    for (int n = 1; n < 3; ++n) {
        const testing::SlotSurrogate c = testing::slot_surrogate(start[static_cast<std::size_t>(n)], ch.A[n], ch.B[n], s);
        REQUIRE_THAT(c.u0, WithinRel(e.u[n], 1e-14));
        const double c1 = c.slope_u / (2 * c.u0);
        const double c2 = c.slope_v / (2 * c.v0);
        const Point2 centroid = (c1 * s.wG + c2 * s.wR) / (c1 + c2);
        CHECK((r.trajectory[static_cast<std::size_t>(n)] - centroid).norm() <= 1e-6 * (1.0 + centroid.norm()));
    }
}

TEST_CASE("subproblem matches the lattice oracle on tiny instances") {
    RandomStream rng(24, "subproblem_oracle");
    for (int trial = 0; trial < 6; ++trial) {
        const int N = 4 + trial % 2;
        Scenario s = tiny_scenario(N, 10.0);
        s.wG = Point2(40 * rng.uniform() - 10, 40 * rng.uniform() - 10);
        s.wR = Point2(40 * rng.uniform() - 10, 40 * rng.uniform() - 10);
        s.zU = 20.0 + 20.0 * rng.uniform();
        s.zR = 5.0 + 10.0 * rng.uniform();
        ReducedChannel ch{Eigen::VectorXd(N), Eigen::VectorXd(N)};
        for (int n = 0; n < N; ++n) {
            ch.A[n] = 1e-2 * rng.uniform();
            ch.B[n] = 1e-3 * rng.uniform();
        }
        const Trajectory start = straight_line(s);
        const SubproblemResult r = solve_subproblem(start, ch, s);
        REQUIRE(check_mobility(r.trajectory, s).empty());

        const testing::GridOracleResult oracle = testing::grid_oracle(s, start.q, ch.A, ch.B);
        const double bound = testing::one_cell_bound(s, start.q, ch.A, ch.B, r.trajectory.q, oracle.cell_diagonal);
        INFO("trial " << trial << " solver " << r.surrogate_value << " grid " << oracle.value << " bound " << bound);
        CHECK(oracle.value <= r.surrogate_value + 1e-9);
        CHECK(r.surrogate_value - oracle.value <= bound);
    }
}

TEST_CASE("subproblem never loses surrogate value") {
    const Scenario s = reference_scenario(150.0);
    const ChannelRealization ch = sample_realization(s, 9);
    const Trajectory start = straight_line(s);
    for (SubproblemMethod method : {SubproblemMethod::BlockCoordinate, SubproblemMethod::WarmStartedBlockCoordinate}) {
        SubproblemOptions o;
        o.method = method;
        const SubproblemResult r = solve_subproblem(start, ch, s, o);
        CHECK(check_mobility(r.trajectory, s).empty());
        CHECK(r.surrogate_value >= r.surrogate_at_start - 1e-9);
        CHECK(r.sweeps >= 1);
        CHECK(r.sweeps <= o.max_sweeps);
    }
}

TEST_CASE("warm start reaches at least the block-coordinate value") {
    RandomStream rng(25, "warm_start");
    for (int trial = 0; trial < 5; ++trial) {
        Scenario s = reference_scenario(60.0 + 40.0 * trial);
        s.wG = Point2(200 * rng.uniform() - 100, 200 * rng.uniform() - 100);
        const ChannelRealization ch = sample_realization(s, static_cast<std::uint64_t>(trial));
        const Trajectory start = straight_line(s);
        SubproblemOptions bcd;
        bcd.method = SubproblemMethod::BlockCoordinate;
        const double plain = solve_subproblem(start, ch, s, bcd).surrogate_value;
        const double warm = solve_subproblem(start, ch, s).surrogate_value;
        CHECK(warm >= plain - 1e-9);
    }
}

TEST_CASE("subproblem errors") {
    const Scenario s = reference_scenario(50.0);
    Trajectory bad = straight_line(s);
    bad.q.col(10) += Point2(100, 0);
    const ChannelRealization ch = sample_realization(s, 1);
    CHECK_THROWS_AS(solve_subproblem(bad, ch, s), InfeasibleError);

    ReducedChannel nan = constant_channel(s.N, std::numeric_limits<double>::quiet_NaN(), 0.001);
    CHECK_THROWS_AS(solve_subproblem(straight_line(s), nan, s), std::runtime_error);
}

TEST_CASE("run_sca stops after one iteration for a huge epsilon") {
    const Scenario s = reference_scenario(100.0);
    const ChannelRealization r = sample_realization(s, 1);
    ScaOptions o;
    o.epsilon = 10.0;
    const ScaOutcome out = run_sca(s, r, o);
    CHECK(out.iterations == 1);
    CHECK(out.converged);
    CHECK(check_mobility(out.trajectory, s).empty());
}

TEST_CASE("run_sca on the reference geometry") {
    const Scenario s = reference_scenario(200.0);
    const ChannelRealization r = sample_realization(s, 1);
    const ScaOutcome out = run_sca(s, r);
    CHECK(out.converged);
    REQUIRE(out.objective_log.size() == static_cast<std::size_t>(out.iterations) + 1);
    for (std::size_t k = 1; k < out.objective_log.size(); ++k) CHECK(out.objective_log[k] >= out.objective_log[k - 1] - 1e-9);
    CHECK(out.objective_log.back() > out.objective_log.front());
    CHECK_THAT(out.objective_log.back(), WithinRel(average_rate(out.trajectory, out.schedule, r, s), 1e-12));

    const ReducedChannel ch = reduce(FadingView(&r, 1), static_cast<std::size_t>(s.N));
    for (std::size_t k = 0; k < out.iterates.size(); ++k) {
        const Trajectory& q = out.iterates[k];
        REQUIRE(check_mobility(q, s).empty());
        const SlackVariables tight = slack_from_trajectory(q, s);
        const SlackVariables& used = out.accepted_slacks[k];
        CHECK(((used.u - tight.u).array().abs() / used.u.array()).maxCoeff() <= 1e-6);
        CHECK(((used.v - tight.v).array().abs() / used.v.array()).maxCoeff() <= 1e-6);

        if (k == 0) continue;
        // True objective >= surrogate at the new iterate >= surrogate at the
        // expansion point = true objective there.
        const double N = s.N;
        const double true_new = reduced_rate(q, r, s) * N;
        const double sur_new = out.log[k - 1].surrogate * N;
        const double true_old = reduced_rate(out.iterates[k - 1], r, s) * N;
        const double sur_old = surrogate_of(out.iterates[k - 1], out.iterates[k - 1], ch, s);
        CHECK(true_new >= sur_new - 1e-9);
        CHECK(sur_new >= sur_old - 1e-9);
        CHECK_THAT(sur_old, WithinRel(true_old, 1e-12));
    }
}

TEST_CASE("run_sca with no channel terminates immediately") {
    const Scenario s = reference_scenario(50.0);
    const ChannelRealization zero = make_realization({0.0, 0.0}, Eigen::VectorXcd::Zero(s.M), s.rho);
    const ScaOutcome out = run_sca(s, zero);
    CHECK(out.iterations == 1);
    CHECK(out.converged);
    CHECK(out.objective_log.back() == 0.0);
    CHECK(check_mobility(out.trajectory, s).empty());
}

TEST_CASE("run_sca reports non-convergence at the iteration cap") {
    const Scenario s = reference_scenario(200.0);
    const ChannelRealization r = sample_realization(s, 1);
    ScaOptions o;
    o.epsilon = 1e-12;
    o.max_iter = 2;
    const ScaOutcome out = run_sca(s, r, o);
    CHECK(out.iterations == 2);
    CHECK_FALSE(out.converged);
}

TEST_CASE("run_sca accepts per-slot fading and a custom start") {
    const Scenario s = reference_scenario(80.0);
    const auto fading = sample_per_slot_realizations(s, 5);
    ScaOptions o;
    Trajectory start = straight_line(s);
    o.init = start;
    const ScaOutcome out = run_sca(s, fading, o);
    CHECK(check_mobility(out.trajectory, s).empty());
    CHECK(out.objective_log.back() >= out.objective_log.front());

    Trajectory bad = start;
    bad.q.col(3) += Point2(200, 0);
    o.init = bad;
    CHECK_THROWS_AS(run_sca(s, fading, o), InfeasibleError);
}
