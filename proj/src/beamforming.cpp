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

#include "uavris/beamforming.hpp"

#include <cmath>
#include <numbers>

namespace uavris {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_phase(double phase) noexcept {
    double w = std::fmod(phase, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    // fmod of a tiny negative value plus 2pi can round up to exactly 2pi.
    return w >= kTwoPi ? 0.0 : w;
}

Eigen::VectorXd optimal_phases_at(const Point2& q, const ChannelRealization& r, const Scenario& s) {
    const double base = safe_arg(r.h_tilde);
    const double progression = kTwoPi * s.d_over_lambda * cos_aoa_uav_ris(q, s);
    Eigen::VectorXd theta(r.elements());
    for (Eigen::Index i = 0; i < theta.size(); ++i)
        theta[i] = wrap_phase(base + r.h_rg_phase[i] + progression * static_cast<double>(i));
    return theta;
}

PhaseSchedule optimal_phases(const Trajectory& traj, FadingView fading, const Scenario& s) {
    PhaseSchedule out;
    const auto N = static_cast<Eigen::Index>(traj.size());
    out.theta.resize(N, fading_at(fading, 0).elements());
    for (Eigen::Index n = 0; n < N; ++n)
        out.theta.row(n) = optimal_phases_at(traj[n], fading_at(fading, n), s).transpose();
    return out;
}

std::complex<double> reflected_gain(const Point2& q, const Eigen::Ref<const Eigen::VectorXd>& theta,
                                    const ChannelRealization& r, const Scenario& s) {
    const double progression = kTwoPi * s.d_over_lambda * cos_aoa_uav_ris(q, s);
    std::complex<double> sum = 0.0;
    for (Eigen::Index i = 0; i < theta.size(); ++i)
        sum += std::polar(r.h_rg_mag[i], theta[i] - r.h_rg_phase[i] - progression * static_cast<double>(i));
    return sum * (std::sqrt(s.rho) / distance_uav_ris(q, s));
}

std::complex<double> combined_gain(const Point2& q, const Eigen::Ref<const Eigen::VectorXd>& theta,
                                   const ChannelRealization& r, const Scenario& s) {
    return gain_ug(q, r, s) + reflected_gain(q, theta, r, s);
}

std::complex<double> combined_gain_matrix_form(const Point2& q, const Eigen::Ref<const Eigen::VectorXd>& theta,
                                               const ChannelRealization& r, const Scenario& s) {
    Eigen::VectorXcd shifts(theta.size());
    for (Eigen::Index i = 0; i < theta.size(); ++i) shifts[i] = std::polar(1.0, theta[i]);
    const Eigen::VectorXcd h_ur = gain_ur(q, s);
    const std::complex<double> reflected = r.h_rg.adjoint() * shifts.asDiagonal() * h_ur;
    return gain_ug(q, r, s) + reflected;
}

double snr(const Point2& q, const Eigen::Ref<const Eigen::VectorXd>& theta, const ChannelRealization& r,
           const Scenario& s) {
    return snr_of_gain(combined_gain(q, theta, r, s), s);
}

double slot_rate(double snr_value) noexcept { return std::log2(1.0 + snr_value); }

double average_rate(const Trajectory& traj, const PhaseSchedule& schedule, FadingView fading, const Scenario& s) {
    const std::size_t N = traj.size();
    double total = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        const Eigen::VectorXd theta = schedule.theta.row(static_cast<Eigen::Index>(n)).transpose();
        total += slot_rate(snr(traj[n], theta, fading_at(fading, n), s));
    }
    return total / static_cast<double>(N);
}

double aligned_slot_rate(double d_ug, double d_ur, double A, double B, double gamma0, double kappa) {
    const double g = aligned_gain_magnitude(d_ug, d_ur, A, B, kappa);
    return std::log2(1.0 + gamma0 * g * g);
}

double reduced_rate(const Trajectory& traj, FadingView fading, const Scenario& s) {
    const std::size_t N = traj.size();
    double total = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
        const auto& r = fading_at(fading, n);
        total += aligned_slot_rate(distance_uav_user(traj[n], s), distance_uav_ris(traj[n], s), r.A, r.B,
                                   s.gamma0(), s.kappa);
    }
    return total / static_cast<double>(N);
}

}  // namespace uavris
