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

#include "uavris/channel.hpp"
#include "uavris/scenario.hpp"

#include <Eigen/Core>

#include <complex>

namespace uavris {

/// RIS phase shifts per slot: N x M, radians in [0, 2pi).
struct PhaseSchedule {
    Eigen::MatrixXd theta;

    Eigen::Index slots() const noexcept { return theta.rows(); }
    Eigen::Index elements() const noexcept { return theta.cols(); }
};

/// Representative of `phase` modulo 2pi in [0, 2pi).
double wrap_phase(double phase) noexcept;

/// arg() with arg(0) = 0.
inline double safe_arg(std::complex<double> z) noexcept { return z == 0.0 ? 0.0 : std::arg(z); }

/// Phase-aligning shifts for one slot:
///   theta_i = wrap(arg(h_tilde) + omega_i + 2pi (d/lambda) i cos_aoa(q)),  i = 0..M-1,
/// so every reflected path arrives in phase with the direct path.
Eigen::VectorXd optimal_phases_at(const Point2& q, const ChannelRealization& r, const Scenario& s);

PhaseSchedule optimal_phases(const Trajectory& traj, FadingView fading, const Scenario& s);
inline PhaseSchedule optimal_phases(const Trajectory& traj, const ChannelRealization& r, const Scenario& s) {
    return optimal_phases(traj, FadingView(&r, 1), s);
}

/// h_RG^H Theta h_UR evaluated element-wise:
///   sqrt(rho)/d_UR sum_i |h_RG,i| exp(j(theta_i - omega_i - 2pi (d/lambda) i cos_aoa)).
std::complex<double> reflected_gain(const Point2& q, const Eigen::Ref<const Eigen::VectorXd>& theta,
                                    const ChannelRealization& r, const Scenario& s);

/// h_UG + h_RG^H Theta h_UR.
std::complex<double> combined_gain(const Point2& q, const Eigen::Ref<const Eigen::VectorXd>& theta,
                                   const ChannelRealization& r, const Scenario& s);

/// Same quantity through the explicit vector/diagonal-matrix product.
std::complex<double> combined_gain_matrix_form(const Point2& q, const Eigen::Ref<const Eigen::VectorXd>& theta,
                                               const ChannelRealization& r, const Scenario& s);

/// P |g|^2 / sigma^2 for a given composite gain.
inline double snr_of_gain(std::complex<double> g, const Scenario& s) { return s.gamma0() * std::norm(g); }

double snr(const Point2& q, const Eigen::Ref<const Eigen::VectorXd>& theta, const ChannelRealization& r,
           const Scenario& s);

/// log2(1 + snr) in bps/Hz.
double slot_rate(double snr_value) noexcept;

/// Mean slot rate over the trajectory for a given phase schedule.
double average_rate(const Trajectory& traj, const PhaseSchedule& schedule, FadingView fading, const Scenario& s);
inline double average_rate(const Trajectory& traj, const PhaseSchedule& schedule, const ChannelRealization& r,
                           const Scenario& s) {
    return average_rate(traj, schedule, FadingView(&r, 1), s);
}

/// |composite gain| under phase alignment: A / d_UG^(kappa/2) + B / d_UR.
inline double aligned_gain_magnitude(double d_ug, double d_ur, double A, double B, double kappa) {
    return A / std::pow(d_ug, 0.5 * kappa) + B / d_ur;
}

/// Slot rate under phase alignment, as a function of the two distances.
double aligned_slot_rate(double d_ug, double d_ur, double A, double B, double gamma0, double kappa);

/// Average rate under phase alignment through the reduced A/B form; equals
/// average_rate(traj, optimal_phases(traj, ...), ...).
double reduced_rate(const Trajectory& traj, FadingView fading, const Scenario& s);
inline double reduced_rate(const Trajectory& traj, const ChannelRealization& r, const Scenario& s) {
    return reduced_rate(traj, FadingView(&r, 1), s);
}

}  // namespace uavris
