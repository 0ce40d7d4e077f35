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

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace uavris {

using Point2 = Eigen::Vector2d;

/// Raised for malformed or out-of-range configuration values. `field` names
/// the offending key when one is known.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised when the geometry admits no trajectory satisfying the mobility
/// constraints (or the requested baseline cannot be flown in time).
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Static geometry, RF constants and time discretization of one flight.
/// All power and gain quantities are linear (W, ratios); dB conversion
/// happens at load time.
struct Scenario {
    Point2 q0{-500.0, 20.0};  // initial horizontal position [m]
    Point2 qF{500.0, 20.0};   // final horizontal position [m]
    Point2 wG{0.0, 70.0};     // ground user [m]
    Point2 wR{0.0, 0.0};      // RIS reference element [m]
    double zU = 80.0;         // UAV altitude [m]
    double zR = 40.0;         // RIS altitude [m]
    double T = 740.0;         // flight duration [s]
    int N = 740;              // slot count
    double delta_t = 1.0;     // slot length [s]
    double vmax = 25.0;       // [m/s]
    int M = 90;               // RIS elements
    double P = 0.01;          // transmit power [W]
    double sigma2 = 1e-11;    // noise power [W]
    double rho = 0.01;        // path loss at 1 m (linear)
    double kappa = 3.5;       // U-G path loss exponent
    double alpha = 2.8;       // R-G path loss exponent
    double beta = 1.9952623149688795;  // Rician factor (linear, 3 dB)
    double d_over_lambda = 0.5;

    /// Largest horizontal displacement per slot, vmax * delta_t.
    double max_step() const noexcept { return vmax * delta_t; }
    /// Transmit SNR P / sigma^2.
    double gamma0() const noexcept { return P / sigma2; }
};

/// The reference parameter set (the defaults above: 1 km east-west pass,
/// user 70 m north of the RIS, M = 90) with flight duration `T` seconds.
Scenario reference_scenario(double T = 740.0);

/// Copy of `s` with duration `T`; the slot count is recomputed as T / delta_t.
Scenario with_duration(const Scenario& s, double T);

/// Throws ConfigError for invalid parameter values and InfeasibleError when
/// q0 cannot reach qF within N slots.
void validate(const Scenario& s);

/// N horizontal waypoints at fixed altitude, stored column-wise (2 x N).
struct Trajectory {
    Eigen::Matrix2Xd q;

    Trajectory() = default;
    explicit Trajectory(Eigen::Matrix2Xd positions) : q(std::move(positions)) {}

    std::size_t size() const noexcept { return static_cast<std::size_t>(q.cols()); }
    auto operator[](std::size_t n) const { return q.col(static_cast<Eigen::Index>(n)); }
    auto operator[](std::size_t n) { return q.col(static_cast<Eigen::Index>(n)); }
};

/// Uniformly spaced straight line from q0 toward qF; slot n sits at
/// q0 + n/N (qF - q0), so the final slot is |qF - q0|/N short of qF.
Trajectory straight_line(const Scenario& s);

// Distances and angle cosines. Slot positions are horizontal 2-vectors.
double distance_uav_user(const Point2& q, const Scenario& s);
double distance_uav_ris(const Point2& q, const Scenario& s);
double distance_ris_user(const Scenario& s);

/// Cosine of the angle of arrival at the RIS, (x_R - x) / d_UR.
/// Throws std::domain_error when the UAV coincides with the reference element.
double cos_aoa_uav_ris(const Point2& q, const Scenario& s);
/// Cosine of the angle of departure from the RIS toward the user.
double cos_aod_ris_user(const Scenario& s);

enum class MobilityConstraint { InitialPosition, Step, FinalReach };

struct MobilityViolation {
    MobilityConstraint constraint;
    std::size_t slot;  // 0-based; for Step, the violating step is slot -> slot + 1
    double excess_m;   // amount by which the bound is exceeded
};

/// Absolute tolerance used by check_mobility [m].
inline constexpr double kMobilityTolerance = 1e-9;

/// Evaluates q[1] = q0, |q[n+1] - q[n]| <= D and |q[N] - qF| <= D. An empty
/// result means the trajectory is feasible.
std::vector<MobilityViolation> check_mobility(const Trajectory& traj, const Scenario& s,
                                              double tolerance = kMobilityTolerance);

}  // namespace uavris
