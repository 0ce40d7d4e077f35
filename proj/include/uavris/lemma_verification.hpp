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

#include "uavris/convexity.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>

namespace uavris {

/// Sampling domain and tolerances for the numerical convexity certificate.
/// K1, K2, K3 are log-uniform in [k_min, k_max], kappa uniform in
/// (0, kappa_max], x and y log-uniform in [xy_min, xy_max].
struct LemmaSweepOptions {
    std::size_t points = 10000;
    std::uint64_t seed = 1;
    double k_min = 1e-3;
    double k_max = 1e3;
    double kappa_max = 6.0;
    double xy_min = 1e-2;
    double xy_max = 1e3;
    double hessian_fd_tolerance = 1e-5;
    double expansion_tolerance = 1e-10;
};

struct LemmaSweepReport {
    std::size_t points_tested = 0;
    /// Smallest of (f_xx, det H) over all points.
    double min_leading_minor = 0.0;
    /// Smallest eta^2 (f_xx f_yy - f_xy^2) over all points.
    double min_det_surplus = 0.0;
    /// Largest scaled deviation between the analytic Hessian and central
    /// differences of the gradient (evaluated in long double).
    double max_fd_rel_error = 0.0;
    /// Largest scaled deviation between the expanded sums and the compact
    /// closed forms.
    double max_expansion_rel_error = 0.0;
    std::size_t failed_points = 0;

    bool passed(const LemmaSweepOptions& options) const noexcept {
        return failed_points == 0 && min_leading_minor > 0.0 && min_det_surplus > 0.0 &&
               max_fd_rel_error <= options.hessian_fd_tolerance &&
               max_expansion_rel_error <= options.expansion_tolerance;
    }
};

/// Per-point comparison used by the sweep.
struct LemmaPointCheck {
    double fd_rel_error = 0.0;
    double expansion_rel_error = 0.0;
    double leading_minor_1 = 0.0;
    double leading_minor_2 = 0.0;
    double det_surplus = 0.0;
};

/// Central-difference Hessian from the analytic gradient in long double,
/// step h = 1e-6 max(1, |coordinate|).
Matrix2<long double> finite_difference_hessian(long double x, long double y, const LemmaParams<long double>& p);

/// Entry-wise error of `approx` against `exact`: diagonal entries relative to
/// themselves, the off-diagonal entry relative to sqrt(H_xx H_yy).
double scaled_hessian_error(const Matrix2<long double>& approx, const Matrix2<long double>& exact);

LemmaPointCheck check_lemma_point(double x, double y, const LemmaParams<double>& p);

LemmaSweepReport run_lemma_sweep(const LemmaSweepOptions& options);

nlohmann::json to_json(const LemmaSweepReport& report, const LemmaSweepOptions& options);

}  // namespace uavris
