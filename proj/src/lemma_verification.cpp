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

#include "uavris/lemma_verification.hpp"

#include "uavris/rng.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>

namespace uavris {

Matrix2<long double> finite_difference_hessian(long double x, long double y, const LemmaParams<long double>& p) {
    const long double hx = 1e-6L * std::max(1.0L, std::abs(x));
    const long double hy = 1e-6L * std::max(1.0L, std::abs(y));
    Matrix2<long double> H;
    H.col(0) = (lemma_gradient(x + hx, y, p) - lemma_gradient(x - hx, y, p)) / (2 * hx);
    H.col(1) = (lemma_gradient(x, y + hy, p) - lemma_gradient(x, y - hy, p)) / (2 * hy);
    return H;
}

double scaled_hessian_error(const Matrix2<long double>& approx, const Matrix2<long double>& exact) {
    const long double cross_scale = std::sqrt(std::abs(exact(0, 0) * exact(1, 1)));
    const long double e00 = std::abs(approx(0, 0) - exact(0, 0)) / std::abs(exact(0, 0));
    const long double e11 = std::abs(approx(1, 1) - exact(1, 1)) / std::abs(exact(1, 1));
    const long double e01 = std::abs(approx(0, 1) - exact(0, 1)) / cross_scale;
    const long double e10 = std::abs(approx(1, 0) - exact(1, 0)) / cross_scale;
    return static_cast<double>(std::max({e00, e11, e01, e10}));
}

LemmaPointCheck check_lemma_point(double x, double y, const LemmaParams<double>& p) {
    const LemmaParams<long double> pl{p.K1, p.K2, p.K3, p.kappa};
    const long double xl = x;
    const long double yl = y;

    LemmaPointCheck out;
    const Matrix2<double> H = lemma_hessian(x, y, p);
    out.fd_rel_error = scaled_hessian_error(finite_difference_hessian(xl, yl, pl), H.cast<long double>());
    out.leading_minor_1 = H(0, 0);
    out.leading_minor_2 = H.determinant();

    // Compact reference values in long double, scaled by eta.
    const Matrix2<long double> Hl = lemma_hessian(xl, yl, pl);
    const long double eta = lemma_eta(xl, yl, pl);
    const long double ref_xx = eta * Hl(0, 0);
    const long double ref_yy = eta * Hl(1, 1);
    const long double ref_xy = eta * Hl(0, 1);

    const HessianCertificate<double> c = hessian_certificate(x, y, p);
    out.det_surplus = c.det_surplus;
    const long double diag = ref_xx * ref_yy;
    const long double errors[] = {
        std::abs(c.eta_fxx - ref_xx) / ref_xx,
        std::abs(c.eta_fyy - ref_yy) / ref_yy,
        std::abs(c.eta_fxy - ref_xy) / std::sqrt(diag),
        std::abs(c.eta2_fxx_fyy - diag) / diag,
        std::abs(c.eta2_fxy_sq - ref_xy * ref_xy) / diag,
    };
    out.expansion_rel_error = static_cast<double>(*std::max_element(std::begin(errors), std::end(errors)));
    return out;
}

LemmaSweepReport run_lemma_sweep(const LemmaSweepOptions& options) {
    RandomStream rng(options.seed, "lemma_sweep");
    auto log_uniform = [&](double lo, double hi) {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * rng.uniform());
    };

    LemmaSweepReport report;
    report.min_leading_minor = std::numeric_limits<double>::infinity();
    report.min_det_surplus = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < options.points; ++i) {
        LemmaParams<double> p;
        p.K1 = log_uniform(options.k_min, options.k_max);
        p.K2 = log_uniform(options.k_min, options.k_max);
        p.K3 = log_uniform(options.k_min, options.k_max);
        p.kappa = options.kappa_max * (1.0 - rng.uniform());
        const double x = log_uniform(options.xy_min, options.xy_max);
        const double y = log_uniform(options.xy_min, options.xy_max);

        const LemmaPointCheck c = check_lemma_point(x, y, p);
        ++report.points_tested;
        report.min_leading_minor = std::min({report.min_leading_minor, c.leading_minor_1, c.leading_minor_2});
        report.min_det_surplus = std::min(report.min_det_surplus, c.det_surplus);
        report.max_fd_rel_error = std::max(report.max_fd_rel_error, c.fd_rel_error);
        report.max_expansion_rel_error = std::max(report.max_expansion_rel_error, c.expansion_rel_error);
        const bool ok = c.leading_minor_1 > 0.0 && c.leading_minor_2 > 0.0 && c.det_surplus > 0.0 &&
                        c.fd_rel_error <= options.hessian_fd_tolerance &&
                        c.expansion_rel_error <= options.expansion_tolerance;
        if (!ok) ++report.failed_points;
    }
    return report;
}

nlohmann::json to_json(const LemmaSweepReport& report, const LemmaSweepOptions& options) {
    nlohmann::json j;
    j["points_tested"] = report.points_tested;
    j["min_leading_minor"] = report.min_leading_minor;
    j["min_det_surplus"] = report.min_det_surplus;
    j["max_fd_rel_error"] = report.max_fd_rel_error;
    j["max_expansion_rel_error"] = report.max_expansion_rel_error;
    j["failed_points"] = report.failed_points;
    j["passed"] = report.passed(options);
    return j;
}

}  // namespace uavris
