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

// Convexity of the per-slot rate in the slack variables.
//
//   f(x, y) = log2(1 + K1 x^-k + K2 y^-2 + K3 x^(-k/2) y^-1),  x, y > 0,
//
// with closed-form gradient and Hessian, and the fully expanded monomial
// sums whose signs certify that the Hessian is positive definite for any
// K1, K2, K3, k > 0. In the rate problem x = d_UG, y = d_UR and
// K1 = g0 A^2, K2 = g0 B^2, K3 = 2 g0 A B with g0 = P / sigma^2.
//
// Everything is templated on the scalar type so the same formulas can be
// evaluated in extended precision for verification.

#pragma once

#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace uavris {

template <typename Scalar>
struct LemmaParams {
    Scalar K1;
    Scalar K2;
    Scalar K3;
    Scalar kappa;
};

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Scalar, 2, 2>;

namespace detail {

template <typename Scalar>
Scalar log1p_any(const Scalar& s) {
    if constexpr (std::is_floating_point_v<Scalar>) {
        return std::log1p(s);
    } else {
        using std::log;
        return log(Scalar(1) + s);
    }
}

template <typename Scalar>
void require_lemma_domain(const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p) {
    if (!(x > 0) || !(y > 0)) throw std::domain_error("lemma function requires x > 0 and y > 0");
    if (!(p.K1 > 0) || !(p.K2 > 0) || !(p.K3 > 0) || !(p.kappa > 0))
        throw std::domain_error("lemma function requires K1, K2, K3, kappa > 0");
}

/// Powers shared by the closed forms.
template <typename Scalar>
struct LemmaPowers {
    Scalar xk;      // x^-k
    Scalar xh;      // x^(-k/2)
    Scalar S;       // 1 + K1 x^-k + K2 y^-2 + K3 x^(-k/2) y^-1
    Scalar ln2;

    LemmaPowers(const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p) {
        using std::log;
        using std::pow;
        xk = pow(x, -p.kappa);
        xh = pow(x, -p.kappa / 2);
        S = 1 + p.K1 * xk + p.K2 / (y * y) + p.K3 * xh / y;
        ln2 = log(Scalar(2));
    }
};

}  // namespace detail

template <typename Scalar>
Scalar lemma_value(const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p) {
    using std::log;
    using std::pow;
    detail::require_lemma_domain(x, y, p);
    const Scalar s = p.K1 * pow(x, -p.kappa) + p.K2 / (y * y) + p.K3 * pow(x, -p.kappa / 2) / y;
    return detail::log1p_any(s) / log(Scalar(2));
}

/// First-order partials. Both components are strictly negative on the domain.
template <typename Scalar>
Vector2<Scalar> lemma_gradient(const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p) {
    detail::require_lemma_domain(x, y, p);
    const detail::LemmaPowers<Scalar> w(x, y, p);
    const Scalar k = p.kappa;
    const Scalar denom = w.ln2 * w.S;
    Vector2<Scalar> g;
    g(0) = (-k * p.K1 * w.xk / x - (k / 2) * p.K3 / y * w.xh / x) / denom;
    g(1) = (-2 * p.K2 / (y * y * y) - p.K3 * w.xh / (y * y)) / denom;
    return g;
}

/// Second-order partials: each entry is S''/(ln2 S) - S' S'/(ln2 S^2).
template <typename Scalar>
Matrix2<Scalar> lemma_hessian(const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p) {
    detail::require_lemma_domain(x, y, p);
    const detail::LemmaPowers<Scalar> w(x, y, p);
    const Scalar k = p.kappa;
    const Scalar h = k / 2;
    const Scalar y2 = y * y;
    const Scalar y3 = y2 * y;

    // Magnitudes of the first partials of S (both partials are negative).
    const Scalar sx = k * p.K1 * w.xk / x + h * p.K3 / y * w.xh / x;
    const Scalar sy = 2 * p.K2 / y3 + p.K3 * w.xh / y2;

    const Scalar sxx = k * (k + 1) * p.K1 * w.xk / (x * x) + h * (h + 1) * p.K3 / y * w.xh / (x * x);
    const Scalar syy = 6 * p.K2 / (y2 * y2) + 2 * p.K3 * w.xh / y3;
    const Scalar sxy = h * p.K3 * w.xh / x / y2;

    const Scalar d1 = w.ln2 * w.S;
    const Scalar d2 = w.ln2 * w.S * w.S;
    Matrix2<Scalar> H;
    H(0, 0) = sxx / d1 - sx * sx / d2;
    H(1, 1) = syy / d1 - sy * sy / d2;
    H(0, 1) = sxy / d1 - sx * sy / d2;
    H(1, 0) = H(0, 1);
    return H;
}

/// eta = ln2 (1 + K1 x^-k + K2 y^-2 + K3 x^(-k/2) y^-1)^2, the common scale
/// of the expanded Hessian sums.
template <typename Scalar>
Scalar lemma_eta(const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p) {
    const detail::LemmaPowers<Scalar> w(x, y, p);
    return w.ln2 * w.S * w.S;
}

/// One term c K1^a K2^b K3^c x^px y^py of an expanded sum. `highlighted`
/// marks the group used in the term-by-term domination argument.
template <typename Scalar>
struct Monomial {
    Scalar coefficient;
    int k1 = 0;
    int k2 = 0;
    int k3 = 0;
    Scalar x_power;
    int y_power = 0;
    bool highlighted = false;
};

template <typename Scalar>
using MonomialSum = std::vector<Monomial<Scalar>>;

/// Monomial value, evaluated through logarithms: the expanded sums span
/// tens of orders of magnitude over the verification domain.
template <typename Scalar>
Scalar evaluate_monomial(const Monomial<Scalar>& m, const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p) {
    using std::exp;
    using std::log;
    const Scalar log_magnitude = m.k1 * log(p.K1) + m.k2 * log(p.K2) + m.k3 * log(p.K3) + m.x_power * log(x) +
                                 Scalar(m.y_power) * log(y);
    return m.coefficient * exp(log_magnitude);
}

template <typename Scalar>
Scalar evaluate_sum(const MonomialSum<Scalar>& terms, const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p,
                    bool highlighted_only = false) {
    Scalar total(0);
    for (const auto& m : terms)
        if (!highlighted_only || m.highlighted) total += evaluate_monomial(m, x, y, p);
    return total;
}

/// The five expanded sums: eta f_xx, eta f_yy, eta f_xy, eta^2 f_xy^2 and
/// eta^2 f_xx f_yy, with coefficients as functions of kappa.
template <typename Scalar>
struct HessianExpansions {
    MonomialSum<Scalar> eta_fxx;
    MonomialSum<Scalar> eta_fyy;
    MonomialSum<Scalar> eta_fxy;
    MonomialSum<Scalar> eta2_fxy_sq;
    MonomialSum<Scalar> eta2_fxx_fyy;
};

template <typename Scalar>
HessianExpansions<Scalar> hessian_expansions(const Scalar& kappa) {
    const Scalar k = kappa;
    const Scalar h = k / 2;
    HessianExpansions<Scalar> e;
    // x exponents are written as -(a k + 2) etc.; y exponents are integers.
    auto add = [](MonomialSum<Scalar>& sum, Scalar c, int a, int b, int d, Scalar xp, int yp, bool hl = false) {
        sum.push_back(Monomial<Scalar>{c, a, b, d, xp, yp, hl});
    };

    auto& xx = e.eta_fxx;
    add(xx, k * (k + 1), 1, 0, 0, -k - 2, 0);
    add(xx, h * (h + 1), 0, 0, 1, -h - 2, -1);
    add(xx, k, 2, 0, 0, -2 * k - 2, 0);
    add(xx, k * k / 4 + 3 * k / 2, 1, 0, 1, -3 * k / 2 - 2, -1);
    add(xx, k * (k + 1), 1, 1, 0, -k - 2, -2);
    add(xx, h * (h + 1), 0, 1, 1, -h - 2, -3);
    add(xx, h, 0, 0, 2, -k - 2, -2);

    auto& yy = e.eta_fyy;
    add(yy, Scalar(6), 0, 1, 0, Scalar(0), -4);
    add(yy, Scalar(2), 0, 0, 1, -h, -3);
    add(yy, Scalar(6), 1, 1, 0, -k, -4);
    add(yy, Scalar(2), 0, 2, 0, Scalar(0), -6);
    add(yy, Scalar(4), 0, 1, 1, -h, -5);
    add(yy, Scalar(1), 0, 0, 2, -k, -4);
    add(yy, Scalar(2), 1, 0, 1, -3 * k / 2, -3);

    auto& xy = e.eta_fxy;
    add(xy, h, 0, 0, 1, -h - 1, -2);
    add(xy, -h, 1, 0, 1, -3 * k / 2 - 1, -2);
    add(xy, -h, 0, 1, 1, -h - 1, -4);
    add(xy, -2 * k, 1, 1, 0, -k - 1, -3);

    auto& sq = e.eta2_fxy_sq;
    const Scalar k2 = k * k;
    add(sq, -k2 / 2, 0, 1, 2, -k - 2, -6);
    add(sq, -2 * k2, 1, 1, 1, -3 * k / 2 - 2, -5);
    add(sq, -k2 / 2, 1, 0, 2, -2 * k - 2, -4);
    add(sq, k2 / 4, 0, 0, 2, -k - 2, -4, true);
    add(sq, k2 / 4, 2, 0, 2, -3 * k - 2, -4, true);
    add(sq, k2 / 4, 0, 2, 2, -k - 2, -8, true);
    add(sq, 4 * k2, 2, 2, 0, -2 * k - 2, -6, true);
    add(sq, 2 * k2, 1, 2, 1, -3 * k / 2 - 2, -7, true);
    add(sq, k2 / 2, 1, 1, 2, -2 * k - 2, -6, true);
    add(sq, 2 * k2, 2, 1, 1, -5 * k / 2 - 2, -5, true);

    auto& pr = e.eta2_fxx_fyy;
    const Scalar c1 = k2 / 4 + 3 * k / 2;
    add(pr, 6 * k * (k + 1), 1, 1, 0, -k - 2, -4);
    add(pr, 3 * k * (h + 1), 0, 1, 1, -h - 2, -5);
    add(pr, 6 * c1, 1, 1, 1, -3 * k / 2 - 2, -5);
    add(pr, 6 * k, 2, 1, 0, -2 * k - 2, -4);
    add(pr, 4 * k * (k + 1), 1, 1, 1, -3 * k / 2 - 2, -5);
    add(pr, 2 * k, 2, 0, 1, -5 * k / 2 - 2, -3);
    add(pr, 2 * k * (k + 1), 1, 0, 1, -3 * k / 2 - 2, -3);
    add(pr, 6 * k, 3, 1, 0, -3 * k - 2, -4);
    add(pr, 2 * k * (k + 1), 1, 1, 1, -3 * k / 2 - 2, -5);
    add(pr, k, 0, 2, 2, -k - 2, -8);
    add(pr, 6 * k * (k + 1), 2, 1, 0, -2 * k - 2, -4);
    add(pr, 3 * k, 1, 1, 2, -2 * k - 2, -6);
    add(pr, 3 * k * (h + 1), 1, 2, 1, -3 * k / 2 - 2, -7);
    add(pr, k, 0, 0, 3, -3 * k / 2 - 2, -5);
    add(pr, 6 * (k2 / 4 + 3 * k / 2 + 2 * k / 3), 2, 1, 1, -5 * k / 2 - 2, -5);
    add(pr, k / 2, 0, 0, 4, -2 * k - 2, -6);
    add(pr, k * (h + 1), 1, 1, 2, -2 * k - 2, -6);
    add(pr, k, 1, 0, 3, -5 * k / 2 - 2, -5);
    add(pr, k * (h + 1), 0, 2, 1, -h - 2, -7);
    add(pr, 2 * k, 2, 2, 0, -2 * k - 2, -6);
    add(pr, k * (h + 1), 0, 3, 1, -h - 2, -9);
    add(pr, 2 * k * (k + 1), 2, 0, 1, -5 * k / 2 - 2, -3);
    add(pr, 2 * k * (h + 1), 0, 1, 2, -k - 2, -6);
    add(pr, 2 * k * (k + 1), 1, 2, 0, -k - 2, -6);
    add(pr, h * (h + 1), 0, 0, 3, -3 * k / 2 - 2, -5);
    add(pr, c1, 1, 0, 3, -5 * k / 2 - 2, -5);
    add(pr, 3 * k * (h + 1), 0, 2, 1, -h - 2, -7);
    add(pr, 3 * k, 0, 1, 2, -k - 2, -6);
    add(pr, 3 * k * (h + 1), 1, 1, 1, -3 * k / 2 - 2, -5);
    add(pr, 2 * k, 0, 1, 3, -3 * k / 2 - 2, -7);
    add(pr, k * (h + 1), 1, 0, 2, -2 * k - 2, -4);
    add(pr, k * (h + 1), 0, 1, 2, -k - 2, -6);
    add(pr, 4 * c1, 1, 1, 2, -2 * k - 2, -6);
    add(pr, 2 * k, 3, 0, 1, -7 * k / 2 - 2, -3);
    add(pr, k * (3 * k / 2 + 4), 1, 0, 2, -2 * k - 2, -4);
    add(pr, 2 * k * (k + 1), 1, 3, 0, -k - 2, -8);
    add(pr, h * (h + 1), 0, 1, 3, -3 * k / 2 - 2, -7);
    add(pr, 6 * k * (k + 1), 1, 2, 0, -k - 2, -6);
    add(pr, 2 * c1, 1, 2, 1, -3 * k / 2 - 2, -7);
    add(pr, k, 2, 0, 2, -3 * k - 2, -4);
    add(pr, k2 / 2 + k, 0, 0, 2, -k - 2, -4, true);
    add(pr, k2 / 2 + 3 * k, 2, 0, 2, -3 * k - 2, -4, true);
    add(pr, k2 + 2 * k, 0, 2, 2, -k - 2, -8, true);
    add(pr, 6 * k2 + 6 * k, 2, 2, 0, -2 * k - 2, -6, true);
    add(pr, 4 * k2 + 4 * k, 1, 2, 1, -3 * k / 2 - 2, -7, true);
    add(pr, k2 + k, 1, 1, 2, -2 * k - 2, -6, true);
    add(pr, 2 * k2 + 2 * k, 2, 1, 1, -5 * k / 2 - 2, -5, true);
    return e;
}

/// Values of the expanded sums at one point.
template <typename Scalar>
struct HessianCertificate {
    Scalar eta;
    Scalar eta_fxx;
    Scalar eta_fyy;
    Scalar eta_fxy;
    Scalar eta2_fxy_sq;
    Scalar eta2_fxx_fyy;
    Scalar highlighted_fxy_sq;   // highlighted part of eta^2 f_xy^2
    Scalar highlighted_fxx_fyy;  // highlighted part of eta^2 f_xx f_yy
    /// eta^2 (f_xx f_yy - f_xy^2); positive iff the Hessian determinant is.
    Scalar det_surplus;
};

template <typename Scalar>
HessianCertificate<Scalar> hessian_certificate(const Scalar& x, const Scalar& y, const LemmaParams<Scalar>& p) {
    detail::require_lemma_domain(x, y, p);
    const auto e = hessian_expansions(p.kappa);
    HessianCertificate<Scalar> c;
    c.eta = lemma_eta(x, y, p);
    c.eta_fxx = evaluate_sum(e.eta_fxx, x, y, p);
    c.eta_fyy = evaluate_sum(e.eta_fyy, x, y, p);
    c.eta_fxy = evaluate_sum(e.eta_fxy, x, y, p);
    c.eta2_fxy_sq = evaluate_sum(e.eta2_fxy_sq, x, y, p);
    c.eta2_fxx_fyy = evaluate_sum(e.eta2_fxx_fyy, x, y, p);
    c.highlighted_fxy_sq = evaluate_sum(e.eta2_fxy_sq, x, y, p, true);
    c.highlighted_fxx_fyy = evaluate_sum(e.eta2_fxx_fyy, x, y, p, true);
    c.det_surplus = c.eta2_fxx_fyy - c.eta2_fxy_sq;
    return c;
}

}  // namespace uavris
