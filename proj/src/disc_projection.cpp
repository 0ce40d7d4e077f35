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

#include "uavris/disc_projection.hpp"

#include <cmath>

namespace uavris {

Point2 project_onto_disc(const Point2& p, const Disc& d) {
    const Point2 offset = p - d.center;
    const double dist = offset.norm();
    if (dist <= d.radius) return p;
    return d.center + offset * (d.radius / dist);
}

Point2 dykstra_projection(const Point2& p, const Disc& a, const Disc& b, int max_iterations, double tolerance) {
    Point2 x = p;
    Point2 pa = Point2::Zero();
    Point2 pb = Point2::Zero();
    for (int it = 0; it < max_iterations; ++it) {
        const Point2 y = project_onto_disc(x + pa, a);
        pa = x + pa - y;
        const Point2 next = project_onto_disc(y + pb, b);
        pb = y + pb - next;
        const double change = (next - x).norm();
        x = next;
        if (change <= tolerance * (1.0 + a.radius + b.radius)) break;
    }
    return x;
}

Point2 project_onto_disc_intersection(const Point2& p, const Disc& a, const Disc& b) {
    const double tol = 1e-12 * (1.0 + a.radius + b.radius);
    if (contains(a, p, tol) && contains(b, p, tol)) return p;

    const Point2 pa = project_onto_disc(p, a);
    if (contains(b, pa, tol)) return pa;
    const Point2 pb = project_onto_disc(p, b);
    if (contains(a, pb, tol)) return pb;

    // The projection lies on both circles.
    const Point2 axis = b.center - a.center;
    const double d = axis.norm();
    if (d > 0.0) {
        const Point2 e = axis / d;
        const Point2 perp(-e.y(), e.x());
        const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
        const double h2 = a.radius * a.radius - along * along;
        const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
        const Point2 mid = a.center + along * e;
        const Point2 c1 = mid + h * perp;
        const Point2 c2 = mid - h * perp;
        const Point2 best = (c1 - p).squaredNorm() <= (c2 - p).squaredNorm() ? c1 : c2;
        if (contains(a, best, tol) && contains(b, best, tol)) return best;
    }
    return dykstra_projection(p, a, b);
}

}  // namespace uavris
