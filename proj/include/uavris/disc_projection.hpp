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

#include "uavris/scenario.hpp"

namespace uavris {

struct Disc {
    Point2 center;
    double radius;
};

inline bool contains(const Disc& d, const Point2& p, double tolerance = 0.0) {
    return (p - d.center).norm() <= d.radius + tolerance;
}

Point2 project_onto_disc(const Point2& p, const Disc& d);

/// Euclidean projection onto the intersection of two discs. Uses the exact
/// case analysis (interior, one boundary, or a circle-circle intersection
/// point) and falls back to Dykstra's algorithm when the closed form does
/// not land inside both discs. The intersection must be non-empty.
Point2 project_onto_disc_intersection(const Point2& p, const Disc& a, const Disc& b);

/// Dykstra's alternating projections onto a ∩ b.
Point2 dykstra_projection(const Point2& p, const Disc& a, const Disc& b, int max_iterations = 10000,
                          double tolerance = 1e-13);

}  // namespace uavris
