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

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>

namespace uavris {

/// A named random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; uniform and Gaussian variates are
/// derived here rather than through <random> distributions so the draws are
/// identical across standard library implementations.
///
/// Stream derivation: state = splitmix64(splitmix64(seed) ^ fnv1a64(tag)).
/// Distinct tags give independent streams for the same experiment seed.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::string_view tag);

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller (one variate per two uniforms).
    double normal();
    /// Circularly symmetric complex Gaussian with unit variance:
    /// real and imaginary parts i.i.d. N(0, 1/2).
    std::complex<double> cscg();

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace uavris
