// Copyright 2026 The rindlersim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <numbers>

#include "rindlersim/linalg.hpp"

namespace rindlersim {

// Acceleration parameter r of the fermionic Bogoliubov transformation,
// valid in [0, pi/4]: r = 0 is the inertial limit, r = pi/4 the infinite
// acceleration limit. Out-of-range values are rejected, never extrapolated.
inline constexpr double kMaxAcceleration = std::numbers::pi / 4;

/// Isometry V taking one Minkowski qubit into the (region I, region II)
/// Rindler pair:
///   V|0> = cos r |00> + sin r |11>,   V|1> = |10>.
/// Returned as a 4x2 matrix with V^dag V = I.
ComplexMatrix mode_isometry(double r);

/// Embed a two-qubit state (A, B) as the three-qubit state (A, I, II) by
/// applying the mode isometry to the second qubit: (I2 (x) V) rho (I2 (x) V)^dag.
DensityMatrix accelerate_second_qubit(const DensityMatrix& rho, double r);

/// Alice-Rob channel: werner(p) pushed through the isometry with the
/// region-II mode traced out.
DensityMatrix alice_rob_state(double p, double r);

/// The same channel written out entry by entry:
///   diag = ((1+p)cos^2 r, 1+sin^2 r - p cos^2 r,
///           (1-p)cos^2 r, 1+sin^2 r + p cos^2 r) / 4,
///   corners (0,3) and (3,0) = 2 p cos(r) / 4.
/// Kept as an independent route for cross-checking alice_rob_state.
ComplexMatrix alice_rob_matrix_closed_form(double p, double r);

}  // namespace rindlersim
