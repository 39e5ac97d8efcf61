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

#include "rindlersim/linalg.hpp"

namespace rindlersim {

/// Rank-1 von Neumann measurement direction on the Bloch sphere:
/// |m> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>, projectors
/// P0 = |m><m| and P1 = I - P0.
struct MeasurementBasis {
  double theta = 0;  // [0, pi]
  double phi = 0;    // [0, 2 pi)

  Eigen::Vector2cd ket() const;
  Eigen::Vector2cd orthogonal_ket() const;
  ComplexMatrix projector() const;  // P0
};

/// Which qubit of a two-qubit state the von Neumann measurement acts on.
/// Discord is asymmetric, so the choice matters.
enum class MeasuredSide { A, B };

/// Quantum mutual information S(rho_A) + S(rho_B) - S(rho), in bits.
double mutual_information(const DensityMatrix& rho);

struct ClassicalCorrelationResult {
  double value;             // bits
  MeasurementBasis argmax;  // maximizing measurement direction
  double grid_value;        // best value on the coarse grid, before refinement
  int evals;                // total objective evaluations
};

/// Classical correlation: the maximum over rank-1 von Neumann measurements
/// {P_k} on the chosen side of
///   J = S(rho_unmeasured) - sum_k q_k S(rho_{unmeasured|k}),
/// with q_k the outcome probability. Branches with q_k < 1e-14 contribute 0.
/// Maximization: 64x64 uniform (theta, phi) grid, then Nelder-Mead
/// refinement from the best grid point until the simplex value spread drops
/// below 1e-9. The refined value never falls below the grid value.
ClassicalCorrelationResult classical_correlation(
    const DensityMatrix& rho, MeasuredSide side = MeasuredSide::B);

struct CorrelationReport {
  double mutual_information;
  double classical_correlation;
  double discord;  // mutual_information - classical_correlation, clamped at 0
  double negativity;
  int optimizer_evals;
  MeasurementBasis optimizer_argmax;
};

/// Full correlation report for a two-qubit state. Discord values within
/// 1e-9 below zero are clamped to zero.
CorrelationReport discord(const DensityMatrix& rho,
                          MeasuredSide side = MeasuredSide::B);

/// Logarithmic negativity log2 of the trace norm of the partial transpose
/// (over the second subsystem). Zero for PPT states; |value| < 1e-10 is
/// clamped to zero.
double negativity(const DensityMatrix& rho);

}  // namespace rindlersim
