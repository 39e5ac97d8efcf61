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

/// One-qubit pure state alpha|0> + beta|1>. Amplitudes are renormalized on
/// construction; the global phase is kept as given (fidelities are phase
/// invariant, so no canonical form is imposed).
class PureQubit {
 public:
  PureQubit(Complex alpha, Complex beta);

  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  Eigen::Vector2cd amplitudes() const { return {alpha_, beta_}; }
  DensityMatrix density() const;

 private:
  Complex alpha_;
  Complex beta_;
};

/// |Phi+><Phi+| with |Phi+> = (|00> + |11>)/sqrt(2).
DensityMatrix bell_phi_plus();

/// Pseudo-entangled channel (1-p)/4 * I + p |Phi+><Phi+|, p in [0, 1].
/// Entangled iff p > 1/3.
DensityMatrix werner(double p);

// Gates. CNOT control is qubit 0 (Alice's first qubit), target qubit 1.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_z();
const ComplexMatrix& hadamard();
const ComplexMatrix& cnot();

}  // namespace rindlersim
