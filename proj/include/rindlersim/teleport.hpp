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

#include <array>

#include "rindlersim/states.hpp"

namespace rindlersim {

/// One measurement branch of the protocol. `conditional_state` is Rob's
/// qubit after Alice's outcome (i, j) and before correction;
/// `corrected_state` is Z^i X^j conditional (Z^i X^j)^dag; `fidelity` is
/// <psi| corrected |psi>.
struct TeleportOutcome {
  int i;
  int j;
  double probability;
  DensityMatrix conditional_state;
  DensityMatrix corrected_state;
  double fidelity;
  // Probability fell below 1e-14 and the branch was skipped; the state
  // fields then hold the maximally mixed placeholder. Never set for the
  // supported channels, whose branches all carry probability 1/4.
  bool negligible = false;
};

struct TeleportReport {
  std::array<TeleportOutcome, 4> outcomes;  // order (0,0), (0,1), (1,0), (1,1)
  double min_fidelity;
  double avg_fidelity;  // probability-weighted
};

/// Run the full protocol from first principles: build |psi><psi| (x) channel,
/// apply CNOT (control: psi qubit, target: channel qubit A) and Hadamard on
/// the psi qubit, project Alice's two qubits onto each |ij>, trace down to
/// Rob's qubit and apply his correction. The channel is any valid two-qubit
/// state; werner(p) gives the inertial run and alice_rob_state(p, r) the
/// accelerated one.
TeleportReport run_protocol(const PureQubit& psi, const DensityMatrix& channel);

struct FidelityPair {
  double f_i0;
  double f_i1;
};

/// Closed-form branch fidelities for the werner/alice_rob channel family.
/// With a = |alpha|^2, b = |beta|^2:
///   F_i0 = ( b^2 [2-(1-p)cos^2 r] + a^2 (1+p) cos^2 r
///            + 2ab [p cos r (2-cos r) + 1] ) / 2
///   F_i1 = F_i0 + (a - b) sin^2 r
/// independent of Alice's i outcome. Cross-validated against run_protocol.
FidelityPair fidelity_closed_form(const PureQubit& psi, double p, double r);

/// min(F_i0, F_i1): the operational figure of merit when the sender does not
/// know which state is being teleported. Computed by taking the numeric
/// minimum, not by a sign analysis.
double min_fidelity(const PureQubit& psi, double p, double r);

struct ObservedState {
  DensityMatrix state;
  double fidelity;
};

/// Observation-mode variant: teleport inertially first, then view the
/// already-corrected branch state from the accelerated frame. Forms
/// |phi_ij> = X^j Z^i |psi>, pushes it through the mode isometry, traces out
/// region II and applies Z^i X^j. In this single-rail basis the result may
/// depend on (i, j).
ObservedState observe_post_teleport(const PureQubit& psi, int i, int j,
                                    double r);

}  // namespace rindlersim
