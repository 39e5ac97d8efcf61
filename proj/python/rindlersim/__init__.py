# Copyright 2026 The rindlersim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum teleportation over a werner channel with an accelerated receiver."""

from rindlersim._core import (
    MAX_ACCELERATION,
    ClassicalCorrelationResult,
    CorrelationReport,
    DensityMatrix,
    FidelityPair,
    MeasuredSide,
    MeasurementBasis,
    ObservedState,
    PureQubit,
    SweepOutputs,
    SweepSpec,
    TeleportOutcome,
    TeleportReport,
    accelerate_second_qubit,
    alice_rob_matrix_closed_form,
    alice_rob_state,
    bell_phi_plus,
    classical_correlation,
    cnot,
    discord,
    eigvals_hermitian,
    fidelity_closed_form,
    figure_preset,
    hadamard,
    kron,
    linspace,
    min_fidelity,
    mode_isometry,
    mutual_information,
    negativity,
    observe_post_teleport,
    partial_trace,
    partial_transpose,
    pauli_x,
    pauli_z,
    run_protocol,
    selfcheck,
    sweep_csv,
    validate,
    von_neumann_entropy,
    werner,
)

__all__ = [
    "MAX_ACCELERATION",
    "ClassicalCorrelationResult",
    "CorrelationReport",
    "DensityMatrix",
    "FidelityPair",
    "MeasuredSide",
    "MeasurementBasis",
    "ObservedState",
    "PureQubit",
    "SweepOutputs",
    "SweepSpec",
    "TeleportOutcome",
    "TeleportReport",
    "accelerate_second_qubit",
    "alice_rob_matrix_closed_form",
    "alice_rob_state",
    "bell_phi_plus",
    "classical_correlation",
    "cnot",
    "discord",
    "eigvals_hermitian",
    "fidelity_closed_form",
    "figure_preset",
    "hadamard",
    "kron",
    "linspace",
    "min_fidelity",
    "mode_isometry",
    "mutual_information",
    "negativity",
    "observe_post_teleport",
    "partial_trace",
    "partial_transpose",
    "pauli_x",
    "pauli_z",
    "run_protocol",
    "selfcheck",
    "sweep_csv",
    "validate",
    "von_neumann_entropy",
    "werner",
]
