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

#include "rindlersim/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rindlersim/rindler.hpp"

namespace rindlersim {

namespace {

// Branches below this probability carry no usable state; they are flagged
// rather than normalized (dividing by ~0 would amplify noise into a bogus
// density matrix).
constexpr double kNegligibleProbability = 1e-14;

void check_bit(int value, const char* name) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument(std::string(name) + " must be 0 or 1");
  }
}

void check_channel_params(double p, double r) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner weight p must lie in [0, 1]");
  }
  if (!(r >= 0.0 && r <= kMaxAcceleration)) {
    throw std::invalid_argument(
        "acceleration parameter r must lie in [0, pi/4]");
  }
}

double state_fidelity(const PureQubit& psi, const ComplexMatrix& rho) {
  const Eigen::Vector2cd a = psi.amplitudes();
  return std::clamp((a.adjoint() * rho * a).value().real(), 0.0, 1.0);
}

}  // namespace

TeleportReport run_protocol(const PureQubit& psi,
                            const DensityMatrix& channel) {
  if (channel.qubit_count() != 2) {
    throw std::invalid_argument(
        "teleportation channel must be a 2-qubit state");
  }
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix cnot01 = kron(cnot(), id2);
  const ComplexMatrix h0 = kron(hadamard(), ComplexMatrix::Identity(4, 4));
  ComplexMatrix rho = kron(psi.density().matrix(), channel.matrix());
  rho = cnot01 * rho * cnot01.adjoint();
  rho = h0 * rho * h0.adjoint();

  const DensityMatrix placeholder(id2 / 2.0);
  auto branch = [&](int i, int j) -> TeleportOutcome {
    const Eigen::Index base = 4 * i + 2 * j;
    const ComplexMatrix block = rho.block(base, base, 2, 2);
    const double probability = std::max(block.trace().real(), 0.0);
    if (probability < kNegligibleProbability) {
      // The placeholder keeps fidelity = <psi| state |psi> self-consistent.
      return {i, j, probability, placeholder, placeholder, 0.5, true};
    }
    const ComplexMatrix conditional = block / probability;
    const ComplexMatrix g = ((i == 1) ? pauli_z() : id2) *
                            ((j == 1) ? pauli_x() : id2);
    const ComplexMatrix corrected = g * conditional * g.adjoint();
    return {i,
            j,
            probability,
            DensityMatrix(conditional),
            DensityMatrix(corrected),
            state_fidelity(psi, corrected),
            false};
  };

  TeleportReport report{
      {branch(0, 0), branch(0, 1), branch(1, 0), branch(1, 1)}, 0.0, 0.0};
  double min_f = std::numeric_limits<double>::infinity();
  double avg = 0.0;
  for (const TeleportOutcome& outcome : report.outcomes) {
    if (outcome.negligible) continue;
    min_f = std::min(min_f, outcome.fidelity);
    avg += outcome.probability * outcome.fidelity;
  }
  report.min_fidelity = min_f;
  report.avg_fidelity = avg;
  return report;
}

FidelityPair fidelity_closed_form(const PureQubit& psi, double p, double r) {
  check_channel_params(p, r);
  const double a = std::norm(psi.alpha());
  const double b = std::norm(psi.beta());
  const double c = std::cos(r);
  const double c2 = c * c;
  const double s2 = std::sin(r) * std::sin(r);
  const double f_i0 = (b * b * (2 - (1 - p) * c2) + a * a * (1 + p) * c2 +
                       2 * a * b * (p * c * (2 - c) + 1)) /
                      2;
  const double f_i1 = f_i0 + (a - b) * s2;
  return {std::clamp(f_i0, 0.0, 1.0), std::clamp(f_i1, 0.0, 1.0)};
}

double min_fidelity(const PureQubit& psi, double p, double r) {
  const FidelityPair f = fidelity_closed_form(psi, p, r);
  return std::min(f.f_i0, f.f_i1);
}

ObservedState observe_post_teleport(const PureQubit& psi, int i, int j,
                                    double r) {
  check_bit(i, "measurement outcome i");
  check_bit(j, "measurement outcome j");
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix zi = (i == 1) ? pauli_z() : id2;
  const ComplexMatrix xj = (j == 1) ? pauli_x() : id2;

  // The branch state Bob holds before correction, X^j Z^i |psi>, viewed from
  // the accelerated frame with the causally disconnected region traced out.
  const Eigen::Vector2cd phi_ij = xj * zi * psi.amplitudes();
  const Eigen::Vector4cd embedded = mode_isometry(r) * phi_ij;
  const ComplexMatrix region_i =
      partial_trace(ComplexMatrix(embedded * embedded.adjoint()), 2, 1);

  const ComplexMatrix g = zi * xj;
  const ComplexMatrix corrected = g * region_i * g.adjoint();
  return {DensityMatrix(corrected), state_fidelity(psi, corrected)};
}

}  // namespace rindlersim
