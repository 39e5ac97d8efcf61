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

#include "rindlersim/rindler.hpp"

#include <cmath>
#include <stdexcept>

#include "rindlersim/states.hpp"

namespace rindlersim {

namespace {

void check_acceleration(double r) {
  if (!(r >= 0.0 && r <= kMaxAcceleration)) {
    throw std::invalid_argument(
        "acceleration parameter r must lie in [0, pi/4]");
  }
}

}  // namespace

ComplexMatrix mode_isometry(double r) {
  check_acceleration(r);
  ComplexMatrix v = ComplexMatrix::Zero(4, 2);
  v(0, 0) = std::cos(r);
  v(3, 0) = std::sin(r);
  v(2, 1) = 1;
  return v;
}

DensityMatrix accelerate_second_qubit(const DensityMatrix& rho, double r) {
  if (rho.qubit_count() != 2) {
    throw std::invalid_argument(
        "accelerate_second_qubit requires a 2-qubit state");
  }
  const ComplexMatrix w =
      kron(ComplexMatrix::Identity(2, 2), mode_isometry(r));
  return DensityMatrix(w * rho.matrix() * w.adjoint());
}

DensityMatrix alice_rob_state(double p, double r) {
  // Region II is environment only: trace it out immediately (qubit 2 of the
  // (A, I, II) ordering).
  return partial_trace(accelerate_second_qubit(werner(p), r), 2);
}

ComplexMatrix alice_rob_matrix_closed_form(double p, double r) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner weight p must lie in [0, 1]");
  }
  check_acceleration(r);
  const double c = std::cos(r);
  const double c2 = c * c;
  const double s2 = std::sin(r) * std::sin(r);
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = (1 + p) * c2;
  m(1, 1) = 1 + s2 - p * c2;
  m(2, 2) = (1 - p) * c2;
  m(3, 3) = 1 + s2 + p * c2;
  m(0, 3) = m(3, 0) = 2 * p * c;
  return m / 4.0;
}

}  // namespace rindlersim
