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

#include "rindlersim/states.hpp"

#include <cmath>
#include <stdexcept>

namespace rindlersim {

PureQubit::PureQubit(Complex alpha, Complex beta) {
  const double norm2 = std::norm(alpha) + std::norm(beta);
  if (norm2 <= 0) {
    throw std::invalid_argument("pure qubit amplitudes must not both be zero");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  alpha_ = alpha * inv;
  beta_ = beta * inv;
}

DensityMatrix PureQubit::density() const {
  const Eigen::Vector2cd v = amplitudes();
  return DensityMatrix(v * v.adjoint());
}

DensityMatrix bell_phi_plus() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix(std::move(m));
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("werner weight p must lie in [0, 1]");
  }
  ComplexMatrix m = (1.0 - p) / 4.0 * ComplexMatrix::Identity(4, 4) +
                    p * bell_phi_plus().matrix();
  return DensityMatrix(std::move(m));
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m = [] {
    ComplexMatrix g(2, 2);
    g << 0, 1, 1, 0;
    return g;
  }();
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m = [] {
    ComplexMatrix g(2, 2);
    g << 1, 0, 0, -1;
    return g;
  }();
  return m;
}

const ComplexMatrix& hadamard() {
  static const ComplexMatrix m = [] {
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix g(2, 2);
    g << s, s, s, -s;
    return g;
  }();
  return m;
}

const ComplexMatrix& cnot() {
  static const ComplexMatrix m = [] {
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    g(0, 0) = g(1, 1) = g(2, 3) = g(3, 2) = 1;
    return g;
  }();
  return m;
}

}  // namespace rindlersim
