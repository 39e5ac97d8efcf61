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

#include <random>

#include "rindlersim/linalg.hpp"

namespace rindlersim::testing {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// Deterministic generator for property tests. Raw engine words are scaled by
// hand because std::uniform_real_distribution output is implementation
// defined and these tests freeze expected values.
class TestRng {
 public:
  explicit TestRng(unsigned seed) : gen_(seed) {}

  double uniform() { return gen_() * (1.0 / 4294967296.0); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Complex complex_unit_box() {
    return {2 * uniform() - 1, 2 * uniform() - 1};
  }

  ComplexMatrix ginibre(Eigen::Index dim) {
    ComplexMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = complex_unit_box();
    return g;
  }

  // G G^dag normalized to unit trace: a full-rank random density matrix.
  DensityMatrix density(Eigen::Index dim) {
    const ComplexMatrix g = ginibre(dim);
    ComplexMatrix m = g * g.adjoint();
    m /= m.trace();
    return DensityMatrix(std::move(m));
  }

  ComplexMatrix hermitian(Eigen::Index dim) {
    const ComplexMatrix g = ginibre(dim);
    return (g + g.adjoint()) / 2;
  }

  // Q factor of a random complex matrix; unitary to working precision.
  ComplexMatrix unitary(Eigen::Index dim) {
    const Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(dim));
    return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  }

 private:
  std::mt19937 gen_;
};

}  // namespace rindlersim::testing
