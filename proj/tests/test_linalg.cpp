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

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "rindlersim/linalg.hpp"
#include "rindlersim/rindler.hpp"
#include "rindlersim/states.hpp"

using namespace rindlersim;
using rindlersim::testing::max_abs_diff;
using rindlersim::testing::TestRng;

namespace {

ComplexMatrix basis_projector(int dim, int k) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(k, k) = 1;
  return m;
}

}  // namespace

TEST_CASE("density matrix construction validates its invariants") {
  CHECK_NOTHROW(DensityMatrix(ComplexMatrix::Identity(4, 4) / 4.0));

  ComplexMatrix rectangular = ComplexMatrix::Zero(2, 4);
  CHECK_THROWS_AS(DensityMatrix{rectangular}, std::invalid_argument);

  ComplexMatrix odd = ComplexMatrix::Identity(3, 3) / 3.0;
  CHECK_THROWS_AS(DensityMatrix{odd}, std::invalid_argument);

  ComplexMatrix non_hermitian = ComplexMatrix::Identity(2, 2) / 2.0;
  non_hermitian(0, 1) = Complex(0, 1e-6);
  CHECK_THROWS_AS(DensityMatrix{non_hermitian}, std::invalid_argument);

  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Identity(2, 2)),
                  std::invalid_argument);

  ComplexMatrix indefinite = ComplexMatrix::Zero(2, 2);
  indefinite(0, 0) = 1.5;
  indefinite(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{indefinite}, std::invalid_argument);
}

TEST_CASE("density matrix exposes dimension data") {
  const DensityMatrix rho(ComplexMatrix::Identity(8, 8) / 8.0);
  CHECK(rho.qubit_count() == 3);
  CHECK(rho.dim() == 8);
}

TEST_CASE("kron basis cases") {
  const ComplexMatrix id2 = ComplexMatrix::Identity(2, 2);
  CHECK(max_abs_diff(kron(id2, id2), ComplexMatrix::Identity(4, 4)) == 0);

  ComplexMatrix z_i = kron(pauli_z(), id2);
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 0) = expected(1, 1) = 1;
  expected(2, 2) = expected(3, 3) = -1;
  CHECK(max_abs_diff(z_i, expected) == 0);

  CHECK(max_abs_diff(kron(basis_projector(2, 0), basis_projector(2, 1)),
                     basis_projector(4, 1)) == 0);
}

TEST_CASE("kron trace is multiplicative on random inputs") {
  TestRng rng(101);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = rng.ginibre(4);
    const ComplexMatrix b = rng.ginibre(2);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
  }
}

TEST_CASE("partial trace of the bell state gives maximally mixed marginals") {
  const ComplexMatrix half = ComplexMatrix::Identity(2, 2) / 2.0;
  CHECK(max_abs_diff(partial_trace(bell_phi_plus(), 0).matrix(), half) <
        1e-15);
  CHECK(max_abs_diff(partial_trace(bell_phi_plus(), 1).matrix(), half) <
        1e-15);
}

TEST_CASE("partial trace of a product state recovers each factor") {
  TestRng rng(202);
  const DensityMatrix a = rng.density(2);
  const DensityMatrix b = rng.density(2);
  const DensityMatrix ab(kron(a.matrix(), b.matrix()));
  CHECK(max_abs_diff(partial_trace(ab, 1).matrix(), a.matrix()) < 1e-14);
  CHECK(max_abs_diff(partial_trace(ab, 0).matrix(), b.matrix()) < 1e-14);
}

TEST_CASE("partial trace over the environment matches the channel closed form") {
  const DensityMatrix enlarged = accelerate_second_qubit(werner(0.5), 0.3);
  CHECK(max_abs_diff(partial_trace(enlarged, 2).matrix(),
                     alice_rob_matrix_closed_form(0.5, 0.3)) < 1e-14);
}

TEST_CASE("partial trace is linear and trace preserving") {
  TestRng rng(303);
  const ComplexMatrix h1 = rng.hermitian(8);
  const ComplexMatrix h2 = rng.hermitian(8);
  for (int index = 0; index < 3; ++index) {
    CHECK(std::abs(partial_trace(h1, 3, index).trace() - h1.trace()) < 1e-12);
    const ComplexMatrix lhs = partial_trace(0.7 * h1 + 1.3 * h2, 3, index);
    const ComplexMatrix rhs =
        0.7 * partial_trace(h1, 3, index) + 1.3 * partial_trace(h2, 3, index);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("partial trace rejects out-of-range subsystems") {
  const DensityMatrix rho(ComplexMatrix::Identity(4, 4) / 4.0);
  CHECK_THROWS_AS(partial_trace(rho, 2), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, -1), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho.matrix(), 3, 0), std::invalid_argument);
}

TEST_CASE("partial transpose of a product state transposes one factor") {
  TestRng rng(404);
  const DensityMatrix a = rng.density(2);
  const DensityMatrix b = rng.density(2);
  const DensityMatrix ab(kron(a.matrix(), b.matrix()));
  const ComplexMatrix pt = partial_transpose(ab, 1);
  CHECK(max_abs_diff(pt, kron(a.matrix(), b.matrix().transpose())) < 1e-14);
  // Separable, so the partial transpose is still a state.
  CHECK_NOTHROW(DensityMatrix{pt});
}

TEST_CASE("partial transpose of the bell state has eigenvalues -1/2, 1/2 x3") {
  const std::vector<double> eigs =
      eigvals_hermitian(partial_transpose(bell_phi_plus(), 1));
  CHECK(eigs[0] == doctest::Approx(-0.5).epsilon(1e-12));
  for (int k = 1; k < 4; ++k) {
    CHECK(eigs[k] == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("partial transpose is an involution and preserves structure") {
  TestRng rng(505);
  for (int index = 0; index < 2; ++index) {
    const DensityMatrix rho = rng.density(4);
    const ComplexMatrix pt = partial_transpose(rho, index);
    CHECK(max_abs_diff(partial_transpose(pt, index), rho.matrix()) == 0);
    CHECK(max_abs_diff(pt, pt.adjoint()) < 1e-15);
    CHECK(std::abs(pt.trace() - Complex(1.0)) < 1e-14);

    const ComplexMatrix h = rng.hermitian(4);
    CHECK(max_abs_diff(partial_transpose(partial_transpose(h, index), index),
                       h) == 0);
  }
}

TEST_CASE("partial transpose rejects bad shapes and indices") {
  CHECK_THROWS_AS(partial_transpose(ComplexMatrix::Identity(8, 8) / 8.0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partial_transpose(DensityMatrix(
                      ComplexMatrix::Identity(8, 8) / 8.0), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(partial_transpose(ComplexMatrix::Identity(4, 4) / 4.0, 2),
                  std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues: fixed spectra") {
  const std::vector<double> quarter =
      eigvals_hermitian(ComplexMatrix::Identity(4, 4) / 4.0);
  for (double v : quarter) CHECK(v == doctest::Approx(0.25).epsilon(1e-14));

  const std::vector<double> z = eigvals_hermitian(pauli_z());
  CHECK(z[0] == doctest::Approx(-1).epsilon(1e-14));
  CHECK(z[1] == doctest::Approx(1).epsilon(1e-14));

  const std::vector<double> w = eigvals_hermitian(werner(0.7).matrix());
  for (int k = 0; k < 3; ++k) {
    CHECK(w[k] == doctest::Approx(0.075).epsilon(1e-12));
  }
  CHECK(w[3] == doctest::Approx(0.775).epsilon(1e-12));
}

TEST_CASE("hermitian eigenvalues are ascending, trace-consistent, and "
          "invariant under unitary conjugation") {
  TestRng rng(606);
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix h = rng.hermitian(4);
    const std::vector<double> eigs = eigvals_hermitian(h);
    double sum = 0;
    for (size_t k = 0; k < eigs.size(); ++k) {
      sum += eigs[k];
      if (k > 0) CHECK(eigs[k] >= eigs[k - 1]);
    }
    CHECK(std::abs(sum - h.trace().real()) < 1e-10);

    const ComplexMatrix u = rng.unitary(4);
    const std::vector<double> conj =
        eigvals_hermitian(ComplexMatrix(u * h * u.adjoint()));
    for (size_t k = 0; k < eigs.size(); ++k) {
      CHECK(std::abs(eigs[k] - conj[k]) < 1e-9);
    }
  }
}

TEST_CASE("hermitian eigendecomposition reconstructs the input") {
  TestRng rng(707);
  const ComplexMatrix h = rng.hermitian(8);
  const HermitianEigensystem es = eigh_hermitian(h);
  const ComplexMatrix rebuilt =
      es.vectors * es.values.asDiagonal() * es.vectors.adjoint();
  CHECK(max_abs_diff(rebuilt, h) < 1e-9);
}

TEST_CASE("eigensolver rejects non-hermitian input") {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = 1;
  CHECK_THROWS_AS(eigvals_hermitian(m), std::invalid_argument);
  CHECK_THROWS_AS(eigh_hermitian(m), std::invalid_argument);
}

TEST_CASE("von neumann entropy: fixed values") {
  CHECK(von_neumann_entropy(PureQubit(1, 0).density()) == 0);
  CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::Identity(4, 4) /
                                          4.0)) ==
        doctest::Approx(2).epsilon(1e-14));
  CHECK(von_neumann_entropy(werner(0.5)) ==
        doctest::Approx(1.5487949406953987).epsilon(1e-12));
}

TEST_CASE("von neumann entropy is unitarily invariant and additive") {
  TestRng rng(808);
  const DensityMatrix rho = rng.density(4);
  const ComplexMatrix u = rng.unitary(4);
  const DensityMatrix rotated(ComplexMatrix(u * rho.matrix() * u.adjoint()));
  CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) <
        1e-9);

  const DensityMatrix sigma = rng.density(2);
  const DensityMatrix product(kron(rho.matrix(), sigma.matrix()));
  CHECK(std::abs(von_neumann_entropy(product) - von_neumann_entropy(rho) -
                 von_neumann_entropy(sigma)) < 1e-9);
}
