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

#include "rindlersim/linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rindlersim {

namespace {

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

int qubit_count_for_dim(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim) {
    d *= 2;
    ++n;
  }
  if (d != dim) return -1;
  return n;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() < 1) {
    throw std::invalid_argument("density matrix must be square");
  }
  qubit_count_ = qubit_count_for_dim(mat_.rows());
  if (qubit_count_ < 0) {
    throw std::invalid_argument("density matrix dimension must be a power of 2");
  }
  if (double h = hermiticity_defect(mat_); h > kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << h << ")";
    throw std::invalid_argument(msg.str());
  }
  if (double t = std::abs(mat_.trace() - Complex(1.0)); t > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace differs from 1 by " << t;
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(mat_,
                                                      Eigen::EigenvaluesOnly);
  if (double lo = solver.eigenvalues().minCoeff(); lo < -kPsdTol) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << lo;
    throw std::invalid_argument(msg.str());
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index ar = a.rows(), ac = a.cols();
  const Eigen::Index br = b.rows(), bc = b.cols();
  ComplexMatrix out(ar * br, ac * bc);
  for (Eigen::Index i = 0; i < ar; ++i)
    for (Eigen::Index j = 0; j < ac; ++j)
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int qubit_count,
                            int subsystem_index) {
  if (subsystem_index < 0 || subsystem_index >= qubit_count) {
    throw std::invalid_argument("partial_trace: subsystem index out of range");
  }
  if (m.rows() != (Eigen::Index{1} << qubit_count) || m.rows() != m.cols()) {
    throw std::invalid_argument("partial_trace: matrix/qubit count mismatch");
  }
  const Eigen::Index dim = Eigen::Index{1} << (qubit_count - 1);
  // Bits below the traced qubit in the big-endian index.
  const int low_bits = qubit_count - 1 - subsystem_index;
  const Eigen::Index low_mask = (Eigen::Index{1} << low_bits) - 1;
  auto embed = [&](Eigen::Index x, Eigen::Index t) {
    return ((x >> low_bits) << (low_bits + 1)) | (t << low_bits) |
           (x & low_mask);
  };
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x)
    for (Eigen::Index y = 0; y < dim; ++y)
      for (Eigen::Index t = 0; t < 2; ++t)
        out(x, y) += m(embed(x, t), embed(y, t));
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, int subsystem_index) {
  return DensityMatrix(
      partial_trace(rho.matrix(), rho.qubit_count(), subsystem_index));
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int subsystem_index) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw std::invalid_argument("partial_transpose requires a 4x4 matrix");
  }
  if (subsystem_index != 0 && subsystem_index != 1) {
    throw std::invalid_argument("partial_transpose: subsystem must be 0 or 1");
  }
  ComplexMatrix out(4, 4);
  for (Eigen::Index a = 0; a < 2; ++a)
    for (Eigen::Index b = 0; b < 2; ++b)
      for (Eigen::Index c = 0; c < 2; ++c)
        for (Eigen::Index d = 0; d < 2; ++d) {
          // Row (a,b), column (c,d); transposing swaps the chosen factor's
          // row/column bits.
          if (subsystem_index == 0)
            out(2 * a + b, 2 * c + d) = m(2 * c + b, 2 * a + d);
          else
            out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
        }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho,
                                int subsystem_index) {
  if (rho.qubit_count() != 2) {
    throw std::invalid_argument("partial_transpose requires a 2-qubit state");
  }
  return partial_transpose(rho.matrix(), subsystem_index);
}

namespace {

Eigen::SelfAdjointEigenSolver<ComplexMatrix> hermitian_solver(
    const ComplexMatrix& m, bool vectors) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigensolver requires a square matrix");
  }
  if (double h = hermiticity_defect(m); h > 1e-10) {
    std::ostringstream msg;
    msg << "eigensolver input is not Hermitian (defect " << h << ")";
    throw std::invalid_argument(msg.str());
  }
  return Eigen::SelfAdjointEigenSolver<ComplexMatrix>(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
}

}  // namespace

std::vector<double> eigvals_hermitian(const ComplexMatrix& m) {
  auto solver = hermitian_solver(m, false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

HermitianEigensystem eigh_hermitian(const ComplexMatrix& m) {
  auto solver = hermitian_solver(m, true);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0;
  for (double lambda : eigvals_hermitian(rho.matrix())) {
    if (lambda <= 0) continue;  // clamp [-1e-10, 0) noise; 0 log 0 = 0
    s -= lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace rindlersim
