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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace rindlersim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Validation tolerances for density matrices. Anything worse than these is a
// genuine input error, not floating-point noise.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;

/// Density matrix over 2^n dimensions. Construction checks Hermiticity,
/// unit trace and positive semidefiniteness and throws std::invalid_argument
/// on violation, so a DensityMatrix value is valid by construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return mat_; }
  int qubit_count() const { return qubit_count_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
  int qubit_count_;
};

/// Kronecker (tensor) product: entry ((i*db+k),(j*db+l)) = a(i,j)*b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Qubit ordering is big-endian throughout: qubit 0 is the leftmost tensor
// factor, i.e. the most significant bit of the basis index.

/// Trace out qubit `subsystem_index` of an n-qubit matrix.
ComplexMatrix partial_trace(const ComplexMatrix& m, int qubit_count,
                            int subsystem_index);
DensityMatrix partial_trace(const DensityMatrix& rho, int subsystem_index);

/// Transpose one subsystem of a two-qubit matrix. The result of transposing
/// an entangled state need not be positive, hence the plain-matrix return.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int subsystem_index);
ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem_index);

/// Eigenvalues of a Hermitian matrix, ascending. Throws if the input is not
/// Hermitian to within 1e-10.
std::vector<double> eigvals_hermitian(const ComplexMatrix& m);

struct HermitianEigensystem {
  Eigen::VectorXd values;   // ascending
  ComplexMatrix vectors;    // column k pairs with values[k]
};

/// Full eigendecomposition of a Hermitian matrix (same precondition as
/// eigvals_hermitian). Reconstruction residual is within 1e-9.
HermitianEigensystem eigh_hermitian(const ComplexMatrix& m);

/// Von Neumann entropy in bits, -sum(l * log2(l)) with 0*log2(0) = 0.
/// Eigenvalues in [-1e-10, 0) are clamped to zero before the logarithm.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace rindlersim
