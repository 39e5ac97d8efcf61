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

#include "rindlersim/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rindlersim {

namespace {

constexpr double kNegligibleOutcome = 1e-14;
constexpr int kGridPoints = 64;
constexpr double kSimplexSpreadTol = 1e-9;
constexpr int kMaxSimplexIters = 400;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * std::numbers::pi;

double xlog2(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

// Entropy in bits of a Hermitian PSD 2x2 matrix [x00 x01; conj(x01) x11],
// from the closed-form eigenvalues.
double hermitian2_entropy(double x00, double x11, Complex x01) {
  const double t = x00 + x11;
  const double d = std::hypot(x00 - x11, 2 * std::abs(x01));
  return -xlog2((t + d) / 2) - xlog2((t - d) / 2);
}

void check_two_qubits(const DensityMatrix& rho, const char* op) {
  if (rho.qubit_count() != 2) {
    throw std::invalid_argument(std::string(op) +
                                " requires a 2-qubit state");
  }
}

// J(theta, phi) for a fixed state, stored with the measured qubit as the
// second tensor factor so one evaluation is pure 2x2 arithmetic: per
// projector |v>, K[a,a'] = <v|B(a,a')|v> over the four 2x2 blocks B of rho,
// giving the outcome weight q = tr K and the conditional marginal K/q.
class JObjective {
 public:
  JObjective(const DensityMatrix& rho, MeasuredSide side) {
    const ComplexMatrix& m = rho.matrix();
    if (side == MeasuredSide::B) {
      rho_ = m;
    } else {
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int a2 = 0; a2 < 2; ++a2)
            for (int b2 = 0; b2 < 2; ++b2)
              rho_(2 * a + b, 2 * a2 + b2) = m(2 * b + a, 2 * b2 + a2);
    }
    unmeasured_entropy_ = hermitian2_entropy(
        (rho_(0, 0) + rho_(1, 1)).real(), (rho_(2, 2) + rho_(3, 3)).real(),
        rho_(0, 2) + rho_(1, 3));
  }

  double unmeasured_entropy() const { return unmeasured_entropy_; }

  double operator()(double theta, double phi) const {
    const double ct = std::cos(theta / 2);
    const double st = std::sin(theta / 2);
    const std::array<Complex, 2> m{Complex(ct), std::polar(st, phi)};
    const std::array<Complex, 2> m_perp{-std::polar(st, -phi), Complex(ct)};
    return unmeasured_entropy_ - branch_term(m) - branch_term(m_perp);
  }

 private:
  // q_k S(rho_{unmeasured|k}) for the projector onto |v>.
  double branch_term(const std::array<Complex, 2>& v) const {
    auto block = [&](int a, int a2) {
      return std::conj(v[0]) * (rho_(2 * a, 2 * a2) * v[0] +
                                rho_(2 * a, 2 * a2 + 1) * v[1]) +
             std::conj(v[1]) * (rho_(2 * a + 1, 2 * a2) * v[0] +
                                rho_(2 * a + 1, 2 * a2 + 1) * v[1]);
    };
    const double k00 = block(0, 0).real();
    const double k11 = block(1, 1).real();
    const double q = k00 + k11;
    if (q < kNegligibleOutcome) return 0.0;
    const double d = std::hypot(k00 - k11, 2 * std::abs(block(0, 1)));
    return xlog2(q) - xlog2((q + d) / 2) - xlog2((q - d) / 2);
  }

  Eigen::Matrix4cd rho_;
  double unmeasured_entropy_;
};

// Map an unconstrained optimizer iterate back into theta in [0, pi],
// phi in [0, 2 pi). |m(2 pi - theta, phi + pi)> = -|m(theta, phi)>, so the
// reflection leaves the projector unchanged.
MeasurementBasis normalize_basis(double theta, double phi) {
  theta = std::fmod(theta, kTwoPi);
  if (theta < 0) theta += kTwoPi;
  if (theta > kPi) {
    theta = kTwoPi - theta;
    phi += kPi;
  }
  phi = std::fmod(phi, kTwoPi);
  if (phi < 0) phi += kTwoPi;
  return {theta, phi};
}

}  // namespace

Eigen::Vector2cd MeasurementBasis::ket() const {
  return {Complex(std::cos(theta / 2)), std::polar(std::sin(theta / 2), phi)};
}

Eigen::Vector2cd MeasurementBasis::orthogonal_ket() const {
  return {-std::polar(std::sin(theta / 2), -phi), Complex(std::cos(theta / 2))};
}

ComplexMatrix MeasurementBasis::projector() const {
  const Eigen::Vector2cd m = ket();
  return m * m.adjoint();
}

double mutual_information(const DensityMatrix& rho) {
  check_two_qubits(rho, "mutual information");
  return von_neumann_entropy(partial_trace(rho, 1)) +
         von_neumann_entropy(partial_trace(rho, 0)) -
         von_neumann_entropy(rho);
}

ClassicalCorrelationResult classical_correlation(const DensityMatrix& rho,
                                                 MeasuredSide side) {
  check_two_qubits(rho, "classical correlation");
  const JObjective objective(rho, side);

  int evals = 0;
  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0;
  double best_phi = 0;
  auto eval = [&](double theta, double phi) {
    ++evals;
    const double value = objective(theta, phi);
    if (value > best) {
      best = value;
      best_theta = theta;
      best_phi = phi;
    }
    return value;
  };

  for (int i = 0; i < kGridPoints; ++i) {
    const double theta = kPi * i / (kGridPoints - 1);
    for (int j = 0; j < kGridPoints; ++j) {
      eval(theta, kTwoPi * j / kGridPoints);
    }
  }
  const double grid_value = best;

  // Nelder-Mead from the best grid cell, seeded at half the grid spacing.
  // `best` only ever grows, so refinement cannot lose to the grid.
  struct Vertex {
    double theta, phi, value;
  };
  std::array<Vertex, 3> simplex{
      Vertex{best_theta, best_phi, grid_value},
      Vertex{best_theta + kPi / (kGridPoints - 1) / 2, best_phi, 0},
      Vertex{best_theta, best_phi + kTwoPi / kGridPoints / 2, 0}};
  simplex[1].value = eval(simplex[1].theta, simplex[1].phi);
  simplex[2].value = eval(simplex[2].theta, simplex[2].phi);

  for (int iter = 0; iter < kMaxSimplexIters; ++iter) {
    std::sort(simplex.begin(), simplex.end(),
              [](const Vertex& a, const Vertex& b) { return a.value > b.value; });
    if (simplex[0].value - simplex[2].value < kSimplexSpreadTol) break;

    const double ct = (simplex[0].theta + simplex[1].theta) / 2;
    const double cp = (simplex[0].phi + simplex[1].phi) / 2;
    auto probe = [&](double scale) -> Vertex {
      const double t = ct + scale * (ct - simplex[2].theta);
      const double p = cp + scale * (cp - simplex[2].phi);
      return {t, p, eval(t, p)};
    };

    const Vertex reflected = probe(1.0);
    if (reflected.value > simplex[0].value) {
      const Vertex expanded = probe(2.0);
      simplex[2] = expanded.value > reflected.value ? expanded : reflected;
    } else if (reflected.value > simplex[1].value) {
      simplex[2] = reflected;
    } else {
      const Vertex contracted =
          probe(reflected.value > simplex[2].value ? 0.5 : -0.5);
      if (contracted.value > std::max(reflected.value, simplex[2].value)) {
        simplex[2] = contracted;
      } else {
        for (int k : {1, 2}) {
          simplex[k].theta = (simplex[k].theta + simplex[0].theta) / 2;
          simplex[k].phi = (simplex[k].phi + simplex[0].phi) / 2;
          simplex[k].value = eval(simplex[k].theta, simplex[k].phi);
        }
      }
    }
  }

  return {std::max(best, 0.0), normalize_basis(best_theta, best_phi),
          grid_value, evals};
}

CorrelationReport discord(const DensityMatrix& rho, MeasuredSide side) {
  const double mi = mutual_information(rho);
  const ClassicalCorrelationResult cc = classical_correlation(rho, side);
  double d = mi - cc.value;
  if (d < 0 && d > -1e-9) d = 0;
  return {mi, cc.value, d, negativity(rho), cc.evals, cc.argmax};
}

double negativity(const DensityMatrix& rho) {
  check_two_qubits(rho, "negativity");
  double trace_norm = 0;
  for (double lambda : eigvals_hermitian(partial_transpose(rho, 1))) {
    trace_norm += std::abs(lambda);
  }
  const double value = std::log2(trace_norm);
  return std::abs(value) < 1e-10 ? 0.0 : value;
}

}  // namespace rindlersim
