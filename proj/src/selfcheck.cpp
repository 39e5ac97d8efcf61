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

#include "rindlersim/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <vector>

#include "rindlersim/rindler.hpp"
#include "rindlersim/sweep.hpp"
#include "rindlersim/teleport.hpp"

namespace rindlersim {

namespace {

// Uniform [0, 1) from raw engine words; std::uniform_real_distribution is
// implementation defined, and these checks must print the same numbers on
// every platform.
double u01(std::mt19937& gen) { return gen() * (1.0 / 4294967296.0); }

bool report(std::ostream& out, const char* name, double dev, double tol) {
  const bool pass = dev <= tol;
  char line[160];
  std::snprintf(line, sizeof line, "[%s] %-47s max dev %.2e (tol %.0e)\n",
                pass ? "PASS" : "FAIL", name, dev, tol);
  out << line;
  return pass;
}

double check_channel_matrix() {
  double dev = 0;
  for (double p : linspace(0, 1, 11)) {
    for (double r : linspace(0, kMaxAcceleration, 11)) {
      const ComplexMatrix diff =
          alice_rob_state(p, r).matrix() - alice_rob_matrix_closed_form(p, r);
      dev = std::max(dev, diff.cwiseAbs().maxCoeff());
    }
  }
  return dev;
}

struct FidelityDeviation {
  double closed_form = 0;  // simulation vs formula
  double identity = 0;     // simulated branch difference vs (a - b) sin^2 r
};

FidelityDeviation check_fidelities() {
  std::mt19937 gen(20260816);
  FidelityDeviation dev;
  for (double alpha2 : linspace(0, 1, 5)) {
    for (double p : linspace(0, 1, 5)) {
      for (double r : linspace(0, kMaxAcceleration, 5)) {
        const double global = 2 * std::numbers::pi * u01(gen);
        const double relative = 2 * std::numbers::pi * u01(gen);
        const PureQubit psi(std::polar(std::sqrt(alpha2), global),
                            std::polar(std::sqrt(1 - alpha2), global + relative));
        const TeleportReport rep = run_protocol(psi, alice_rob_state(p, r));
        const FidelityPair cf = fidelity_closed_form(psi, p, r);
        for (const TeleportOutcome& o : rep.outcomes) {
          dev.closed_form = std::max(
              dev.closed_form,
              std::abs(o.fidelity - (o.j == 0 ? cf.f_i0 : cf.f_i1)));
        }
        const double s2 = std::sin(r) * std::sin(r);
        dev.identity = std::max(
            dev.identity,
            std::abs((rep.outcomes[1].fidelity - rep.outcomes[0].fidelity) -
                     (2 * alpha2 - 1) * s2));
      }
    }
  }
  return dev;
}

double check_probabilities() {
  std::mt19937 gen(424242);
  double dev = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const PureQubit psi(Complex(2 * u01(gen) - 1, 2 * u01(gen) - 1),
                        Complex(2 * u01(gen) - 1, 2 * u01(gen) - 1));
    const double p = u01(gen);
    const double r = u01(gen) * kMaxAcceleration;
    const TeleportReport rep = run_protocol(psi, alice_rob_state(p, r));
    for (const TeleportOutcome& o : rep.outcomes) {
      dev = std::max(dev, std::abs(o.probability - 0.25));
    }
  }
  return dev;
}

double check_werner_spectrum() {
  double dev = 0;
  for (double p : linspace(0, 1, 11)) {
    const std::vector<double> eigs = eigvals_hermitian(werner(p).matrix());
    // Ascending: (1-p)/4 three times, then (1+3p)/4.
    for (int k = 0; k < 3; ++k) {
      dev = std::max(dev, std::abs(eigs[k] - (1 - p) / 4));
    }
    dev = std::max(dev, std::abs(eigs[3] - (1 + 3 * p) / 4));
  }
  return dev;
}

}  // namespace

bool run_selfcheck(std::ostream& out) {
  bool pass = true;
  pass &= report(out, "channel matrix: pipeline vs closed form",
                 check_channel_matrix(), 1e-12);
  const FidelityDeviation f = check_fidelities();
  pass &= report(out, "branch fidelities: simulation vs closed form",
                 f.closed_form, 1e-10);
  pass &= report(out, "fidelity branch-difference identity", f.identity,
                 1e-12);
  pass &= report(out, "measurement branch probabilities = 1/4",
                 check_probabilities(), 1e-12);
  pass &= report(out, "werner spectrum vs analytic eigenvalues",
                 check_werner_spectrum(), 1e-12);
  out << (pass ? "selfcheck: all checks passed\n"
               : "selfcheck: FAILURES above\n");
  return pass;
}

}  // namespace rindlersim
