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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rindlersim/measures.hpp"
#include "rindlersim/rindler.hpp"
#include "rindlersim/selfcheck.hpp"
#include "rindlersim/sweep.hpp"
#include "rindlersim/teleport.hpp"

namespace py = pybind11;

using namespace rindlersim;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Quantum teleportation over a werner channel with a uniformly "
      "accelerated receiver: per-outcome fidelities, discord, negativity.";

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init<ComplexMatrix>(), py::arg("matrix"))
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("qubit_count", &DensityMatrix::qubit_count)
      .def_property_readonly("dim", &DensityMatrix::dim);

  py::class_<PureQubit>(m, "PureQubit")
      .def(py::init<Complex, Complex>(), py::arg("alpha"), py::arg("beta"))
      .def_property_readonly("alpha", &PureQubit::alpha)
      .def_property_readonly("beta", &PureQubit::beta)
      .def("density", &PureQubit::density);

  m.def("kron", &kron, py::arg("a"), py::arg("b"));
  m.def("partial_trace",
        py::overload_cast<const DensityMatrix&, int>(&partial_trace),
        py::arg("rho"), py::arg("subsystem_index"));
  m.def("partial_transpose",
        py::overload_cast<const DensityMatrix&, int>(&partial_transpose),
        py::arg("rho"), py::arg("subsystem_index"));
  m.def("eigvals_hermitian", &eigvals_hermitian, py::arg("matrix"));
  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));

  m.def("bell_phi_plus", &bell_phi_plus);
  m.def("werner", &werner, py::arg("p"));
  m.def("pauli_x", &pauli_x, py::return_value_policy::copy);
  m.def("pauli_z", &pauli_z, py::return_value_policy::copy);
  m.def("hadamard", &hadamard, py::return_value_policy::copy);
  m.def("cnot", &cnot, py::return_value_policy::copy);

  m.attr("MAX_ACCELERATION") = kMaxAcceleration;
  m.def("mode_isometry", &mode_isometry, py::arg("r"));
  m.def("accelerate_second_qubit", &accelerate_second_qubit, py::arg("rho"),
        py::arg("r"));
  m.def("alice_rob_state", &alice_rob_state, py::arg("p"), py::arg("r"));
  m.def("alice_rob_matrix_closed_form", &alice_rob_matrix_closed_form,
        py::arg("p"), py::arg("r"));

  py::class_<TeleportOutcome>(m, "TeleportOutcome")
      .def_readonly("i", &TeleportOutcome::i)
      .def_readonly("j", &TeleportOutcome::j)
      .def_readonly("probability", &TeleportOutcome::probability)
      .def_readonly("conditional_state", &TeleportOutcome::conditional_state)
      .def_readonly("corrected_state", &TeleportOutcome::corrected_state)
      .def_readonly("fidelity", &TeleportOutcome::fidelity)
      .def_readonly("negligible", &TeleportOutcome::negligible);

  py::class_<TeleportReport>(m, "TeleportReport")
      .def_readonly("outcomes", &TeleportReport::outcomes)
      .def_readonly("min_fidelity", &TeleportReport::min_fidelity)
      .def_readonly("avg_fidelity", &TeleportReport::avg_fidelity);

  py::class_<FidelityPair>(m, "FidelityPair")
      .def_readonly("f_i0", &FidelityPair::f_i0)
      .def_readonly("f_i1", &FidelityPair::f_i1);

  py::class_<ObservedState>(m, "ObservedState")
      .def_readonly("state", &ObservedState::state)
      .def_readonly("fidelity", &ObservedState::fidelity);

  m.def("run_protocol", &run_protocol, py::arg("psi"), py::arg("channel"));
  m.def("fidelity_closed_form", &fidelity_closed_form, py::arg("psi"),
        py::arg("p"), py::arg("r"));
  m.def("min_fidelity", &min_fidelity, py::arg("psi"), py::arg("p"),
        py::arg("r"));
  m.def("observe_post_teleport", &observe_post_teleport, py::arg("psi"),
        py::arg("i"), py::arg("j"), py::arg("r"));

  py::class_<MeasurementBasis>(m, "MeasurementBasis")
      .def(py::init<double, double>(), py::arg("theta") = 0,
           py::arg("phi") = 0)
      .def_readwrite("theta", &MeasurementBasis::theta)
      .def_readwrite("phi", &MeasurementBasis::phi)
      .def("ket", &MeasurementBasis::ket)
      .def("orthogonal_ket", &MeasurementBasis::orthogonal_ket)
      .def("projector", &MeasurementBasis::projector);

  py::enum_<MeasuredSide>(m, "MeasuredSide")
      .value("A", MeasuredSide::A)
      .value("B", MeasuredSide::B);

  py::class_<ClassicalCorrelationResult>(m, "ClassicalCorrelationResult")
      .def_readonly("value", &ClassicalCorrelationResult::value)
      .def_readonly("argmax", &ClassicalCorrelationResult::argmax)
      .def_readonly("grid_value", &ClassicalCorrelationResult::grid_value)
      .def_readonly("evals", &ClassicalCorrelationResult::evals);

  py::class_<CorrelationReport>(m, "CorrelationReport")
      .def_readonly("mutual_information", &CorrelationReport::mutual_information)
      .def_readonly("classical_correlation",
                    &CorrelationReport::classical_correlation)
      .def_readonly("discord", &CorrelationReport::discord)
      .def_readonly("negativity", &CorrelationReport::negativity)
      .def_readonly("optimizer_evals", &CorrelationReport::optimizer_evals)
      .def_readonly("optimizer_argmax", &CorrelationReport::optimizer_argmax);

  m.def("mutual_information", &mutual_information, py::arg("rho"));
  m.def("classical_correlation", &classical_correlation, py::arg("rho"),
        py::arg("side") = MeasuredSide::B);
  m.def("discord", &discord, py::arg("rho"),
        py::arg("side") = MeasuredSide::B);
  m.def("negativity", &negativity, py::arg("rho"));

  py::class_<SweepOutputs>(m, "SweepOutputs")
      .def(py::init<>())
      .def_readwrite("fidelities", &SweepOutputs::fidelities)
      .def_readwrite("min_fidelity", &SweepOutputs::min_fidelity)
      .def_readwrite("discord_a", &SweepOutputs::discord_a)
      .def_readwrite("discord_b", &SweepOutputs::discord_b)
      .def_readwrite("negativity", &SweepOutputs::negativity)
      .def_readwrite("mutual_information", &SweepOutputs::mutual_information);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("p_grid", &SweepSpec::p_grid)
      .def_readwrite("r_grid", &SweepSpec::r_grid)
      .def_readwrite("alpha2_grid", &SweepSpec::alpha2_grid)
      .def_readwrite("outputs", &SweepSpec::outputs);

  m.def("linspace", &linspace, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("figure_preset", &figure_preset, py::arg("figure"),
        py::arg("points_per_axis") = 65);
  m.def("validate", &validate, py::arg("spec"));
  m.def(
      "sweep_csv",
      [](const SweepSpec& spec, int threads) {
        std::ostringstream out;
        run_sweep(spec, out, threads);
        return out.str();
      },
      py::arg("spec"), py::arg("threads") = 0,
      "Run the sweep and return the CSV text.");
  m.def(
      "selfcheck",
      []() {
        std::ostringstream out;
        const bool passed = run_selfcheck(out);
        return py::make_tuple(passed, out.str());
      },
      "Run the cross-validation suite; returns (passed, text).");
}
