# Copyright 2026 The rindlersim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import os
import subprocess

import numpy as np
import pytest

import rindlersim as rs

CLI = os.environ.get("RINDLERSIM_CLI")
needs_cli = pytest.mark.skipif(CLI is None, reason="RINDLERSIM_CLI not set")


def test_werner_state_roundtrip():
    rho = rs.werner(0.5)
    m = rho.matrix
    assert m.shape == (4, 4)
    assert abs(np.trace(m) - 1) < 1e-12
    assert np.allclose(m, m.conj().T)
    assert rho.qubit_count == 2


def test_ideal_teleportation():
    psi = rs.PureQubit(math.sqrt(0.3), math.sqrt(0.7))
    report = rs.run_protocol(psi, rs.werner(1.0))
    assert abs(report.min_fidelity - 1) < 1e-12
    for outcome in report.outcomes:
        assert abs(outcome.probability - 0.25) < 1e-12


def test_closed_form_matches_simulation():
    psi = rs.PureQubit(math.sqrt(0.7), math.sqrt(0.3))
    report = rs.run_protocol(psi, rs.alice_rob_state(0.8, 0.5))
    pair = rs.fidelity_closed_form(psi, 0.8, 0.5)
    assert abs(report.outcomes[0].fidelity - pair.f_i0) < 1e-10
    assert abs(report.outcomes[1].fidelity - pair.f_i1) < 1e-10
    assert abs(pair.f_i0 - 0.7981876451697597) < 1e-12


def test_correlation_measures():
    bell = rs.bell_phi_plus()
    assert abs(rs.discord(bell).discord - 1) < 1e-4
    assert abs(rs.negativity(bell) - 1) < 1e-9
    boundary = rs.werner(1.0 / 3.0)
    assert rs.negativity(boundary) == 0
    assert rs.discord(boundary).discord > 0.05


def test_numpy_interop():
    rho = rs.DensityMatrix(np.eye(4, dtype=complex) / 4)
    assert rho.qubit_count == 2
    reduced = rs.partial_trace(rho, 1)
    assert reduced.matrix.shape == (2, 2)
    v = rs.eigvals_hermitian(rs.werner(0.7).matrix)
    assert np.allclose(sorted(v), [0.075, 0.075, 0.075, 0.775])


def test_invalid_arguments_raise():
    with pytest.raises(ValueError):
        rs.werner(1.5)
    with pytest.raises(ValueError):
        rs.alice_rob_state(0.5, 2.0)
    with pytest.raises(ValueError):
        rs.PureQubit(0, 0)


def test_sweep_csv():
    spec = rs.SweepSpec()
    spec.p_grid = [1.0]
    spec.r_grid = [0.0, rs.MAX_ACCELERATION]
    spec.alpha2_grid = [0.5]
    text = rs.sweep_csv(spec)
    lines = text.strip().split("\n")
    assert lines[0] == (
        "p,r,alpha2,F_i0,F_i1,min_F,avg_F,discord_B,discord_A,"
        "negativity,mutual_info"
    )
    assert len(lines) == 3
    inertial = [float(x) for x in lines[1].split(",")]
    assert abs(inertial[5] - 1) < 1e-9
    accelerated = [float(x) for x in lines[2].split(",")]
    assert abs(accelerated[5] - 0.8535533905932735) < 1e-9


def test_selfcheck():
    passed, text = rs.selfcheck()
    assert passed
    assert "[FAIL]" not in text


@needs_cli
def test_cli_point():
    out = subprocess.run(
        [CLI, "point", "--p", "1", "--r", "0", "--alpha2", "0.5"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert "min_fidelity = 1" in out.stdout


@needs_cli
def test_cli_rejects_out_of_range():
    out = subprocess.run(
        [CLI, "point", "--p", "0.5", "--r", "9", "--alpha2", "0.5"],
        capture_output=True,
        text=True,
    )
    assert out.returncode != 0
    assert "--r" in out.stderr


@needs_cli
def test_cli_selfcheck():
    out = subprocess.run([CLI, "selfcheck"], capture_output=True, text=True)
    assert out.returncode == 0
    assert "all checks passed" in out.stdout


@needs_cli
def test_cli_sweep(tmp_path):
    target = tmp_path / "fig4.csv"
    out = subprocess.run(
        [CLI, "sweep", "--figure", "4", "--r-grid", "0:0.2:3",
         "--out", str(target)],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    lines = target.read_text().splitlines()
    assert lines[0].startswith("p,r,alpha2,")
    assert len(lines) == 4
