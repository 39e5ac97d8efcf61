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

#include <iosfwd>
#include <vector>

#include "rindlersim/linalg.hpp"

namespace rindlersim {

struct SweepOutputs {
  bool fidelities = true;
  bool min_fidelity = true;
  bool discord_a = true;
  bool discord_b = true;
  bool negativity = true;
  bool mutual_information = true;
};

/// Grid specification for a parameter sweep over the channel weight p, the
/// acceleration parameter r and the input-state weight |alpha|^2. Disabled
/// outputs are emitted as "nan" so the column layout never changes.
struct SweepSpec {
  std::vector<double> p_grid;       // each in [0, 1]
  std::vector<double> r_grid;       // each in [0, pi/4]
  std::vector<double> alpha2_grid;  // each in [0, 1]
  SweepOutputs outputs;
};

/// n evenly spaced values from a to b inclusive (n >= 1; n == 1 gives {a}).
std::vector<double> linspace(double a, double b, int n);

/// Preset grids behind the `sweep --figure N` flag:
///   1: p = 1, r x alpha2 grid          2: p = 1, r grid, alpha2 = 1/2
///   3: r in {0, pi/4}, p grid          4: p = 1/3, r grid, alpha2 = 1/2
SweepSpec figure_preset(int figure, int points_per_axis = 65);

/// Throws std::invalid_argument on an empty grid or out-of-range value.
void validate(const SweepSpec& spec);

/// Evaluate the sweep and write CSV rows
///   p,r,alpha2,F_i0,F_i1,min_F,avg_F,discord_B,discord_A,negativity,mutual_info
/// in row-major (p, r, alpha2) order, 12 significant digits, LF endings.
/// Fidelities come from the first-principles protocol run; correlation
/// columns are computed once per distinct (p, r) channel. Grid points are
/// dispatched across `threads` workers (0 = hardware default) and buffered,
/// so the output is byte-for-byte deterministic regardless of thread count.
void run_sweep(const SweepSpec& spec, std::ostream& out, int threads = 0);

}  // namespace rindlersim
