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

namespace rindlersim {

/// Cross-validation suite behind `selfcheck`: channel matrix pipeline vs its
/// closed form, simulated vs closed-form fidelities, branch probabilities,
/// and the werner spectrum. Prints one status line per check and returns
/// true iff all pass.
bool run_selfcheck(std::ostream& out);

}  // namespace rindlersim
