// Copyright 2026 The exflow Authors
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

#include <numbers>

namespace exflow {

/// Homogeneous all-to-all network of `n_qubits` qubits with XX coupling
/// `coupling` (inverse time units).
struct NetworkParams {
  int n_qubits = 2;
  double coupling = 1.0;
};

void validate(const NetworkParams& params);

/// Period 2*pi/(N J) of the single-excitation dynamics.
inline double period(const NetworkParams& params) {
  return 2.0 * std::numbers::pi / (params.n_qubits * params.coupling);
}

/// Class1 subsystems contain the initially excited qubit, Class0 exclude it.
enum class DynClass { Class0 = 0, Class1 = 1 };

struct SubsystemSelector {
  int k_qubits = 1;
  DynClass dyn_class = DynClass::Class1;
};

void validate(const NetworkParams& params, const SubsystemSelector& sel);

enum class Theta { CouplingJ, SizeN };

}  // namespace exflow
