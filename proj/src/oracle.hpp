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

#include <span>

#include "linalg.hpp"
#include "network.hpp"

namespace exflow {

/// Global state restricted to the q <= 1 sectors.
struct GlobalVector {
  Complex q0_amp = 0.0;
  CVector q1_amps;
  int n_qubits = 0;
};

/// Applies the global unitary (u_0 = 1 on q = 0, `q1_block` on q = 1).
GlobalVector evolve(const GlobalVector& psi, const CMatrix& q1_block);

/// Tr_E |a><b| onto the listed sites, in the basis ground, then one
/// excitation on sites[0], sites[1], ...
CMatrix partial_trace(const GlobalVector& a, const GlobalVector& b,
                      std::span<const int> sites);

/// Evolves |10...0> with the matrix-exponential unitary and traces out the
/// complement. Class1 keeps sites 0..K-1, Class0 keeps sites 1..K.
CMatrix reduced_density_oracle(const NetworkParams& params,
                               const SubsystemSelector& sel, double t);

inline constexpr int kMaxTomographyQubits = 512;

/// Superoperator of Phi(0, t) for a Class1 subsystem, reconstructed by
/// propagating every |mu><nu| (x) |0...0>_E through the global unitary.
CMatrix dynamical_map_oracle(const NetworkParams& params,
                             const SubsystemSelector& sel, double t);

/// Phi(0, t2) composed with the pseudo-inverse of Phi(0, t1).
CMatrix propagator_oracle(const NetworkParams& params,
                          const SubsystemSelector& sel, double t1, double t2);

}  // namespace exflow
