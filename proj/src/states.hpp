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

#include "linalg.hpp"
#include "network.hpp"

namespace exflow {

/// Rank-two reduced state of a K-qubit subsystem on its q in {0,1} subspace:
///   rho = (1 - w) |0><0| + w |psi><psi|
/// with w = excited_weight and |psi> = internal_vector over the K
/// single-excitation basis states. For Class0, w = 1 - p0 and |psi> is
/// uniform.
struct ReducedState {
  double excited_weight = 0.0;
  CVector internal_vector;
  int k_qubits = 1;
  DynClass dyn_class = DynClass::Class1;
};

/// Class1: probability p1 that the excitation is inside the subsystem.
/// Class0: ground-state probability p0 of the subsystem.
double excitation_probability(const NetworkParams& params,
                              const SubsystemSelector& sel, double t);

/// Same with N continuous; no validation.
double excitation_probability_real(double n, double coupling,
                                   const SubsystemSelector& sel, double t);

ReducedState reduced_state(const NetworkParams& params,
                           const SubsystemSelector& sel, double t);

/// Dense (K+1) x (K+1) matrix, basis: ground, then one excitation on
/// subsystem qubit 1..K.
CMatrix materialize_density(const ReducedState& state);

/// Closed-form density with N continuous. No validation; the class-1
/// degeneracy is not checked.
CMatrix reduced_density_real(double n, double coupling,
                             const SubsystemSelector& sel, double t);

/// von Neumann entropy in nats. Equals the discord with the complement
/// because the global state is pure.
double entanglement_entropy(const NetworkParams& params,
                            const SubsystemSelector& sel, double t);

/// Trace distance to the class fixed point: p1 for Class1 (fixed point
/// |0...0>), p0 for Class0 (nearest point of the q=1 fixed manifold).
double trace_distance_to_fixed(const ReducedState& state);

/// The fixed point nearest to `state` used by trace_distance_to_fixed.
CMatrix nearest_fixed_point(const ReducedState& state);

/// Binary entropy -x ln x - (1-x) ln(1-x) with 0 ln 0 = 0.
double binary_entropy(double x);

}  // namespace exflow
