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

#include <optional>

#include "linalg.hpp"
#include "network.hpp"

namespace exflow {

enum class FlowKind {
  OutOfSubsystem,  // Class1: q=1 -> q=0 row of the flow operator
  IntoSubsystem,   // Class0: q=0 -> q=1 column of the flow operator
};

/// Minimal operator-sum form of the propagator Phi(t1, t2) restricted to the
/// q in {0,1} subspace:
///
///   Phi[rho] = B rho B^dagger + sum_i F_i rho F_i^T
///
/// B = block_diag. The flow operators F_i carry sqrt(flow_weight) (and for
/// Class0 also sqrt(ground_extra)), which is imaginary when the weight is
/// negative. They are never materialized; apply_map() uses the weights directly.
/// Sector phases for q >= 2 (and u_0) are fixed to 1.
struct PropagatorOps {
  CMatrix block_diag;
  double flow_weight = 0.0;
  FlowKind flow_kind = FlowKind::OutOfSubsystem;
  std::optional<double> ground_extra;

  // Scalar elements the operators were built from.
  Complex phi_same;                  // phi_s
  Complex phi_cross;                 // phi_d (Class1 only, zero otherwise)
  std::optional<double> phi_ground;  // phi_0 (Class0 only)

  int k_qubits = 1;
  DynClass dyn_class = DynClass::Class1;
  double t1 = 0.0;
  double t2 = 0.0;

  int dim() const { return k_qubits + 1; }
};

/// True iff K = N/2 and t1 sits (within 1e-9 period) on an odd half period,
/// where Phi(0, t1) is not invertible.
bool is_singular(const NetworkParams& params, int k_qubits, double t1);

PropagatorOps build_propagator(const NetworkParams& params,
                               const SubsystemSelector& sel, double t1,
                               double t2);

/// phi_tau for the interval; sign gives the direction of net excitation flow.
double flow_amplitude(const NetworkParams& params,
                      const SubsystemSelector& sel, double t1, double t2);

/// Applies the map to any (K+1) x (K+1) operator. The map is linear, so
/// non-Hermitian or non-positive inputs are accepted.
CMatrix apply_map(const PropagatorOps& ops, const CMatrix& op);

/// Matrix of the map acting on column-major vec(rho).
CMatrix superoperator(const PropagatorOps& ops);

/// max |B^dagger B + sum_i F_i^T F_i - 1|.
double completeness_residual(const PropagatorOps& ops);

/// Residuals of the element-level unitarity constraints. Class1:
/// |phi_s|^2 + (K-1)|phi_d|^2 + phi_tau - 1 and (K >= 2 only)
/// 2 Re(phi_s^* phi_d) + (K-2)|phi_d|^2 + phi_tau. Class0:
/// phi_0 + K phi_tau - 1 (second entry zero).
std::pair<double, double> element_constraint_residuals(const PropagatorOps& ops);

/// Max-entry deviation between Phi(t1,t2)[rho] and
/// Phi(0,t2)[Phi^{-1}(0,t1)[rho]], the inverse taken numerically.
double compose_residual(const NetworkParams& params,
                        const SubsystemSelector& sel, double t1, double t2,
                        const CMatrix& test_density);

inline constexpr double kPseudoInverseCutoff = 1e-10;

}  // namespace exflow
