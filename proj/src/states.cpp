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

#include "states.hpp"

#include <cmath>
#include <string>

#include "amplitudes.hpp"
#include "errors.hpp"

namespace exflow {
namespace {

constexpr double kDegenerateWeight = 1e-14;

CVector class1_vector(const Amplitudes& a, int k) {
  CVector v = CVector::Constant(k, a.cross_site);
  v(0) = a.same_site;
  return v;
}

}  // namespace

double excitation_probability_real(double n, double coupling,
                                   const SubsystemSelector& sel, double t) {
  const double x = cross_weight(n, coupling, t);
  if (sel.dyn_class == DynClass::Class1) return 1.0 - (n - sel.k_qubits) * x;
  return 1.0 - sel.k_qubits * x;
}

double excitation_probability(const NetworkParams& params,
                              const SubsystemSelector& sel, double t) {
  validate(params, sel);
  return excitation_probability_real(params.n_qubits, params.coupling, sel, t);
}

ReducedState reduced_state(const NetworkParams& params,
                           const SubsystemSelector& sel, double t) {
  validate(params, sel);
  const int k = sel.k_qubits;
  ReducedState state;
  state.k_qubits = k;
  state.dyn_class = sel.dyn_class;

  if (sel.dyn_class == DynClass::Class0) {
    state.excited_weight = 1.0 - excitation_probability(params, sel, t);
    state.internal_vector = CVector::Constant(k, 1.0 / std::sqrt(double(k)));
    return state;
  }

  const Amplitudes a = amplitudes(params, t);
  CVector v = class1_vector(a, k);
  const double p = v.squaredNorm();
  if (p < kDegenerateWeight) {
    // Only reachable for N = 2, K = 1 at odd half periods.
    const double dt = 1e-6 * period(params);
    CVector left = class1_vector(amplitudes(params, t - dt), k);
    left.normalize();
    throw DegenerateStateError(
        "class-1 excitation probability vanishes at t=" + std::to_string(t),
        std::vector<Complex>(left.data(), left.data() + left.size()));
  }
  state.excited_weight = p;
  state.internal_vector = v / std::sqrt(p);
  return state;
}

CMatrix materialize_density(const ReducedState& state) {
  const int k = state.k_qubits;
  CMatrix rho = CMatrix::Zero(k + 1, k + 1);
  rho(0, 0) = 1.0 - state.excited_weight;
  rho.bottomRightCorner(k, k) = state.excited_weight *
                                state.internal_vector *
                                state.internal_vector.adjoint();
  return rho;
}

CMatrix reduced_density_real(double n, double coupling,
                             const SubsystemSelector& sel, double t) {
  const int k = sel.k_qubits;
  CMatrix rho = CMatrix::Zero(k + 1, k + 1);
  if (sel.dyn_class == DynClass::Class1) {
    const CVector v = class1_vector(amplitudes_real(n, coupling, t), k);
    rho(0, 0) = 1.0 - v.squaredNorm();
    rho.bottomRightCorner(k, k) = v * v.adjoint();
  } else {
    const double x = cross_weight(n, coupling, t);
    rho(0, 0) = 1.0 - k * x;
    rho.bottomRightCorner(k, k).setConstant(x);
  }
  return rho;
}

double binary_entropy(double x) {
  double s = 0.0;
  if (x > 0.0) s -= x * std::log(x);
  if (x < 1.0) s -= (1.0 - x) * std::log1p(-x);
  return s;
}

double entanglement_entropy(const NetworkParams& params,
                            const SubsystemSelector& sel, double t) {
  validate(params, sel);
  const double x = cross_weight(params.n_qubits, params.coupling, t);
  const int outside = sel.dyn_class == DynClass::Class1
                          ? params.n_qubits - sel.k_qubits
                          : sel.k_qubits;
  return binary_entropy(outside * x);
}

double trace_distance_to_fixed(const ReducedState& state) {
  return state.dyn_class == DynClass::Class1 ? state.excited_weight
                                             : 1.0 - state.excited_weight;
}

CMatrix nearest_fixed_point(const ReducedState& state) {
  const int k = state.k_qubits;
  CMatrix fixed = CMatrix::Zero(k + 1, k + 1);
  if (state.dyn_class == DynClass::Class1) {
    fixed(0, 0) = 1.0;
  } else {
    fixed.bottomRightCorner(k, k) =
        state.internal_vector * state.internal_vector.adjoint();
  }
  return fixed;
}

}  // namespace exflow
