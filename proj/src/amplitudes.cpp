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

#include "amplitudes.hpp"

#include <cmath>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "errors.hpp"

namespace exflow {

void validate(const NetworkParams& params) {
  if (params.n_qubits < 2) {
    throw ValidationError("network needs at least 2 qubits, got " +
                          std::to_string(params.n_qubits));
  }
  if (!std::isfinite(params.coupling) || !(params.coupling > 0.0)) {
    throw ValidationError("coupling must be finite and positive");
  }
}

void validate(const NetworkParams& params, const SubsystemSelector& sel) {
  validate(params);
  const int max_k = sel.dyn_class == DynClass::Class1 ? params.n_qubits
                                                      : params.n_qubits - 1;
  if (sel.k_qubits < 1 || sel.k_qubits > max_k) {
    throw ValidationError(
        "subsystem size K=" + std::to_string(sel.k_qubits) +
        " outside [1, " + std::to_string(max_k) + "] for class " +
        (sel.dyn_class == DynClass::Class1 ? "1" : "0") + " with N=" +
        std::to_string(params.n_qubits));
  }
}

Amplitudes amplitudes_real(double n, double coupling, double t) {
  const Complex phase = std::polar(1.0, n * coupling * t);
  return {(1.0 + (n - 1.0) * phase) / n, (1.0 - phase) / n};
}

Amplitudes amplitudes(const NetworkParams& params, double t) {
  validate(params);
  if (!std::isfinite(t)) throw ValidationError("time must be finite");
  return amplitudes_real(params.n_qubits, params.coupling, t);
}

UnitarityResidual unitarity_residual(const Amplitudes& a, int n_qubits) {
  const double us2 = std::norm(a.same_site);
  const double ud2 = std::norm(a.cross_site);
  return {
      std::abs(us2 + (n_qubits - 1) * ud2 - 1.0),
      std::abs(2.0 * std::real(std::conj(a.same_site) * a.cross_site) +
               (n_qubits - 2) * ud2),
  };
}

double cross_weight(double n, double coupling, double t) {
  const double s = std::sin(0.5 * n * coupling * t);
  return 4.0 * s * s / (n * n);
}

double cross_weight_derivative(double n, double coupling, double t,
                               Theta theta) {
  const double half = 0.5 * n * coupling * t;
  const double s = std::sin(half);
  const double c = std::cos(half);
  if (theta == Theta::CouplingJ) {
    // d/dJ [4 s^2 / N^2] = 8 s c (N t / 2) / N^2
    return 4.0 * s * c * t / n;
  }
  return -8.0 * s * s / (n * n * n) + 4.0 * s * c * coupling * t / (n * n);
}

CMatrix q1_unitary_oracle(const NetworkParams& params, double t) {
  validate(params);
  const int n = params.n_qubits;
  if (n > kMaxOracleQubits) {
    throw Error(ErrorCode::kSizeLimit,
                "dense q=1 oracle limited to N <= " +
                    std::to_string(kMaxOracleQubits));
  }
  // XX hopping J(|i><j| + h.c.) over all pairs, plus the q=1 sector energy
  // -(N-1)J that sets u_0 = 1 as the reference phase.
  CMatrix generator = CMatrix::Constant(n, n, params.coupling);
  generator.diagonal().setConstant(-(n - 1) * params.coupling);
  const CMatrix exponent = Complex(0.0, -t) * generator;
  return exponent.exp();
}

CVector global_state(const NetworkParams& params, double t) {
  const Amplitudes a = amplitudes(params, t);
  CVector psi = CVector::Constant(params.n_qubits, a.cross_site);
  psi(0) = a.same_site;
  return psi;
}

}  // namespace exflow
