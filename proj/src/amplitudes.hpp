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

#include <complex>

#include "linalg.hpp"
#include "network.hpp"

namespace exflow {

/// Single-excitation transition amplitudes of the global unitary: u_s for the
/// excitation to stay on its qubit, u_d for a hop to any other qubit.
struct Amplitudes {
  std::complex<double> same_site;
  std::complex<double> cross_site;
};

Amplitudes amplitudes(const NetworkParams& params, double t);

/// Closed-form amplitudes with N treated as a continuous parameter. No
/// validation; used for derivatives with respect to N.
Amplitudes amplitudes_real(double n, double coupling, double t);

/// Residuals of |u_s|^2 + (N-1)|u_d|^2 = 1 and
/// 2 Re(u_s^* u_d) + (N-2)|u_d|^2 = 0.
struct UnitarityResidual {
  double norm;
  double orthogonality;
};
UnitarityResidual unitarity_residual(const Amplitudes& a, int n_qubits);

/// |u_d(t)|^2 = 4 sin^2(N J t / 2) / N^2 for real N.
double cross_weight(double n, double coupling, double t);
/// Partial derivative of cross_weight with respect to J or N.
double cross_weight_derivative(double n, double coupling, double t,
                               Theta theta);

/// Dense q=1 block of the global unitary, from a numerical matrix exponential
/// of the hopping generator. Independent of the closed forms above.
CMatrix q1_unitary_oracle(const NetworkParams& params, double t);

inline constexpr int kMaxOracleQubits = 2048;

/// Amplitudes of |psi(t)> in the q=1 basis, excitation initially on site 0.
CVector global_state(const NetworkParams& params, double t);

}  // namespace exflow
