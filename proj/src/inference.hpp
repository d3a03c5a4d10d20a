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

#include <functional>

#include "network.hpp"

namespace exflow {

/// What an observer holding one class-1 and one class-0 qubit can measure
/// over a window [t1, t2].
struct FlowObservation {
  double flow_class1 = 0.0;     // phi_tau^1(t1, t2; 1)
  double flow_class0 = 0.0;     // phi_tau^0(t1, t2; 1)
  double ground_prob_t1 = 1.0;  // p0(t1; 1) of the class-0 qubit
};

/// Observation generated from the closed-form propagators of a network.
FlowObservation simulate_observation(const NetworkParams& params, double t1,
                                     double t2);

/// Closed excitation-conserving two-qubit dynamics force equal flows.
bool two_qubit_consistency(const FlowObservation& obs, double tol);

struct NetworkSizeEstimate {
  double estimate = 0.0;
  int rounded = 0;
  double residual = 0.0;  // estimate - rounded
};

/// Inverts the class-pair conservation relation at K = 1 for N.
NetworkSizeEstimate infer_network_size(const FlowObservation& obs);

/// J = 2 pi / (N * period).
double infer_coupling(double period_estimate, double n_estimate);

/// Period from the first + to - sign change of t -> flow(t, t + dt), found
/// by scanning [0, t_max] with `scan_steps` points and bisecting. The
/// change happens at period/2 - dt/2.
double estimate_period(const std::function<double(double, double)>& flow,
                       double dt, double t_max, int scan_steps = 1000);

/// |(|u_d(t2)|^2 - |u_d(t1)|^2)(1/phi_tau^0 - 1/phi_tau^1) - (1 - 1/(N-K))|
/// for equal-size class-1 and class-0 subsystems.
double conservation_residual(const NetworkParams& params, int k_qubits,
                             double t1, double t2);

}  // namespace exflow
