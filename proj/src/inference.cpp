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

#include "inference.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "amplitudes.hpp"
#include "errors.hpp"
#include "propagator.hpp"
#include "states.hpp"

namespace exflow {
namespace {

constexpr double kZeroFlow = 1e-14;

}  // namespace

FlowObservation simulate_observation(const NetworkParams& params, double t1,
                                     double t2) {
  const SubsystemSelector one{1, DynClass::Class1};
  const SubsystemSelector zero{1, DynClass::Class0};
  return {flow_amplitude(params, one, t1, t2),
          flow_amplitude(params, zero, t1, t2),
          excitation_probability(params, zero, t1)};
}

bool two_qubit_consistency(const FlowObservation& obs, double tol) {
  return std::abs(obs.flow_class1 - obs.flow_class0) <= tol;
}

NetworkSizeEstimate infer_network_size(const FlowObservation& obs) {
  if (!(obs.ground_prob_t1 > 0.0 && obs.ground_prob_t1 <= 1.0)) {
    throw ValidationError("ground probability must lie in (0, 1]");
  }
  if (std::abs(obs.flow_class0) < kZeroFlow ||
      std::abs(obs.flow_class1) < kZeroFlow) {
    throw Error(ErrorCode::kIndeterminate,
                "vanishing flow amplitudes leave N undetermined");
  }
  // |u_d(t2)|^2 - |u_d(t1)|^2 from the class-0 population data.
  const double delta = obs.flow_class0 * obs.ground_prob_t1;
  const double bracket =
      delta * (1.0 / obs.flow_class0 - 1.0 / obs.flow_class1);
  const double estimate = 1.0 + 1.0 / (1.0 - bracket);
  if (!std::isfinite(estimate) || estimate < 2.0 - 1e-9) {
    throw Error(ErrorCode::kInconsistentObservation,
                "flows are inconsistent with any network size (estimate " +
                    std::to_string(estimate) + ")");
  }
  NetworkSizeEstimate out;
  out.estimate = estimate;
  out.rounded = static_cast<int>(std::lround(estimate));
  out.residual = estimate - out.rounded;
  return out;
}

double infer_coupling(double period_estimate, double n_estimate) {
  if (!(period_estimate > 0.0) || !std::isfinite(period_estimate)) {
    throw ValidationError("period estimate must be positive");
  }
  if (!(n_estimate > 1.0) || !std::isfinite(n_estimate)) {
    throw ValidationError("network size estimate must exceed 1");
  }
  return 2.0 * std::numbers::pi / (n_estimate * period_estimate);
}

double estimate_period(const std::function<double(double, double)>& flow,
                       double dt, double t_max, int scan_steps) {
  if (!(dt > 0.0) || !(t_max > 0.0) || scan_steps < 2) {
    throw ValidationError("period scan needs dt > 0, t_max > 0, steps >= 2");
  }
  auto sign_flow = [&](double t) { return flow(t, t + dt); };
  double prev_t = 0.0;
  double prev = sign_flow(prev_t);
  for (int i = 1; i < scan_steps; ++i) {
    const double t = t_max * i / (scan_steps - 1);
    const double cur = sign_flow(t);
    if (prev >= 0.0 && cur < 0.0) {
      double lo = prev_t;
      double hi = t;
      while (hi - lo > 1e-15 * t_max) {
        const double mid = 0.5 * (lo + hi);
        if (sign_flow(mid) >= 0.0) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return 2.0 * (0.5 * (lo + hi)) + dt;
    }
    prev_t = t;
    prev = cur;
  }
  throw Error(ErrorCode::kIndeterminate,
              "no flow sign change found in the scanned range");
}

double conservation_residual(const NetworkParams& params, int k_qubits,
                             double t1, double t2) {
  validate(params);
  if (k_qubits < 1 || k_qubits > params.n_qubits - 1) {
    throw ValidationError("equal-size class pair needs 1 <= K <= N-1");
  }
  const double f1 =
      flow_amplitude(params, {k_qubits, DynClass::Class1}, t1, t2);
  const double f0 =
      flow_amplitude(params, {k_qubits, DynClass::Class0}, t1, t2);
  if (std::abs(f1) < kZeroFlow || std::abs(f0) < kZeroFlow) {
    throw Error(ErrorCode::kIndeterminate,
                "flows vanish over the interval; relation is 0/0");
  }
  const double delta = cross_weight(params.n_qubits, params.coupling, t2) -
                       cross_weight(params.n_qubits, params.coupling, t1);
  const double lhs = delta * (1.0 / f0 - 1.0 / f1);
  return std::abs(lhs - (1.0 - 1.0 / (params.n_qubits - k_qubits)));
}

}  // namespace exflow
