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

#include "positivity.hpp"

#include <cmath>
#include <string>

#include "amplitudes.hpp"
#include "errors.hpp"
#include "states.hpp"

namespace exflow {

CMatrix choi_matrix(const PropagatorOps& ops) {
  const int d = ops.dim();
  if (d * d > kMaxChoiDim) {
    throw Error(ErrorCode::kSizeLimit,
                "Choi matrix limited to dimension " +
                    std::to_string(kMaxChoiDim));
  }
  CMatrix choi = CMatrix::Zero(d * d, d * d);
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      CMatrix basis = CMatrix::Zero(d, d);
      basis(mu, nu) = 1.0;
      const CMatrix image = apply_map(ops, basis);
      // image (x) |mu><nu|
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
          choi(r * d + mu, c * d + nu) += image(r, c);
        }
      }
    }
  }
  return choi;
}

double choi_min_eigenvalue(const PropagatorOps& ops) {
  return hermitian_eigenvalues(choi_matrix(ops)).minCoeff();
}

PositivityVerdict classify(const NetworkParams& params,
                           const SubsystemSelector& sel, double t1,
                           double t2) {
  const PropagatorOps ops = build_propagator(params, sel, t1, t2);
  PositivityVerdict v;
  v.flow_sign = ops.flow_weight;
  v.choi_min_eig = choi_min_eigenvalue(ops);
  v.trace_dist_delta = excitation_probability(params, sel, t2) -
                       excitation_probability(params, sel, t1);

  const bool positive = v.flow_sign >= -kVerdictTolerance;
  v.verdict = positive ? Verdict::PositiveAndCP : Verdict::NonPositiveNonCP;
  v.choi_agrees = (v.choi_min_eig >= -kVerdictTolerance) == positive;
  v.contraction_agrees = (v.trace_dist_delta <= kVerdictTolerance) == positive;
  return v;
}

double positivity_transition_time(const NetworkParams& params,
                                  const SubsystemSelector& sel, double dt) {
  validate(params, sel);
  const double p = period(params);
  if (!(dt > 0.0) || !(dt < p)) {
    throw ValidationError("window length must lie in (0, period)");
  }
  const int n = params.n_qubits;
  const double j = params.coupling;
  // phi_tau has the sign of |u_d(t+dt)|^2 - |u_d(t)|^2 for both classes.
  auto numerator = [&](double t) {
    return cross_weight(n, j, t + dt) - cross_weight(n, j, t);
  };
  double lo = 0.0;
  double hi = 0.5 * p;
  while (hi - lo > 1e-14 * p) {
    const double mid = 0.5 * (lo + hi);
    if (numerator(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace exflow
