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
#include "propagator.hpp"

namespace exflow {

enum class Verdict { PositiveAndCP, NonPositiveNonCP };

/// Three independent positivity indicators for one propagator.
struct PositivityVerdict {
  double flow_sign = 0.0;         // phi_tau
  double choi_min_eig = 0.0;      // smallest Choi eigenvalue
  double trace_dist_delta = 0.0;  // p(t2) - p(t1)
  Verdict verdict = Verdict::PositiveAndCP;
  bool choi_agrees = true;
  bool contraction_agrees = true;
};

inline constexpr double kVerdictTolerance = 1e-9;
inline constexpr int kMaxChoiDim = 4096;

/// C = sum_{mu,nu} Phi[|mu><nu|] (x) |mu><nu| on the q<=1 subspace, index
/// (out, in) -> out * (K+1) + in.
///
/// The q>=2 sectors are left out: Phi acts on them (and on their coherences
/// with q<=1) through unit phases only, which adds no negative eigenvalues.
CMatrix choi_matrix(const PropagatorOps& ops);

double choi_min_eigenvalue(const PropagatorOps& ops);

PositivityVerdict classify(const NetworkParams& params,
                           const SubsystemSelector& sel, double t1, double t2);

/// Earliest t in [0, period/2] where Phi(t, t + dt) stops being positive,
/// located by bisection on the sign of phi_tau.
double positivity_transition_time(const NetworkParams& params,
                                  const SubsystemSelector& sel, double dt);

}  // namespace exflow
