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

#include "network.hpp"

namespace exflow {

/// Quantum Fisher information split into the eigenvalue (classical) and
/// eigenvector (quantum) contributions.
struct FisherBreakdown {
  double classical = 0.0;
  double quantum = 0.0;
  double total = 0.0;
  Theta theta = Theta::CouplingJ;
};

/// K = 1 decomposition of the Fisher numerator over a window [t1, t2] into
/// the sensitivity generated by the propagator (process), the sensitivity
/// carried by the state at t1 (state), and their interference (cross).
/// `cross` already includes its sign and factor of two, so
/// process + cross + state = total.
struct ProcessStateSplit {
  double process = 0.0;
  double state = 0.0;
  double cross = 0.0;
  double total = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
};

FisherBreakdown qfi_closed_form(const NetworkParams& params,
                                const SubsystemSelector& sel, Theta theta,
                                double t);

inline constexpr double kDefaultFisherStep = 1e-5;

/// Tr[L^2 rho] from a central-difference derivative of the closed-form
/// reduced state and the symmetric logarithmic derivative solved in the
/// eigenbasis of rho. `relative_step` scales with the parameter value.
double qfi_numeric_oracle(const NetworkParams& params,
                          const SubsystemSelector& sel, Theta theta, double t,
                          double relative_step = kDefaultFisherStep);

/// d p / d Theta for the class probability p (p1 or p0) at time t.
double excitation_probability_derivative(const NetworkParams& params,
                                         const SubsystemSelector& sel,
                                         Theta theta, double t);

/// `rescaled` multiplies every term by p(t2)(1 - p(t2)) so that the total is
/// (d p(t2) / d Theta)^2 and nothing diverges where p(t2) -> 1.
ProcessStateSplit process_state_split(const NetworkParams& params,
                                      DynClass dyn_class, double t1, double t2,
                                      Theta theta, bool rescaled);

}  // namespace exflow
