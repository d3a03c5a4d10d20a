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

#include "fisher.hpp"

#include <cmath>
#include <string>

#include "amplitudes.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "propagator.hpp"
#include "states.hpp"

namespace exflow {
namespace {

constexpr double kEigenPairCutoff = 1e-12;

void check_divergence(const NetworkParams& params,
                      const SubsystemSelector& sel, Theta theta) {
  if (theta == Theta::SizeN && sel.dyn_class == DynClass::Class1 &&
      sel.k_qubits == params.n_qubits) {
    throw Error(ErrorCode::kDivergent,
                "Fisher information for N diverges when the subsystem is "
                "the whole network");
  }
}

}  // namespace

FisherBreakdown qfi_closed_form(const NetworkParams& params,
                                const SubsystemSelector& sel, Theta theta,
                                double t) {
  validate(params, sel);
  check_divergence(params, sel, theta);
  const double n = params.n_qubits;
  const double k = sel.k_qubits;
  const double j = params.coupling;
  const double alpha = n * j * t;
  const double s = std::sin(0.5 * alpha);
  const double c = std::cos(0.5 * alpha);
  // Number of qubits whose share of the excitation is missing from p.
  const double m = sel.dyn_class == DynClass::Class1 ? n - k : k;
  // 1 - 4 m s^2 / N^2, written so it stays accurate where it vanishes.
  const double p = c * c + (1.0 - 4.0 * m / (n * n)) * s * s;

  FisherBreakdown f;
  f.theta = theta;
  if (theta == Theta::CouplingJ) {
    f.classical = 4.0 * t * t * m * c * c / p;
    if (sel.dyn_class == DynClass::Class1) {
      f.quantum = 4.0 * t * t * (k - 1.0) / p;
    }
  } else if (sel.dyn_class == DynClass::Class1) {
    const double bracket = (n - 2.0 * k) * s - (n - k) * alpha * c;
    f.classical = 4.0 * bracket * bracket / (n * n * (n - k) * (n * n * p));
    f.quantum = 4.0 * (k - 1.0) *
                (alpha * alpha - 2.0 * alpha * std::sin(alpha) + 4.0 * s * s) /
                (n * n * (n * n * p));
  } else {
    const double bracket = j * t * c - 2.0 / n * s;
    f.classical = 4.0 * k * bracket * bracket / (n * n * p);
  }
  f.total = f.classical + f.quantum;
  return f;
}

double qfi_numeric_oracle(const NetworkParams& params,
                          const SubsystemSelector& sel, Theta theta, double t,
                          double relative_step) {
  validate(params, sel);
  check_divergence(params, sel, theta);
  const double n = params.n_qubits;
  const double j = params.coupling;
  const double value = theta == Theta::CouplingJ ? j : n;
  const double h = relative_step * value;

  auto density = [&](double shift) {
    return theta == Theta::CouplingJ
               ? reduced_density_real(n, j + shift, sel, t)
               : reduced_density_real(n + shift, j, sel, t);
  };
  const CMatrix rho = density(0.0);
  const CMatrix drho = (density(h) - density(-h)) / (2.0 * h);

  Eigen::SelfAdjointEigenSolver<CMatrix> eig(0.5 * (rho + rho.adjoint()));
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const CMatrix& basis = eig.eigenvectors();
  const CMatrix d = basis.adjoint() * drho * basis;

  // L_ij = 2 d_ij / (l_i + l_j); Tr[L^2 rho] = sum 2 |d_ij|^2 / (l_i + l_j).
  double fisher = 0.0;
  int used = 0;
  for (Eigen::Index a = 0; a < lambda.size(); ++a) {
    for (Eigen::Index b = 0; b < lambda.size(); ++b) {
      const double sum = lambda(a) + lambda(b);
      if (sum <= kEigenPairCutoff) continue;
      fisher += 2.0 * std::norm(d(a, b)) / sum;
      ++used;
    }
  }
  if (used == 0) {
    throw Error(ErrorCode::kOracleFailure,
                "no eigenvalue pair above the SLD cutoff");
  }
  return fisher;
}

double excitation_probability_derivative(const NetworkParams& params,
                                         const SubsystemSelector& sel,
                                         Theta theta, double t) {
  validate(params, sel);
  const double n = params.n_qubits;
  const double dx =
      cross_weight_derivative(n, params.coupling, t, theta);
  if (sel.dyn_class == DynClass::Class0) return -sel.k_qubits * dx;
  // p1 = 1 - (N - K) x
  double dp = -(n - sel.k_qubits) * dx;
  if (theta == Theta::SizeN) dp -= cross_weight(n, params.coupling, t);
  return dp;
}

ProcessStateSplit process_state_split(const NetworkParams& params,
                                      DynClass dyn_class, double t1, double t2,
                                      Theta theta, bool rescaled) {
  const SubsystemSelector sel{1, dyn_class};
  const double flow = flow_amplitude(params, sel, t1, t2);
  const double p1 = excitation_probability(params, sel, t1);
  const double p2 = excitation_probability(params, sel, t2);
  const double dp1 =
      excitation_probability_derivative(params, sel, theta, t1);
  // At K = 1, phi_tau = a (x2 - x1) / (1 - a x1) with a = N - 1 (Class1)
  // or a = 1 (Class0).
  const double n = params.n_qubits;
  const double j = params.coupling;
  const bool class1 = dyn_class == DynClass::Class1;
  const double a = class1 ? n - 1.0 : 1.0;
  const double da = class1 && theta == Theta::SizeN ? 1.0 : 0.0;
  const double x1 = cross_weight(n, j, t1);
  const double x2 = cross_weight(n, j, t2);
  const double dx1 = cross_weight_derivative(n, j, t1, theta);
  const double dx2 = cross_weight_derivative(n, j, t2, theta);
  const double num = a * (x2 - x1);
  const double den = 1.0 - a * x1;
  const double dnum = da * (x2 - x1) + a * (dx2 - dx1);
  const double dden = -(da * x1 + a * dx1);
  const double dflow = (dnum * den - num * dden) / (den * den);
  const double keep = 1.0 - flow;

  ProcessStateSplit split;
  split.t1 = t1;
  split.t2 = t2;
  split.process = dflow * dflow * p1 * p1;
  split.cross = -2.0 * dflow * p1 * keep * dp1;
  split.state = keep * keep * dp1 * dp1;
  if (!rescaled) {
    const double den = p2 * (1.0 - p2);
    if (den < 1e-14) {
      throw Error(ErrorCode::kPole,
                  "p(t2) is 0 or 1; use the rescaled decomposition");
    }
    split.process /= den;
    split.cross /= den;
    split.state /= den;
  }
  split.total = split.process + split.cross + split.state;
  return split;
}

}  // namespace exflow
