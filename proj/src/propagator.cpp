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

#include "propagator.hpp"

#include <cmath>
#include <string>

#include "amplitudes.hpp"
#include "errors.hpp"

namespace exflow {
namespace {

constexpr double kSingularTimeTolerance = 1e-9;
constexpr double kDenominatorGuard = 1e-12;

void check_times(double t1, double t2) {
  if (!std::isfinite(t1) || !std::isfinite(t2)) {
    throw ValidationError("propagator times must be finite");
  }
}

[[noreturn]] void throw_singular(const NetworkParams& params, int k,
                                 double t1) {
  throw SingularityError(
      "propagator singular at t1=" + std::to_string(t1) + " (" +
          std::to_string(t1 / period(params)) + " periods) for K=" +
          std::to_string(k) + ", N=" + std::to_string(params.n_qubits),
      t1);
}

void check_singular(const NetworkParams& params, int k, double t1) {
  if (is_singular(params, k, t1)) throw_singular(params, k, t1);
}

// Flow weight from the two |u_d|^2 values; the denominators are positive
// away from singular points.
double flow_weight(const NetworkParams& params, const SubsystemSelector& sel,
                   double x1, double x2) {
  const int n = params.n_qubits;
  const int k = sel.k_qubits;
  double den;
  double num;
  if (sel.dyn_class == DynClass::Class1) {
    if (k == n) return 0.0;
    // (x2 - x1) / (1/(N-K) - K x1), scaled through by N-K.
    num = (n - k) * (x2 - x1);
    den = 1.0 - double(k) * (n - k) * x1;
  } else {
    num = x2 - x1;
    den = 1.0 - k * x1;
  }
  return num / den;
}

}  // namespace

bool is_singular(const NetworkParams& params, int k_qubits, double t1) {
  validate(params);
  if (2 * k_qubits != params.n_qubits) return false;
  const double cycles = t1 / period(params) - 0.5;
  return std::abs(cycles - std::round(cycles)) <= kSingularTimeTolerance;
}

double flow_amplitude(const NetworkParams& params,
                      const SubsystemSelector& sel, double t1, double t2) {
  validate(params, sel);
  check_times(t1, t2);
  check_singular(params, sel.k_qubits, t1);
  const double x1 = cross_weight(params.n_qubits, params.coupling, t1);
  const double x2 = cross_weight(params.n_qubits, params.coupling, t2);
  return flow_weight(params, sel, x1, x2);
}

PropagatorOps build_propagator(const NetworkParams& params,
                               const SubsystemSelector& sel, double t1,
                               double t2) {
  validate(params, sel);
  check_times(t1, t2);
  check_singular(params, sel.k_qubits, t1);

  const int k = sel.k_qubits;
  const Amplitudes a1 = amplitudes(params, t1);
  const Amplitudes a2 = amplitudes(params, t2);
  const double x1 = std::norm(a1.cross_site);
  const double x2 = std::norm(a2.cross_site);

  PropagatorOps ops;
  ops.k_qubits = k;
  ops.dyn_class = sel.dyn_class;
  ops.t1 = t1;
  ops.t2 = t2;
  ops.block_diag = CMatrix::Zero(k + 1, k + 1);

  if (t1 == t2) {
    ops.block_diag.setIdentity();
    ops.phi_same = 1.0;
    ops.phi_cross = 0.0;
    if (sel.dyn_class == DynClass::Class1) {
      ops.flow_kind = FlowKind::OutOfSubsystem;
    } else {
      ops.flow_kind = FlowKind::IntoSubsystem;
      ops.phi_ground = 1.0;
      ops.ground_extra = 0.0;
    }
    return ops;
  }

  if (sel.dyn_class == DynClass::Class1) {
    const Complex us1 = a1.same_site, ud1 = a1.cross_site;
    const Complex us2 = a2.same_site, ud2 = a2.cross_site;
    const Complex den = (ud1 - us1) * (double(k - 1) * ud1 + us1);
    if (std::abs(den) < kDenominatorGuard) throw_singular(params, k, t1);
    ops.phi_same =
        (ud1 * ud2 - us1 * us2 + double(k - 2) * ud1 * (ud2 - us2)) / den;
    ops.phi_cross = (ud1 * us2 - us1 * ud2) / den;
    ops.flow_kind = FlowKind::OutOfSubsystem;
    ops.block_diag(0, 0) = 1.0;
    ops.block_diag.bottomRightCorner(k, k).setConstant(ops.phi_cross);
    ops.block_diag.bottomRightCorner(k, k).diagonal().setConstant(
        ops.phi_same);
  } else {
    if (std::abs(a1.same_site) < kDenominatorGuard ||
        1.0 - k * x1 < kDenominatorGuard) {
      throw_singular(params, k, t1);
    }
    ops.phi_same = a2.same_site / a1.same_site;
    ops.phi_cross = 0.0;
    ops.phi_ground = (1.0 - k * x2) / (1.0 - k * x1);
    ops.ground_extra = *ops.phi_ground - std::norm(ops.phi_same);
    ops.flow_kind = FlowKind::IntoSubsystem;
    ops.block_diag.setIdentity();
    ops.block_diag(0, 0) = ops.phi_same;
  }
  ops.flow_weight = flow_weight(params, sel, x1, x2);
  return ops;
}

CMatrix apply_map(const PropagatorOps& ops, const CMatrix& op) {
  const int d = ops.dim();
  if (op.rows() != d || op.cols() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "operator is " + std::to_string(op.rows()) + "x" +
                    std::to_string(op.cols()) + ", propagator acts on " +
                    std::to_string(d) + "x" + std::to_string(d));
  }
  const int k = ops.k_qubits;
  CMatrix out = ops.block_diag * op * ops.block_diag.adjoint();
  if (ops.dyn_class == DynClass::Class1) {
    // F = sqrt(w) |0> sum_k <k|, so F rho F^T = w (sum of q=1 block) |0><0|.
    out(0, 0) += ops.flow_weight * op.bottomRightCorner(k, k).sum();
  } else {
    // F = sqrt(w) sum_k |k><0|, G = sqrt(g) |0><0|.
    out(0, 0) += ops.ground_extra.value_or(0.0) * op(0, 0);
    out.bottomRightCorner(k, k).array() += ops.flow_weight * op(0, 0);
  }
  return out;
}

CMatrix superoperator(const PropagatorOps& ops) {
  return superoperator_matrix(
      ops.dim(), [&ops](const CMatrix& basis) { return apply_map(ops, basis); });
}

double completeness_residual(const PropagatorOps& ops) {
  const int k = ops.k_qubits;
  CMatrix sum = ops.block_diag.adjoint() * ops.block_diag;
  if (ops.dyn_class == DynClass::Class1) {
    sum.bottomRightCorner(k, k).array() += ops.flow_weight;
  } else {
    sum(0, 0) += ops.ground_extra.value_or(0.0) + k * ops.flow_weight;
  }
  return max_abs_diff(sum, CMatrix::Identity(k + 1, k + 1));
}

std::pair<double, double> element_constraint_residuals(
    const PropagatorOps& ops) {
  const int k = ops.k_qubits;
  if (ops.dyn_class == DynClass::Class0) {
    return {std::abs(ops.phi_ground.value_or(1.0) + k * ops.flow_weight - 1.0),
            0.0};
  }
  const double s2 = std::norm(ops.phi_same);
  const double d2 = std::norm(ops.phi_cross);
  const double first = std::abs(s2 + (k - 1) * d2 + ops.flow_weight - 1.0);
  if (k < 2) return {first, 0.0};
  const double second =
      std::abs(2.0 * std::real(std::conj(ops.phi_same) * ops.phi_cross) +
               (k - 2) * d2 + ops.flow_weight);
  return {first, second};
}

double compose_residual(const NetworkParams& params,
                        const SubsystemSelector& sel, double t1, double t2,
                        const CMatrix& test_density) {
  const PropagatorOps direct = build_propagator(params, sel, t1, t2);
  const PropagatorOps to_t1 = build_propagator(params, sel, 0.0, t1);
  const PropagatorOps to_t2 = build_propagator(params, sel, 0.0, t2);

  const CMatrix m1 = superoperator(to_t1);
  Eigen::JacobiSVD<CMatrix> svd(m1);
  if (svd.singularValues().minCoeff() <= kPseudoInverseCutoff) {
    throw_singular(params, sel.k_qubits, t1);
  }
  const CMatrix composed =
      superoperator(to_t2) * pseudo_inverse(m1, kPseudoInverseCutoff);

  const int d = direct.dim();
  const CMatrix lhs = apply_map(direct, test_density);
  const CMatrix rhs = unvec(composed * vec(test_density), d);
  return max_abs_diff(lhs, rhs);
}

}  // namespace exflow
