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

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "amplitudes.hpp"
#include "fisher.hpp"
#include "inference.hpp"
#include "oracle.hpp"
#include "positivity.hpp"
#include "propagator.hpp"
#include "states.hpp"

namespace exflow {
namespace {

class Tracker {
 public:
  Tracker(std::string name, double tolerance)
      : result_{std::move(name), 0.0, tolerance, true} {}

  void observe(double residual) {
    if (!(residual <= result_.max_residual)) result_.max_residual = residual;
  }

  CheckResult finish() {
    result_.passed = result_.max_residual <= result_.tolerance;
    return result_;
  }

 private:
  CheckResult result_;
};

std::vector<SubsystemSelector> all_selectors(int n) {
  std::vector<SubsystemSelector> out;
  for (int k = 1; k <= n; ++k) out.push_back({k, DynClass::Class1});
  for (int k = 1; k < n; ++k) out.push_back({k, DynClass::Class0});
  return out;
}

CMatrix random_unit_trace_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix a(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = Complex(g(rng), g(rng));
  CMatrix h = a + a.adjoint();
  h.diagonal().array() += (1.0 - h.trace().real()) / d;
  return h;
}

// Random start time at least 1% of a period away from singular points.
double sample_start(const NetworkParams& params, int k,
                    std::uniform_real_distribution<double>& u,
                    std::mt19937_64& rng) {
  const double p = period(params);
  for (;;) {
    const double t = u(rng) * 2.0 * p;
    if (2 * k != params.n_qubits) return t;
    const double c = t / p - 0.5;
    if (std::abs(c - std::round(c)) > 0.01) return t;
  }
}

}  // namespace

std::vector<CheckResult> run_verification(const NetworkParams& params) {
  validate(params);
  const int n = params.n_qubits;
  const double p = period(params);
  std::mt19937_64 rng(kVerifySeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<CheckResult> results;

  {
    Tracker norm("unitarity", 1e-12);
    Tracker amp("amplitude_oracle", 1e-9);
    for (int i = 0; i < 400; ++i) {
      const double t = p * i / 400.0;
      const Amplitudes a = amplitudes(params, t);
      const UnitarityResidual r = unitarity_residual(a, n);
      norm.observe(std::max(r.norm, r.orthogonality));
      if (i % 4 == 0) {
        const CMatrix u = q1_unitary_oracle(params, t);
        CMatrix closed = CMatrix::Constant(n, n, a.cross_site);
        closed.diagonal().setConstant(a.same_site);
        amp.observe(max_abs_diff(u, closed));
      }
    }
    results.push_back(norm.finish());
    results.push_back(amp.finish());
  }

  {
    Tracker states("reduced_state_oracle", 1e-9);
    for (const SubsystemSelector& sel : all_selectors(n)) {
      for (int i = 0; i < 50; ++i) {
        const double t = p * (i + 0.5) / 50.0;
        if (sel.dyn_class == DynClass::Class1 && n == 2 &&
            std::abs(t / p - 0.5) < 1e-9) {
          continue;
        }
        states.observe(
            max_abs_diff(materialize_density(reduced_state(params, sel, t)),
                         reduced_density_oracle(params, sel, t)));
      }
    }
    results.push_back(states.finish());
  }

  {
    Tracker tomo("propagator_tomography_class1", 1e-8);
    Tracker orbit("orbit_consistency", 1e-9);
    Tracker orbit0("class0_orbit_oracle", 1e-9);
    Tracker complete("completeness_relation", 1e-10);
    Tracker trace("trace_preservation", 1e-10);
    Tracker compose("composition_residual", 1e-8);
    Tracker agree("positivity_disagreements", 0.0);
    Tracker conserve("conservation_relation", 1e-10);
    for (const SubsystemSelector& sel : all_selectors(n)) {
      for (int i = 0; i < 20; ++i) {
        const double t1 = sample_start(params, sel.k_qubits, unit, rng);
        const double t2 = unit(rng) * 2.0 * p;
        const PropagatorOps ops = build_propagator(params, sel, t1, t2);
        // Residuals relative to the map's entry scale near singular points.
        const double scale =
            std::max(1.0, superoperator(ops).cwiseAbs().maxCoeff());
        complete.observe(completeness_residual(ops) / scale);
        const CMatrix rho = random_unit_trace_hermitian(ops.dim(), rng);
        trace.observe(std::abs(apply_map(ops, rho).trace() - rho.trace()) /
                      (scale * std::max(1.0, rho.cwiseAbs().maxCoeff())));
        compose.observe(compose_residual(params, sel, t1, t2, rho));

        const CMatrix before = materialize_density(reduced_state(params, sel, t1));
        const CMatrix after = materialize_density(reduced_state(params, sel, t2));
        orbit.observe(max_abs_diff(apply_map(ops, before), after));

        if (sel.dyn_class == DynClass::Class1) {
          tomo.observe(max_abs_diff(superoperator(ops),
                                    propagator_oracle(params, sel, t1, t2)));
        } else {
          orbit0.observe(max_abs_diff(apply_map(ops, before),
                                      reduced_density_oracle(params, sel, t2)));
        }

        const PositivityVerdict v = classify(params, sel, t1, t2);
        agree.observe((v.choi_agrees && v.contraction_agrees) ? 0.0 : 1.0);

        if (sel.dyn_class == DynClass::Class1 && sel.k_qubits < n &&
            std::abs(ops.flow_weight) > 1e-6) {
          conserve.observe(conservation_residual(params, sel.k_qubits, t1, t2));
        }
      }
    }
    for (Tracker* t : {&tomo, &orbit, &orbit0, &complete, &trace, &compose,
                       &agree, &conserve}) {
      results.push_back(t->finish());
    }
  }

  {
    // err / allowed, allowed = 1e-4 relative or 1e-8 absolute near zeros.
    Tracker fisher("fisher_oracle_err_over_allowed", 1.0);
    for (const SubsystemSelector& sel : all_selectors(n)) {
      for (Theta theta : {Theta::CouplingJ, Theta::SizeN}) {
        if (theta == Theta::SizeN && sel.dyn_class == DynClass::Class1 &&
            sel.k_qubits == n) {
          continue;
        }
        for (int i = 0; i < 24; ++i) {
          const double t = p * (0.013 + 1.97 * i / 24.0);
          if (n == 2 && std::abs(std::fmod(t / p, 1.0) - 0.5) < 0.02) continue;
          const double ref = qfi_closed_form(params, sel, theta, t).total;
          const double num = qfi_numeric_oracle(params, sel, theta, t);
          const double allowed = std::abs(ref) < 1e-8 ? 1e-8 : 1e-4 * std::abs(ref);
          fisher.observe(std::abs(num - ref) / allowed);
        }
      }
    }
    results.push_back(fisher.finish());
  }
  return results;
}

}  // namespace exflow
