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

#include <cmath>
#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "positivity.hpp"
#include "states.hpp"
#include "test_support.hpp"

using namespace exflow;
using namespace exflow::testing;

namespace {

int count_below(const Eigen::VectorXd& ev, double tol) {
  int c = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) c += ev(i) < -tol;
  return c;
}

bool has_eigenvalue(const Eigen::VectorXd& ev, double value, double tol) {
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i) - value) <= tol) return true;
  return false;
}

}  // namespace

TEST_SUITE("positivity") {
  TEST_CASE("Choi matrix of the identity") {
    const PropagatorOps id = build_propagator(net(5), c1(1), 0.3, 0.3);
    const CMatrix choi = choi_matrix(id);
    const auto ev = hermitian_eigenvalues(choi);
    CHECK(close(ev.maxCoeff(), 2.0, 1e-14));
    CHECK(close(ev.minCoeff(), 0.0, 1e-14));
    CHECK(close(choi.trace().real(), 2.0, 1e-14));
  }

  TEST_CASE("Choi spectra over the half period") {
    const PropagatorOps fwd = build_propagator(net(5), c1(1), 0.0, kPi / 5);
    CHECK(choi_min_eigenvalue(fwd) >= -1e-10);
    const PropagatorOps back = build_propagator(net(5), c1(1), kPi / 5, 2 * kPi / 5);
    CHECK(close(choi_min_eigenvalue(back), -16.0 / 9, 1e-12));
  }

  TEST_CASE("Choi structure: hermiticity, trace, negative eigenvalues") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int n = 2; n <= 7; ++n) {
      const double p = period(net(n));
      for (int k = 1; k <= n; ++k) {
        for (auto sel : {c1(k), c0(k)}) {
          if (sel.dyn_class == DynClass::Class0 && k == n) continue;
          for (int i = 0; i < 15; ++i) {
            const double t1 = u(rng) * p;
            if (2 * k == n && std::abs(std::remainder(t1 / p - 0.5, 1.0)) < 0.02) continue;
            const PropagatorOps ops = build_propagator(net(n), sel, t1, u(rng) * p);
            const CMatrix choi = choi_matrix(ops);
            REQUIRE(hermiticity_residual(choi) <= 1e-12 * std::max(1.0, choi.cwiseAbs().maxCoeff()));
            REQUIRE(close(choi.trace().real(), k + 1.0, 1e-9 * std::max(1.0, choi.cwiseAbs().maxCoeff())));
            const auto ev = hermitian_eigenvalues(choi);
            const double phi = ops.flow_weight;
            const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
            if (phi >= 1e-6) {
              REQUIRE(ev.minCoeff() >= -1e-9 * scale);
            } else if (phi <= -1e-6) {
              // The flow term contributes the eigenvalue K * phi_tau.
              REQUIRE(has_eigenvalue(ev, k * phi, 1e-8 * scale));
              if (sel.dyn_class == DynClass::Class1) {
                REQUIRE(close(ev.minCoeff(), k * phi, 1e-8 * scale));
                REQUIRE(count_below(ev, 1e-9 * scale) == 1);
              } else {
                // Class0 adds the [[phi_0, phi_s], [phi_s^*, 1]] block, whose
                // determinant phi_0 - |phi_s|^2 shares the sign of phi_tau
                // except at N = 2 where the two coincide.
                REQUIRE(count_below(ev, 1e-9 * scale) >= 1);
                REQUIRE(count_below(ev, 1e-9 * scale) <= 2);
              }
            }
          }
        }
      }
    }
  }

  TEST_CASE("single-qubit class-1 minimum eigenvalue equals the flow") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int n = 3; n <= 8; ++n) {
      const double p = period(net(n));
      for (int i = 0; i < 100; ++i) {
        const PropagatorOps ops = build_propagator(net(n), c1(1), u(rng) * p, u(rng) * p);
        if (ops.flow_weight >= -1e-6) continue;
        const auto ev = hermitian_eigenvalues(choi_matrix(ops));
        REQUIRE(close(ev.minCoeff(), ops.flow_weight, 1e-8));
        REQUIRE(count_below(ev, 1e-9) == 1);
      }
    }
  }

  TEST_CASE("three verdicts agree") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    int negative = 0;
    for (int i = 0; i < 3000; ++i) {
      const int n = 2 + i % 7;
      const int k = 1 + (i / 7) % n;
      const bool class1 = (i / 49) % 2 == 0 || k == n;
      const SubsystemSelector sel = class1 ? c1(k) : c0(k);
      const double p = period(net(n));
      const double t1 = u(rng) * p;
      if (is_singular(net(n), k, t1)) continue;
      const PositivityVerdict v = classify(net(n), sel, t1, u(rng) * p);
      REQUIRE(v.choi_agrees);
      REQUIRE(v.contraction_agrees);
      negative += v.verdict == Verdict::NonPositiveNonCP;
    }
    CHECK(negative > 500);
  }

  TEST_CASE("classification examples") {
    const double p = period(net(5));
    for (int k = 1; k <= 4; ++k) {
      for (auto sel : {c1(k), c0(k)}) {
        const PositivityVerdict same = classify(net(5), sel, 0.7, 0.7);
        CHECK(same.verdict == Verdict::PositiveAndCP);
        CHECK(std::abs(same.flow_sign) <= 1e-15);
        CHECK(std::abs(same.trace_dist_delta) <= 1e-15);
        CHECK(classify(net(5), sel, 0.2 * p, 0.25 * p).verdict == Verdict::PositiveAndCP);
        CHECK(classify(net(5), sel, 0.6 * p, 0.65 * p).verdict == Verdict::NonPositiveNonCP);
      }
    }
    // K = N reduces to unitary evolution.
    for (double t2 : {0.1, 0.9, 1.7}) {
      const PositivityVerdict v = classify(net(4), c1(4), 0.4, t2);
      CHECK(v.flow_sign == 0.0);
      CHECK(v.verdict == Verdict::PositiveAndCP);
    }
  }

  TEST_CASE("positivity transition times") {
    const double p = period(net(5));
    for (int k = 1; k <= 4; ++k) {
      for (auto sel : {c1(k), c0(k)}) {
        CHECK(close(positivity_transition_time(net(5), sel, 0.05 * p), 0.475 * p, 1e-10 * p));
        CHECK(close(positivity_transition_time(net(5), sel, 0.5 * p), 0.25 * p, 1e-10 * p));
      }
    }
    CHECK(close(positivity_transition_time(net(5), c1(1), 1e-9 * p), 0.5 * p, 1e-8 * p));
    CHECK_THROWS_AS(positivity_transition_time(net(5), c1(1), p), ValidationError);
    CHECK_THROWS_AS(positivity_transition_time(net(5), c1(1), 0.0), ValidationError);
  }
}
