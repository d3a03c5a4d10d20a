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

#include "bloch.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "positivity.hpp"
#include "states.hpp"
#include "test_support.hpp"

using namespace exflow;
using namespace exflow::testing;

TEST_SUITE("bloch") {
  TEST_CASE("identity map") {
    for (auto cls : {DynClass::Class1, DynClass::Class0}) {
      const BlochAffineMap m = affine_map(net(5), cls, 0.4, 0.4);
      CHECK(m.transverse_scale == 1.0);
      CHECK(m.rotation_angle == 0.0);
      CHECK(m.z_scale == 1.0);
      CHECK(m.z_shift == 0.0);
      const auto band = axial_positivity_band(m);
      REQUIRE(band);
      CHECK(band->lo == -1.0);
      CHECK(band->hi == 1.0);
      CHECK(ball_membership(m, {0.6, 0.0, -0.8}));
    }
  }

  TEST_CASE("reference maps over the half period") {
    const BlochAffineMap a = affine_map(net(5), DynClass::Class1, 0.0, kPi / 5);
    CHECK(close(a.transverse_scale, 0.6, 1e-14));
    CHECK(close(a.z_scale, 0.36, 1e-14));
    CHECK(close(a.z_shift, 0.64, 1e-14));

    const BlochAffineMap b = affine_map(net(5), DynClass::Class1, kPi / 5, 2 * kPi / 5);
    CHECK(close(b.transverse_scale, 5.0 / 3, 1e-13));
    CHECK(close(b.z_scale, 25.0 / 9, 1e-13));
    CHECK(close(b.z_shift, -16.0 / 9, 1e-13));

    const BlochVector out = evolve_bloch(b, {0.0, 0.0, 0.28});
    CHECK(close(out[2], -1.0, 1e-13));
    const auto band = axial_positivity_band(b);
    REQUIRE(band);
    CHECK(close(band->lo, 0.28, 1e-12));
    CHECK(close(band->hi, 1.0, 1e-12));
    CHECK(ball_membership(b, {0.0, 0.0, 0.28}));
    CHECK_FALSE(ball_membership(b, {0.5, 0.0, 0.28}));
    CHECK_THROWS_AS(ball_membership(b, {1.0, 0.0, 0.5}), ValidationError);

    const BlochAffineMap c = affine_map(net(5), DynClass::Class0, 0.0, kPi / 5);
    CHECK(close(evolve_bloch(c, {0.0, 0.0, 1.0})[2], 0.68, 1e-14));
  }

  TEST_CASE("fixed points and class identities") {
    CHECK(fixed_point_z(DynClass::Class1) == 1.0);
    CHECK(fixed_point_z(DynClass::Class0) == -1.0);
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int n = 3; n <= 8; ++n) {
      const double p = period(net(n));
      for (int i = 0; i < 100; ++i) {
        for (auto cls : {DynClass::Class1, DynClass::Class0}) {
          const double t1 = u(rng) * p;
          const double t2 = u(rng) * p;
          const BlochAffineMap m = affine_map(net(n), cls, t1, t2);
          const double z = fixed_point_z(cls);
          const BlochVector f = evolve_bloch(m, {0.0, 0.0, z});
          REQUIRE(close(f[2], z, 1e-12));
          REQUIRE(std::abs(f[0]) + std::abs(f[1]) == 0.0);
          REQUIRE(close(m.z_shift, z * (1.0 - m.z_scale), 1e-12 * std::max(1.0, m.z_scale)));

          const bool cp = classify(net(n), {1, cls}, t1, t2).verdict == Verdict::PositiveAndCP;
          const auto band = axial_positivity_band(m);
          REQUIRE(band);
          const bool full = band->lo <= -1.0 + 1e-12 && band->hi >= 1.0 - 1e-12;
          REQUIRE(full == cp);
          REQUIRE(band->lo <= z);
          REQUIRE(band->hi >= z);
        }
      }
    }
  }

  TEST_CASE("orbit consistency with dense states") {
    for (int n = 3; n <= 7; ++n) {
      for (auto cls : {DynClass::Class1, DynClass::Class0}) {
        const double t1 = 0.17;
        const BlochVector b1 = bloch_vector(materialize_density(reduced_state(net(n), {1, cls}, t1)));
        for (int i = 0; i < 30; ++i) {
          const double t2 = 0.1 * i;
          const BlochVector b2 = evolve_bloch(affine_map(net(n), cls, t1, t2), b1);
          const BlochVector ref = bloch_vector(materialize_density(reduced_state(net(n), {1, cls}, t2)));
          for (int c = 0; c < 3; ++c) REQUIRE(close(b2[c], ref[c], 1e-10));
        }
      }
    }
  }

  TEST_CASE("physical orbit starts at the poles") {
    const BlochVector one = bloch_vector(materialize_density(reduced_state(net(5), c1(1), 0.0)));
    const BlochVector zero = bloch_vector(materialize_density(reduced_state(net(5), c0(1), 0.0)));
    CHECK(one[2] == -1.0);
    CHECK(zero[2] == 1.0);
  }

  TEST_CASE("two-qubit singular start") {
    CHECK_THROWS_AS(affine_map(net(2), DynClass::Class1, kPi / 2, 0.3), SingularityError);
  }
}
