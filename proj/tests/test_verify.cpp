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

#include "doctest.h"
#include "test_support.hpp"
#include "verify.hpp"

using namespace exflow;
using namespace exflow::testing;

TEST_SUITE("verify") {
  TEST_CASE("all checks pass and are reproducible") {
    for (int n : {3, 5}) {
      const auto first = run_verification(net(n));
      REQUIRE_FALSE(first.empty());
      for (const auto& c : first) {
        INFO("N=", n, " check=", c.name, " residual=", c.max_residual);
        CHECK(c.passed);
        CHECK(c.max_residual <= c.tolerance);
      }
      const auto second = run_verification(net(n));
      REQUIRE(second.size() == first.size());
      for (size_t i = 0; i < first.size(); ++i) {
        CHECK(second[i].name == first[i].name);
        CHECK(second[i].max_residual == first[i].max_residual);
      }
    }
  }
}
