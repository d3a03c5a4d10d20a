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

#include <cmath>
#include <numbers>

#include "linalg.hpp"
#include "network.hpp"

namespace exflow::testing {

inline constexpr double kPi = std::numbers::pi;

inline NetworkParams net(int n, double j = 1.0) { return {n, j}; }

inline SubsystemSelector c1(int k) { return {k, DynClass::Class1}; }
inline SubsystemSelector c0(int k) { return {k, DynClass::Class0}; }

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

inline bool close(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace exflow::testing
