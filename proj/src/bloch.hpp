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

#include <array>
#include <optional>

#include "linalg.hpp"
#include "network.hpp"

namespace exflow {

using BlochVector = std::array<double, 3>;

/// K = 1 propagator as an affine map on Bloch vectors (ground |0> at
/// b_z = +1):
///
///   (b_x + i b_y) -> transverse_scale * e^{i rotation_angle} (b_x + i b_y)
///   b_z           -> z_shift + z_scale * b_z
struct BlochAffineMap {
  double transverse_scale = 1.0;
  double rotation_angle = 0.0;
  double z_scale = 1.0;
  double z_shift = 0.0;
  DynClass dyn_class = DynClass::Class1;
  double t1 = 0.0;
  double t2 = 0.0;
};

BlochAffineMap affine_map(const NetworkParams& params, DynClass dyn_class,
                          double t1, double t2);

BlochVector evolve_bloch(const BlochAffineMap& map, const BlochVector& b);

/// Closed interval [lo, hi] of axial inputs b_z in [-1, 1] whose image
/// stays in the ball; nullopt when empty.
struct AxialBand {
  double lo;
  double hi;
};
std::optional<AxialBand> axial_positivity_band(const BlochAffineMap& map);

/// Whether the image of b (|b| <= 1) lies in the Bloch ball.
bool ball_membership(const BlochAffineMap& map, const BlochVector& b);

/// Fixed point b_z of the class: +1 for Class1, -1 for Class0.
double fixed_point_z(DynClass dyn_class);

BlochVector bloch_vector(const CMatrix& rho);

}  // namespace exflow
