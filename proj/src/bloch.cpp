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

#include "bloch.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"
#include "propagator.hpp"

namespace exflow {

double fixed_point_z(DynClass dyn_class) {
  return dyn_class == DynClass::Class1 ? 1.0 : -1.0;
}

BlochAffineMap affine_map(const NetworkParams& params, DynClass dyn_class,
                          double t1, double t2) {
  const PropagatorOps ops =
      build_propagator(params, {1, dyn_class}, t1, t2);
  BlochAffineMap map;
  map.dyn_class = dyn_class;
  map.t1 = t1;
  map.t2 = t2;
  map.transverse_scale = std::abs(ops.phi_same);
  if (dyn_class == DynClass::Class1) {
    // theta = arg(phi_0^* phi_s) with phi_0 = 1.
    map.rotation_angle = std::arg(ops.phi_same);
    map.z_scale = std::norm(ops.phi_same);
    map.z_shift = ops.flow_weight;
  } else {
    // theta = arg(phi_s^* phi_2) with phi_2 = 1.
    map.rotation_angle = -std::arg(ops.phi_same);
    map.z_scale = *ops.phi_ground;
    map.z_shift = -ops.flow_weight;
  }
  return map;
}

BlochVector evolve_bloch(const BlochAffineMap& map, const BlochVector& b) {
  const double c = std::cos(map.rotation_angle);
  const double s = std::sin(map.rotation_angle);
  const double r = map.transverse_scale;
  return {r * (c * b[0] - s * b[1]), r * (s * b[0] + c * b[1]),
          map.z_shift + map.z_scale * b[2]};
}

std::optional<AxialBand> axial_positivity_band(const BlochAffineMap& map) {
  // |z_shift + z_scale b| <= 1 with z_scale > 0 for every non-singular map.
  double lo = -1.0;
  double hi = 1.0;
  if (map.z_scale > 0.0) {
    lo = std::max(lo, (-1.0 - map.z_shift) / map.z_scale);
    hi = std::min(hi, (1.0 - map.z_shift) / map.z_scale);
  } else if (std::abs(map.z_shift) > 1.0) {
    return std::nullopt;
  }
  if (lo > hi) return std::nullopt;
  // A map that fixes its class pole keeps that pole as an exact band edge.
  const double pole = fixed_point_z(map.dyn_class);
  const double drift = map.z_shift + map.z_scale * pole - pole;
  if (std::abs(drift) <= 1e-12 * std::max(1.0, std::abs(map.z_scale))) {
    (pole > 0.0 ? hi : lo) = pole;
  }
  return AxialBand{lo, hi};
}

bool ball_membership(const BlochAffineMap& map, const BlochVector& b) {
  const double norm2 = b[0] * b[0] + b[1] * b[1] + b[2] * b[2];
  if (norm2 > 1.0 + 1e-12) {
    throw ValidationError("input Bloch vector lies outside the unit ball");
  }
  const double r = map.transverse_scale;
  const double z = map.z_shift + map.z_scale * b[2];
  return r * r * (b[0] * b[0] + b[1] * b[1]) + z * z <= 1.0 + 1e-12;
}

BlochVector bloch_vector(const CMatrix& rho) {
  // rho = (1 + b.sigma)/2 in the (|0>, |1>) basis.
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(),
          (rho(0, 0) - rho(1, 1)).real()};
}

}  // namespace exflow
