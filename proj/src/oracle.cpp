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

#include "oracle.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "amplitudes.hpp"
#include "errors.hpp"
#include "propagator.hpp"

namespace exflow {
namespace {

std::vector<int> subsystem_sites(const SubsystemSelector& sel) {
  std::vector<int> sites(sel.k_qubits);
  std::iota(sites.begin(), sites.end(),
            sel.dyn_class == DynClass::Class1 ? 0 : 1);
  return sites;
}

void require_class1(const SubsystemSelector& sel) {
  if (sel.dyn_class != DynClass::Class1) {
    throw Error(ErrorCode::kUnsupported,
                "tomography needs q=2 dynamics for class-0 subsystems");
  }
}

}  // namespace

GlobalVector evolve(const GlobalVector& psi, const CMatrix& q1_block) {
  return {psi.q0_amp, q1_block * psi.q1_amps, psi.n_qubits};
}

CMatrix partial_trace(const GlobalVector& a, const GlobalVector& b,
                      std::span<const int> sites) {
  const int k = static_cast<int>(sites.size());
  CMatrix out = CMatrix::Zero(k + 1, k + 1);
  std::vector<bool> inside(a.n_qubits, false);
  for (int s : sites) inside[s] = true;

  // Environment vacuum: subsystem keeps the q0 amplitude and its own sites.
  out(0, 0) = a.q0_amp * std::conj(b.q0_amp);
  for (int i = 0; i < k; ++i) {
    out(0, i + 1) = a.q0_amp * std::conj(b.q1_amps(sites[i]));
    out(i + 1, 0) = a.q1_amps(sites[i]) * std::conj(b.q0_amp);
    for (int j = 0; j < k; ++j) {
      out(i + 1, j + 1) =
          a.q1_amps(sites[i]) * std::conj(b.q1_amps(sites[j]));
    }
  }
  // Environment holds the excitation: subsystem in its ground state.
  for (int e = 0; e < a.n_qubits; ++e) {
    if (!inside[e]) out(0, 0) += a.q1_amps(e) * std::conj(b.q1_amps(e));
  }
  return out;
}

CMatrix reduced_density_oracle(const NetworkParams& params,
                               const SubsystemSelector& sel, double t) {
  validate(params, sel);
  const CMatrix u = q1_unitary_oracle(params, t);
  GlobalVector gen{0.0, CVector::Zero(params.n_qubits), params.n_qubits};
  gen.q1_amps(0) = 1.0;
  const GlobalVector psi = evolve(gen, u);
  const std::vector<int> sites = subsystem_sites(sel);
  return partial_trace(psi, psi, sites);
}

CMatrix dynamical_map_oracle(const NetworkParams& params,
                             const SubsystemSelector& sel, double t) {
  validate(params, sel);
  require_class1(sel);
  if (params.n_qubits > kMaxTomographyQubits) {
    throw Error(ErrorCode::kSizeLimit,
                "tomography limited to N <= " +
                    std::to_string(kMaxTomographyQubits));
  }
  const int n = params.n_qubits;
  const int d = sel.k_qubits + 1;
  const CMatrix u = q1_unitary_oracle(params, t);
  const std::vector<int> sites = subsystem_sites(sel);

  // Evolved images of the local basis |mu> (x) |0...0>_E.
  std::vector<GlobalVector> images;
  images.reserve(d);
  for (int mu = 0; mu < d; ++mu) {
    GlobalVector in{0.0, CVector::Zero(n), n};
    if (mu == 0) {
      in.q0_amp = 1.0;
    } else {
      in.q1_amps(sites[mu - 1]) = 1.0;
    }
    images.push_back(evolve(in, u));
  }

  CMatrix map(d * d, d * d);
  for (int nu = 0; nu < d; ++nu) {
    for (int mu = 0; mu < d; ++mu) {
      map.col(mu + nu * d) = vec(partial_trace(images[mu], images[nu], sites));
    }
  }
  return map;
}

CMatrix propagator_oracle(const NetworkParams& params,
                          const SubsystemSelector& sel, double t1, double t2) {
  validate(params, sel);
  require_class1(sel);
  if (is_singular(params, sel.k_qubits, t1)) {
    throw SingularityError("dynamical map not invertible at t1", t1);
  }
  const CMatrix m1 = dynamical_map_oracle(params, sel, t1);
  const CMatrix m2 = dynamical_map_oracle(params, sel, t2);
  return m2 * pseudo_inverse(m1, kPseudoInverseCutoff);
}

}  // namespace exflow
