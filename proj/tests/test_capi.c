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

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "exflow/exflow.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, \
              #cond);                                             \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static const double kPi = 3.14159265358979323846;

static double flow_c1(double t1, double t2, void* user) {
  const exflow_network* net = (const exflow_network*)user;
  double out = 0.0;
  exflow_flow_amplitude(net, 1, EXFLOW_CLASS1, t1, t2, &out);
  return out;
}

struct tally {
  int count;
  int failed;
};

static void on_check(const char* name, double residual, double tol,
                     int passed, void* user) {
  struct tally* t = (struct tally*)user;
  (void)residual;
  (void)tol;
  EXPECT(name != NULL && name[0] != '\0');
  ++t->count;
  t->failed += !passed;
}

int main(void) {
  exflow_network* net = NULL;
  exflow_network* six = NULL;
  exflow_network* bad = NULL;
  double v = 0.0;
  int flag = 0;

  EXPECT(strlen(exflow_version()) > 0);
  EXPECT(exflow_network_create(1, 1.0, &bad) == EXFLOW_ERR_INVALID_ARGUMENT);
  EXPECT(bad == NULL);
  EXPECT(strlen(exflow_last_error()) > 0);
  EXPECT(exflow_network_create(5, 0.0, &bad) == EXFLOW_ERR_INVALID_ARGUMENT);
  EXPECT(exflow_network_create(5, 1.0, NULL) == EXFLOW_ERR_INVALID_ARGUMENT);
  EXPECT(exflow_network_create(5, 1.0, &net) == EXFLOW_OK);
  EXPECT(exflow_network_create(6, 1.0, &six) == EXFLOW_OK);

  EXPECT(exflow_network_period(net, &v) == EXFLOW_OK);
  EXPECT(fabs(v - 2 * kPi / 5) < 1e-15);

  {
    exflow_complex us, ud;
    EXPECT(exflow_amplitudes(net, kPi / 5, &us, &ud) == EXFLOW_OK);
    EXPECT(fabs(us.re + 0.6) < 1e-14 && fabs(us.im) < 1e-14);
    EXPECT(fabs(ud.re - 0.4) < 1e-14 && fabs(ud.im) < 1e-14);
    EXPECT(exflow_unitarity_residual(net, 0.7, &v) == EXFLOW_OK && v < 1e-12);
    EXPECT(exflow_amplitude_oracle_residual(net, 0.7, &v) == EXFLOW_OK && v < 1e-9);
  }

  EXPECT(exflow_excitation_probability(net, 1, EXFLOW_CLASS1, kPi / 5, &v) == EXFLOW_OK);
  EXPECT(fabs(v - 0.36) < 1e-14);
  EXPECT(exflow_entanglement_entropy(net, 1, EXFLOW_CLASS1, 0.0, &v) == EXFLOW_OK);
  EXPECT(v == 0.0);
  EXPECT(exflow_excitation_probability(net, 6, EXFLOW_CLASS1, 0.1, &v) ==
         EXFLOW_ERR_INVALID_ARGUMENT);
  EXPECT(exflow_excitation_probability(net, 1, (exflow_class)7, 0.1, &v) ==
         EXFLOW_ERR_INVALID_ARGUMENT);

  {
    exflow_complex rho[9], oracle[9];
    int i;
    EXPECT(exflow_reduced_density(net, 2, EXFLOW_CLASS1, 0.3, rho, 8) ==
           EXFLOW_ERR_BUFFER_TOO_SMALL);
    EXPECT(exflow_reduced_density(net, 2, EXFLOW_CLASS1, 0.3, rho, 9) == EXFLOW_OK);
    EXPECT(exflow_reduced_density_oracle(net, 2, EXFLOW_CLASS1, 0.3, oracle, 9) == EXFLOW_OK);
    for (i = 0; i < 9; ++i) {
      EXPECT(fabs(rho[i].re - oracle[i].re) < 1e-10);
      EXPECT(fabs(rho[i].im - oracle[i].im) < 1e-10);
    }
  }

  {
    exflow_propagator* prop = NULL;
    exflow_complex in[4] = {{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}};
    exflow_complex out[4];
    int dim = 0;
    EXPECT(exflow_flow_amplitude(net, 1, EXFLOW_CLASS1, 0.0, kPi / 5, &v) == EXFLOW_OK);
    EXPECT(fabs(v - 0.64) < 1e-14);
    EXPECT(exflow_propagator_create(net, 1, EXFLOW_CLASS1, kPi / 5, 2 * kPi / 5, &prop) ==
           EXFLOW_OK);
    EXPECT(exflow_propagator_dim(prop, &dim) == EXFLOW_OK && dim == 2);
    EXPECT(exflow_propagator_flow_weight(prop, &v) == EXFLOW_OK);
    EXPECT(fabs(v + 16.0 / 9) < 1e-12);
    EXPECT(exflow_propagator_apply(prop, in, out, 4) == EXFLOW_OK);
    EXPECT(fabs(out[0].re + 16.0 / 9) < 1e-12);
    EXPECT(exflow_propagator_apply(prop, in, out, 9) == EXFLOW_ERR_DIMENSION_MISMATCH);
    EXPECT(exflow_propagator_completeness_residual(prop, &v) == EXFLOW_OK && v < 1e-10);
    EXPECT(exflow_propagator_choi_min_eigenvalue(prop, &v) == EXFLOW_OK);
    EXPECT(fabs(v + 16.0 / 9) < 1e-12);
    exflow_propagator_destroy(prop);
    exflow_propagator_destroy(NULL);
  }

  {
    exflow_propagator* prop = NULL;
    EXPECT(exflow_is_singular(six, 3, kPi / 6, &flag) == EXFLOW_OK && flag == 1);
    EXPECT(exflow_propagator_create(six, 3, EXFLOW_CLASS1, kPi / 6, 0.9, &prop) ==
           EXFLOW_ERR_SINGULAR);
    EXPECT(prop == NULL);
    EXPECT(fabs(exflow_last_singular_t1() - kPi / 6) < 1e-15);
  }

  {
    exflow_positivity pos;
    EXPECT(exflow_classify(net, 1, EXFLOW_CLASS1, kPi / 5, 2 * kPi / 5, &pos) == EXFLOW_OK);
    EXPECT(pos.positive_and_cp == 0 && pos.choi_agrees && pos.contraction_agrees);
    EXPECT(exflow_positivity_transition_time(net, 1, EXFLOW_CLASS1, 0.05 * 2 * kPi / 5, &v) ==
           EXFLOW_OK);
    EXPECT(fabs(v - 0.475 * 2 * kPi / 5) < 1e-10);
  }

  {
    exflow_bloch_map map;
    double in[3] = {0.0, 0.0, 0.28};
    double out[3];
    double lo = 0.0, hi = 0.0;
    int nonempty = 0, inside = 0;
    EXPECT(exflow_bloch_affine_map(net, EXFLOW_CLASS1, kPi / 5, 2 * kPi / 5, &map) == EXFLOW_OK);
    EXPECT(fabs(map.z_shift + 16.0 / 9) < 1e-12);
    EXPECT(exflow_bloch_evolve(&map, in, out) == EXFLOW_OK);
    EXPECT(fabs(out[2] + 1.0) < 1e-12);
    EXPECT(exflow_bloch_axial_band(&map, &lo, &hi, &nonempty) == EXFLOW_OK);
    EXPECT(nonempty && fabs(lo - 0.28) < 1e-12 && fabs(hi - 1.0) < 1e-12);
    EXPECT(exflow_bloch_ball_membership(&map, in, &inside) == EXFLOW_OK && inside);
    EXPECT(exflow_bloch_state(net, EXFLOW_CLASS1, 0.0, out) == EXFLOW_OK);
    EXPECT(out[2] == -1.0);
  }

  {
    exflow_fisher f;
    exflow_fisher_split s;
    double num = 0.0;
    EXPECT(exflow_qfi_closed_form(net, 1, EXFLOW_CLASS0, EXFLOW_THETA_COUPLING, kPi / 10, &f) ==
           EXFLOW_OK);
    EXPECT(fabs(f.classical - 0.21456) < 1e-5 && f.quantum == 0.0);
    EXPECT(exflow_qfi_numeric(net, 1, EXFLOW_CLASS0, EXFLOW_THETA_COUPLING, kPi / 10, 0.0, &num) ==
           EXFLOW_OK);
    EXPECT(fabs(num - f.total) < 1e-4 * f.total);
    EXPECT(exflow_qfi_closed_form(net, 5, EXFLOW_CLASS1, EXFLOW_THETA_SIZE, 0.3, &f) ==
           EXFLOW_ERR_DIVERGENT);
    EXPECT(exflow_process_state_split(net, EXFLOW_CLASS1, 0.2, 0.9, EXFLOW_THETA_COUPLING, 1, &s) ==
           EXFLOW_OK);
    EXPECT(fabs(s.process + s.state + s.cross - s.total) < 1e-12);
  }

  {
    exflow_observation obs;
    exflow_size_estimate est;
    exflow_observation none = {0.0, 0.0, 1.0};
    EXPECT(exflow_simulate_observation(net, 0.0, kPi / 5, &obs) == EXFLOW_OK);
    EXPECT(exflow_infer_network_size(&obs, &est) == EXFLOW_OK);
    EXPECT(est.rounded == 5 && fabs(est.estimate - 5.0) < 1e-12);
    EXPECT(exflow_two_qubit_consistency(&obs, 1e-6, &flag) == EXFLOW_OK && flag == 0);
    EXPECT(exflow_infer_network_size(&none, &est) == EXFLOW_ERR_INDETERMINATE);
    EXPECT(exflow_estimate_period(flow_c1, net, 0.05 * 2 * kPi / 5, 2.0, 1000, &v) == EXFLOW_OK);
    EXPECT(fabs(v - 2 * kPi / 5) < 1e-9);
    EXPECT(exflow_infer_coupling(v, 5.0, &v) == EXFLOW_OK && fabs(v - 1.0) < 1e-8);
    EXPECT(exflow_conservation_residual(net, 1, 0.0, kPi / 5, &v) == EXFLOW_OK && v < 1e-12);
  }

  {
    exflow_network* three = NULL;
    struct tally t = {0, 0};
    EXPECT(exflow_network_create(3, 1.0, &three) == EXFLOW_OK);
    EXPECT(exflow_verify(three, on_check, &t, &flag) == EXFLOW_OK);
    EXPECT(flag == 1 && t.count > 5 && t.failed == 0);
    exflow_network_destroy(three);
  }

  EXPECT(strcmp(exflow_status_string(EXFLOW_ERR_SINGULAR), "") != 0);
  EXPECT(exflow_network_period(NULL, &v) == EXFLOW_ERR_INVALID_ARGUMENT);

  exflow_network_destroy(six);
  exflow_network_destroy(net);
  exflow_network_destroy(NULL);

  if (failures) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
