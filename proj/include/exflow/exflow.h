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

#ifndef EXFLOW_EXFLOW_H_
#define EXFLOW_EXFLOW_H_

/*
 * C interface to the exflow library: open-subsystem propagators of an
 * all-to-all XX network of N qubits carrying one excitation.
 *
 * Conventions
 *   - Every function returns an exflow_status. On failure the output
 *     arguments are untouched and exflow_last_error() describes the problem
 *     (thread-local).
 *   - Times are in the same units as 1/J (not period units).
 *   - Matrices are (K+1) x (K+1), row-major, basis order: subsystem ground,
 *     then one excitation on subsystem qubit 1..K.
 *   - Class1 subsystems contain the initially excited qubit, Class0 do not.
 */

#include <stddef.h>

#if defined(_WIN32)
#if defined(EXFLOW_BUILDING_LIBRARY)
#define EXFLOW_API __declspec(dllexport)
#else
#define EXFLOW_API __declspec(dllimport)
#endif
#else
#define EXFLOW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum exflow_status {
  EXFLOW_OK = 0,
  EXFLOW_ERR_INVALID_ARGUMENT = 1,
  EXFLOW_ERR_SINGULAR = 2,
  EXFLOW_ERR_DEGENERATE_STATE = 3,
  EXFLOW_ERR_SIZE_LIMIT = 4,
  EXFLOW_ERR_DIVERGENT = 5,
  EXFLOW_ERR_INDETERMINATE = 6,
  EXFLOW_ERR_INCONSISTENT_OBSERVATION = 7,
  EXFLOW_ERR_UNSUPPORTED = 8,
  EXFLOW_ERR_ORACLE_FAILURE = 9,
  EXFLOW_ERR_POLE = 10,
  EXFLOW_ERR_DIMENSION_MISMATCH = 11,
  EXFLOW_ERR_BUFFER_TOO_SMALL = 12,
  EXFLOW_ERR_INTERNAL = 99
} exflow_status;

typedef enum exflow_class { EXFLOW_CLASS0 = 0, EXFLOW_CLASS1 = 1 } exflow_class;

typedef enum exflow_theta {
  EXFLOW_THETA_COUPLING = 0,
  EXFLOW_THETA_SIZE = 1
} exflow_theta;

typedef struct exflow_complex {
  double re;
  double im;
} exflow_complex;

typedef struct exflow_network exflow_network;
typedef struct exflow_propagator exflow_propagator;

EXFLOW_API const char* exflow_version(void);
EXFLOW_API const char* exflow_status_string(exflow_status status);
/* Message of the last failure on this thread, "" if none. */
EXFLOW_API const char* exflow_last_error(void);
/* Start time of the last EXFLOW_ERR_SINGULAR on this thread, NaN if none. */
EXFLOW_API double exflow_last_singular_t1(void);

/* ---- network ---------------------------------------------------------- */

EXFLOW_API exflow_status exflow_network_create(int n_qubits, double coupling,
                                               exflow_network** out);
EXFLOW_API void exflow_network_destroy(exflow_network* net);
EXFLOW_API exflow_status exflow_network_period(const exflow_network* net,
                                               double* out);

/* ---- amplitudes and states -------------------------------------------- */

EXFLOW_API exflow_status exflow_amplitudes(const exflow_network* net, double t,
                                           exflow_complex* same_site,
                                           exflow_complex* cross_site);
/* Max of the two unitarity residuals at t. */
EXFLOW_API exflow_status exflow_unitarity_residual(const exflow_network* net,
                                                   double t, double* out);
/* Max entry deviation between the closed-form q=1 block and a matrix
 * exponential of the hopping generator. */
EXFLOW_API exflow_status exflow_amplitude_oracle_residual(
    const exflow_network* net, double t, double* out);

/* Class1: probability p1 of the excitation inside the subsystem.
 * Class0: ground-state probability p0. */
EXFLOW_API exflow_status exflow_excitation_probability(
    const exflow_network* net, int k_qubits, exflow_class cls, double t,
    double* out);
EXFLOW_API exflow_status exflow_entanglement_entropy(const exflow_network* net,
                                                     int k_qubits,
                                                     exflow_class cls, double t,
                                                     double* out);
EXFLOW_API exflow_status exflow_trace_distance_to_fixed(
    const exflow_network* net, int k_qubits, exflow_class cls, double t,
    double* out);
/* `capacity` counts complex entries and must be >= (K+1)^2. */
EXFLOW_API exflow_status exflow_reduced_density(const exflow_network* net,
                                                int k_qubits, exflow_class cls,
                                                double t, exflow_complex* out,
                                                size_t capacity);
EXFLOW_API exflow_status exflow_reduced_density_oracle(
    const exflow_network* net, int k_qubits, exflow_class cls, double t,
    exflow_complex* out, size_t capacity);

/* ---- propagators ------------------------------------------------------ */

EXFLOW_API exflow_status exflow_flow_amplitude(const exflow_network* net,
                                               int k_qubits, exflow_class cls,
                                               double t1, double t2,
                                               double* out);
EXFLOW_API exflow_status exflow_is_singular(const exflow_network* net,
                                            int k_qubits, double t1, int* out);

EXFLOW_API exflow_status exflow_propagator_create(const exflow_network* net,
                                                  int k_qubits,
                                                  exflow_class cls, double t1,
                                                  double t2,
                                                  exflow_propagator** out);
EXFLOW_API void exflow_propagator_destroy(exflow_propagator* prop);
EXFLOW_API exflow_status exflow_propagator_dim(const exflow_propagator* prop,
                                               int* out);
/* Applies the map to any (K+1) x (K+1) operator; `entries` = (K+1)^2. */
EXFLOW_API exflow_status exflow_propagator_apply(const exflow_propagator* prop,
                                                 const exflow_complex* in,
                                                 exflow_complex* out,
                                                 size_t entries);
EXFLOW_API exflow_status exflow_propagator_flow_weight(
    const exflow_propagator* prop, double* out);
EXFLOW_API exflow_status exflow_propagator_completeness_residual(
    const exflow_propagator* prop, double* out);
EXFLOW_API exflow_status exflow_propagator_choi_min_eigenvalue(
    const exflow_propagator* prop, double* out);

/* ---- positivity ------------------------------------------------------- */

typedef struct exflow_positivity {
  double flow_sign;
  double choi_min_eig;
  double trace_dist_delta;
  int positive_and_cp;
  int choi_agrees;
  int contraction_agrees;
} exflow_positivity;

EXFLOW_API exflow_status exflow_classify(const exflow_network* net,
                                         int k_qubits, exflow_class cls,
                                         double t1, double t2,
                                         exflow_positivity* out);
/* Earliest t in [0, period/2] where the window [t, t+dt] stops being
 * positive. */
EXFLOW_API exflow_status exflow_positivity_transition_time(
    const exflow_network* net, int k_qubits, exflow_class cls, double dt,
    double* out);

/* ---- single-qubit Bloch picture --------------------------------------- */

typedef struct exflow_bloch_map {
  double transverse_scale;
  double rotation_angle;
  double z_scale;
  double z_shift;
  exflow_class cls;
} exflow_bloch_map;

EXFLOW_API exflow_status exflow_bloch_affine_map(const exflow_network* net,
                                                 exflow_class cls, double t1,
                                                 double t2,
                                                 exflow_bloch_map* out);
EXFLOW_API exflow_status exflow_bloch_evolve(const exflow_bloch_map* map,
                                             const double in[3],
                                             double out[3]);
/* Axial inputs b_z whose image stays in the ball. *nonempty = 0 when none. */
EXFLOW_API exflow_status exflow_bloch_axial_band(const exflow_bloch_map* map,
                                                 double* lo, double* hi,
                                                 int* nonempty);
EXFLOW_API exflow_status exflow_bloch_ball_membership(
    const exflow_bloch_map* map, const double b[3], int* inside);
/* Bloch vector of the K = 1 reduced state at t. */
EXFLOW_API exflow_status exflow_bloch_state(const exflow_network* net,
                                            exflow_class cls, double t,
                                            double out[3]);

/* ---- Fisher information ----------------------------------------------- */

typedef struct exflow_fisher {
  double classical;
  double quantum;
  double total;
} exflow_fisher;

typedef struct exflow_fisher_split {
  double process;
  double state;
  double cross;
  double total;
} exflow_fisher_split;

EXFLOW_API exflow_status exflow_qfi_closed_form(const exflow_network* net,
                                                int k_qubits, exflow_class cls,
                                                exflow_theta theta, double t,
                                                exflow_fisher* out);
/* relative_step <= 0 selects the default 1e-5. */
EXFLOW_API exflow_status exflow_qfi_numeric(const exflow_network* net,
                                            int k_qubits, exflow_class cls,
                                            exflow_theta theta, double t,
                                            double relative_step, double* out);
EXFLOW_API exflow_status exflow_process_state_split(
    const exflow_network* net, exflow_class cls, double t1, double t2,
    exflow_theta theta, int rescaled, exflow_fisher_split* out);

/* ---- inference -------------------------------------------------------- */

typedef struct exflow_observation {
  double flow_class1;
  double flow_class0;
  double ground_prob_t1;
} exflow_observation;

typedef struct exflow_size_estimate {
  double estimate;
  int rounded;
  double residual;
} exflow_size_estimate;

EXFLOW_API exflow_status exflow_simulate_observation(const exflow_network* net,
                                                     double t1, double t2,
                                                     exflow_observation* out);
EXFLOW_API exflow_status exflow_two_qubit_consistency(
    const exflow_observation* obs, double tol, int* out);
EXFLOW_API exflow_status exflow_infer_network_size(
    const exflow_observation* obs, exflow_size_estimate* out);
EXFLOW_API exflow_status exflow_infer_coupling(double period_estimate,
                                               double n_estimate, double* out);

typedef double (*exflow_flow_fn)(double t1, double t2, void* user);
EXFLOW_API exflow_status exflow_estimate_period(exflow_flow_fn flow,
                                                void* user, double dt,
                                                double t_max, int scan_steps,
                                                double* out);
EXFLOW_API exflow_status exflow_conservation_residual(const exflow_network* net,
                                                      int k_qubits, double t1,
                                                      double t2, double* out);

/* ---- verification ----------------------------------------------------- */

typedef void (*exflow_check_fn)(const char* name, double max_residual,
                                double tolerance, int passed, void* user);
/* Runs every oracle comparison for the network, reporting each check through
 * `report` (may be NULL). *all_passed is 1 iff every check passed. */
EXFLOW_API exflow_status exflow_verify(const exflow_network* net,
                                       exflow_check_fn report, void* user,
                                       int* all_passed);

#ifdef __cplusplus
}
#endif

#endif /* EXFLOW_EXFLOW_H_ */
