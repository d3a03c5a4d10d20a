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

#include "exflow/exflow.h"

#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "amplitudes.hpp"
#include "bloch.hpp"
#include "errors.hpp"
#include "fisher.hpp"
#include "inference.hpp"
#include "oracle.hpp"
#include "positivity.hpp"
#include "propagator.hpp"
#include "states.hpp"
#include "verify.hpp"

struct exflow_network {
  exflow::NetworkParams params;
};

struct exflow_propagator {
  exflow::PropagatorOps ops;
};

namespace {

struct BufferTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

thread_local std::string g_last_error;
thread_local double g_last_singular_t1 =
    std::numeric_limits<double>::quiet_NaN();

exflow_status to_status(exflow::ErrorCode code) {
  using exflow::ErrorCode;
  switch (code) {
    case ErrorCode::kInvalidArgument: return EXFLOW_ERR_INVALID_ARGUMENT;
    case ErrorCode::kSingular: return EXFLOW_ERR_SINGULAR;
    case ErrorCode::kDegenerateState: return EXFLOW_ERR_DEGENERATE_STATE;
    case ErrorCode::kSizeLimit: return EXFLOW_ERR_SIZE_LIMIT;
    case ErrorCode::kDivergent: return EXFLOW_ERR_DIVERGENT;
    case ErrorCode::kIndeterminate: return EXFLOW_ERR_INDETERMINATE;
    case ErrorCode::kInconsistentObservation:
      return EXFLOW_ERR_INCONSISTENT_OBSERVATION;
    case ErrorCode::kUnsupported: return EXFLOW_ERR_UNSUPPORTED;
    case ErrorCode::kOracleFailure: return EXFLOW_ERR_ORACLE_FAILURE;
    case ErrorCode::kPole: return EXFLOW_ERR_POLE;
    case ErrorCode::kDimensionMismatch: return EXFLOW_ERR_DIMENSION_MISMATCH;
  }
  return EXFLOW_ERR_INTERNAL;
}

exflow_status fail(exflow_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
exflow_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return EXFLOW_OK;
  } catch (const exflow::SingularityError& e) {
    g_last_singular_t1 = e.t1();
    return fail(EXFLOW_ERR_SINGULAR, e.what());
  } catch (const exflow::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const BufferTooSmall& e) {
    return fail(EXFLOW_ERR_BUFFER_TOO_SMALL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EXFLOW_ERR_SIZE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(EXFLOW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EXFLOW_ERR_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw exflow::ValidationError(what);
}

exflow::DynClass to_class(exflow_class cls) {
  require(cls == EXFLOW_CLASS0 || cls == EXFLOW_CLASS1, "unknown class");
  return cls == EXFLOW_CLASS1 ? exflow::DynClass::Class1
                              : exflow::DynClass::Class0;
}

exflow::Theta to_theta(exflow_theta theta) {
  require(theta == EXFLOW_THETA_COUPLING || theta == EXFLOW_THETA_SIZE,
          "unknown parameter");
  return theta == EXFLOW_THETA_COUPLING ? exflow::Theta::CouplingJ
                                        : exflow::Theta::SizeN;
}

const exflow::NetworkParams& params_of(const exflow_network* net) {
  require(net != nullptr, "null network handle");
  return net->params;
}

exflow::SubsystemSelector selector(int k, exflow_class cls) {
  return {k, to_class(cls)};
}

exflow_complex to_c(std::complex<double> z) { return {z.real(), z.imag()}; }

void write_matrix(const exflow::CMatrix& m, exflow_complex* out,
                  size_t capacity) {
  const size_t needed = static_cast<size_t>(m.rows() * m.cols());
  require(out != nullptr, "null output buffer");
  if (capacity < needed) {
    throw BufferTooSmall("output buffer needs " + std::to_string(needed) +
                         " entries");
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out[r * m.cols() + c] = to_c(m(r, c));
}

exflow::BlochAffineMap to_map(const exflow_bloch_map* map) {
  require(map != nullptr, "null map");
  exflow::BlochAffineMap m;
  m.transverse_scale = map->transverse_scale;
  m.rotation_angle = map->rotation_angle;
  m.z_scale = map->z_scale;
  m.z_shift = map->z_shift;
  m.dyn_class = to_class(map->cls);
  return m;
}

}  // namespace

extern "C" {

const char* exflow_version(void) { return "0.1.0"; }

const char* exflow_status_string(exflow_status status) {
  switch (status) {
    case EXFLOW_OK: return "ok";
    case EXFLOW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EXFLOW_ERR_SINGULAR: return "singular start time";
    case EXFLOW_ERR_DEGENERATE_STATE: return "degenerate state";
    case EXFLOW_ERR_SIZE_LIMIT: return "size limit exceeded";
    case EXFLOW_ERR_DIVERGENT: return "divergent quantity";
    case EXFLOW_ERR_INDETERMINATE: return "indeterminate";
    case EXFLOW_ERR_INCONSISTENT_OBSERVATION: return "inconsistent observation";
    case EXFLOW_ERR_UNSUPPORTED: return "unsupported";
    case EXFLOW_ERR_ORACLE_FAILURE: return "oracle failure";
    case EXFLOW_ERR_POLE: return "pole";
    case EXFLOW_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case EXFLOW_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case EXFLOW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* exflow_last_error(void) { return g_last_error.c_str(); }

double exflow_last_singular_t1(void) { return g_last_singular_t1; }

exflow_status exflow_network_create(int n_qubits, double coupling,
                                    exflow_network** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    exflow::NetworkParams p{n_qubits, coupling};
    exflow::validate(p);
    *out = new exflow_network{p};
  });
}

void exflow_network_destroy(exflow_network* net) { delete net; }

exflow_status exflow_network_period(const exflow_network* net, double* out) {
  return guarded([&] {
    const auto& p = params_of(net);
    require(out != nullptr, "null output");
    *out = exflow::period(p);
  });
}

exflow_status exflow_amplitudes(const exflow_network* net, double t,
                                exflow_complex* same_site,
                                exflow_complex* cross_site) {
  return guarded([&] {
    require(same_site && cross_site, "null output");
    const auto a = exflow::amplitudes(params_of(net), t);
    *same_site = to_c(a.same_site);
    *cross_site = to_c(a.cross_site);
  });
}

exflow_status exflow_unitarity_residual(const exflow_network* net, double t,
                                        double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto& p = params_of(net);
    const auto r = exflow::unitarity_residual(exflow::amplitudes(p, t),
                                              p.n_qubits);
    *out = std::max(r.norm, r.orthogonality);
  });
}

exflow_status exflow_amplitude_oracle_residual(const exflow_network* net,
                                               double t, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto& p = params_of(net);
    const auto a = exflow::amplitudes(p, t);
    exflow::CMatrix closed =
        exflow::CMatrix::Constant(p.n_qubits, p.n_qubits, a.cross_site);
    closed.diagonal().setConstant(a.same_site);
    *out = exflow::max_abs_diff(exflow::q1_unitary_oracle(p, t), closed);
  });
}

exflow_status exflow_excitation_probability(const exflow_network* net,
                                            int k_qubits, exflow_class cls,
                                            double t, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = exflow::excitation_probability(params_of(net),
                                          selector(k_qubits, cls), t);
  });
}

exflow_status exflow_entanglement_entropy(const exflow_network* net,
                                          int k_qubits, exflow_class cls,
                                          double t, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = exflow::entanglement_entropy(params_of(net),
                                        selector(k_qubits, cls), t);
  });
}

exflow_status exflow_trace_distance_to_fixed(const exflow_network* net,
                                             int k_qubits, exflow_class cls,
                                             double t, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = exflow::trace_distance_to_fixed(
        exflow::reduced_state(params_of(net), selector(k_qubits, cls), t));
  });
}

exflow_status exflow_reduced_density(const exflow_network* net, int k_qubits,
                                     exflow_class cls, double t,
                                     exflow_complex* out, size_t capacity) {
  return guarded([&] {
    const auto state =
        exflow::reduced_state(params_of(net), selector(k_qubits, cls), t);
    write_matrix(exflow::materialize_density(state), out, capacity);
  });
}

exflow_status exflow_reduced_density_oracle(const exflow_network* net,
                                            int k_qubits, exflow_class cls,
                                            double t, exflow_complex* out,
                                            size_t capacity) {
  return guarded([&] {
    write_matrix(exflow::reduced_density_oracle(params_of(net),
                                                selector(k_qubits, cls), t),
                 out, capacity);
  });
}

exflow_status exflow_flow_amplitude(const exflow_network* net, int k_qubits,
                                    exflow_class cls, double t1, double t2,
                                    double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = exflow::flow_amplitude(params_of(net), selector(k_qubits, cls), t1,
                                  t2);
  });
}

exflow_status exflow_is_singular(const exflow_network* net, int k_qubits,
                                 double t1, int* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = exflow::is_singular(params_of(net), k_qubits, t1) ? 1 : 0;
  });
}

exflow_status exflow_propagator_create(const exflow_network* net, int k_qubits,
                                       exflow_class cls, double t1, double t2,
                                       exflow_propagator** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    auto ops = exflow::build_propagator(params_of(net),
                                        selector(k_qubits, cls), t1, t2);
    *out = new exflow_propagator{std::move(ops)};
  });
}

void exflow_propagator_destroy(exflow_propagator* prop) { delete prop; }

exflow_status exflow_propagator_dim(const exflow_propagator* prop, int* out) {
  return guarded([&] {
    require(prop && out, "null argument");
    *out = prop->ops.dim();
  });
}

exflow_status exflow_propagator_apply(const exflow_propagator* prop,
                                      const exflow_complex* in,
                                      exflow_complex* out, size_t entries) {
  return guarded([&] {
    require(prop && in && out, "null argument");
    const int d = prop->ops.dim();
    if (entries != static_cast<size_t>(d) * d) {
      throw exflow::Error(exflow::ErrorCode::kDimensionMismatch,
                          "operator must have " + std::to_string(d * d) +
                              " entries");
    }
    exflow::CMatrix x(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        x(r, c) = {in[r * d + c].re, in[r * d + c].im};
    write_matrix(exflow::apply_map(prop->ops, x), out, entries);
  });
}

exflow_status exflow_propagator_flow_weight(const exflow_propagator* prop,
                                            double* out) {
  return guarded([&] {
    require(prop && out, "null argument");
    *out = prop->ops.flow_weight;
  });
}

exflow_status exflow_propagator_completeness_residual(
    const exflow_propagator* prop, double* out) {
  return guarded([&] {
    require(prop && out, "null argument");
    *out = exflow::completeness_residual(prop->ops);
  });
}

exflow_status exflow_propagator_choi_min_eigenvalue(
    const exflow_propagator* prop, double* out) {
  return guarded([&] {
    require(prop && out, "null argument");
    *out = exflow::choi_min_eigenvalue(prop->ops);
  });
}

exflow_status exflow_classify(const exflow_network* net, int k_qubits,
                              exflow_class cls, double t1, double t2,
                              exflow_positivity* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto v = exflow::classify(params_of(net), selector(k_qubits, cls),
                                    t1, t2);
    *out = {v.flow_sign,
            v.choi_min_eig,
            v.trace_dist_delta,
            v.verdict == exflow::Verdict::PositiveAndCP ? 1 : 0,
            v.choi_agrees ? 1 : 0,
            v.contraction_agrees ? 1 : 0};
  });
}

exflow_status exflow_positivity_transition_time(const exflow_network* net,
                                                int k_qubits, exflow_class cls,
                                                double dt, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = exflow::positivity_transition_time(params_of(net),
                                              selector(k_qubits, cls), dt);
  });
}

exflow_status exflow_bloch_affine_map(const exflow_network* net,
                                      exflow_class cls, double t1, double t2,
                                      exflow_bloch_map* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto m = exflow::affine_map(params_of(net), to_class(cls), t1, t2);
    *out = {m.transverse_scale, m.rotation_angle, m.z_scale, m.z_shift, cls};
  });
}

exflow_status exflow_bloch_evolve(const exflow_bloch_map* map,
                                  const double in[3], double out[3]) {
  return guarded([&] {
    require(in && out, "null vector");
    const auto b = exflow::evolve_bloch(to_map(map), {in[0], in[1], in[2]});
    for (int i = 0; i < 3; ++i) out[i] = b[i];
  });
}

exflow_status exflow_bloch_axial_band(const exflow_bloch_map* map, double* lo,
                                      double* hi, int* nonempty) {
  return guarded([&] {
    require(lo && hi && nonempty, "null output");
    const auto band = exflow::axial_positivity_band(to_map(map));
    *nonempty = band ? 1 : 0;
    if (band) {
      *lo = band->lo;
      *hi = band->hi;
    }
  });
}

exflow_status exflow_bloch_ball_membership(const exflow_bloch_map* map,
                                           const double b[3], int* inside) {
  return guarded([&] {
    require(b && inside, "null argument");
    *inside = exflow::ball_membership(to_map(map), {b[0], b[1], b[2]}) ? 1 : 0;
  });
}

exflow_status exflow_bloch_state(const exflow_network* net, exflow_class cls,
                                 double t, double out[3]) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto rho = exflow::materialize_density(
        exflow::reduced_state(params_of(net), selector(1, cls), t));
    const auto b = exflow::bloch_vector(rho);
    for (int i = 0; i < 3; ++i) out[i] = b[i];
  });
}

exflow_status exflow_qfi_closed_form(const exflow_network* net, int k_qubits,
                                     exflow_class cls, exflow_theta theta,
                                     double t, exflow_fisher* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto f = exflow::qfi_closed_form(
        params_of(net), selector(k_qubits, cls), to_theta(theta), t);
    *out = {f.classical, f.quantum, f.total};
  });
}

exflow_status exflow_qfi_numeric(const exflow_network* net, int k_qubits,
                                 exflow_class cls, exflow_theta theta,
                                 double t, double relative_step, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const double step =
        relative_step > 0.0 ? relative_step : exflow::kDefaultFisherStep;
    *out = exflow::qfi_numeric_oracle(params_of(net), selector(k_qubits, cls),
                                      to_theta(theta), t, step);
  });
}

exflow_status exflow_process_state_split(const exflow_network* net,
                                         exflow_class cls, double t1,
                                         double t2, exflow_theta theta,
                                         int rescaled,
                                         exflow_fisher_split* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto s = exflow::process_state_split(
        params_of(net), to_class(cls), t1, t2, to_theta(theta), rescaled != 0);
    *out = {s.process, s.state, s.cross, s.total};
  });
}

exflow_status exflow_simulate_observation(const exflow_network* net, double t1,
                                          double t2, exflow_observation* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto o = exflow::simulate_observation(params_of(net), t1, t2);
    *out = {o.flow_class1, o.flow_class0, o.ground_prob_t1};
  });
}

exflow_status exflow_two_qubit_consistency(const exflow_observation* obs,
                                           double tol, int* out) {
  return guarded([&] {
    require(obs && out, "null argument");
    *out = exflow::two_qubit_consistency(
               {obs->flow_class1, obs->flow_class0, obs->ground_prob_t1}, tol)
               ? 1
               : 0;
  });
}

exflow_status exflow_infer_network_size(const exflow_observation* obs,
                                        exflow_size_estimate* out) {
  return guarded([&] {
    require(obs && out, "null argument");
    const auto e = exflow::infer_network_size(
        {obs->flow_class1, obs->flow_class0, obs->ground_prob_t1});
    *out = {e.estimate, e.rounded, e.residual};
  });
}

exflow_status exflow_infer_coupling(double period_estimate, double n_estimate,
                                    double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = exflow::infer_coupling(period_estimate, n_estimate);
  });
}

exflow_status exflow_estimate_period(exflow_flow_fn flow, void* user,
                                     double dt, double t_max, int scan_steps,
                                     double* out) {
  return guarded([&] {
    require(flow && out, "null argument");
    *out = exflow::estimate_period(
        [&](double a, double b) { return flow(a, b, user); }, dt, t_max,
        scan_steps);
  });
}

exflow_status exflow_conservation_residual(const exflow_network* net,
                                           int k_qubits, double t1, double t2,
                                           double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = exflow::conservation_residual(params_of(net), k_qubits, t1, t2);
  });
}

exflow_status exflow_verify(const exflow_network* net, exflow_check_fn report,
                            void* user, int* all_passed) {
  return guarded([&] {
    require(all_passed != nullptr, "null output");
    const auto results = exflow::run_verification(params_of(net));
    bool ok = true;
    for (const auto& r : results) {
      ok = ok && r.passed;
      if (report) {
        report(r.name.c_str(), r.max_residual, r.tolerance, r.passed ? 1 : 0,
               user);
      }
    }
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
