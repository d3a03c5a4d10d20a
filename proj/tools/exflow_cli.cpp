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

// Command-line front end: writes CSV datasets over a uniform time grid and
// runs the oracle verification suites. Links only the public C interface.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <memory>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exflow/exflow.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitSingular = 3;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Config {
  int n = 0;
  double j = 1.0;
  std::string k = "1";
  std::string cls;
  double t1 = 0.0;
  std::optional<double> t2;
  std::optional<double> dt;
  int steps = 400;
  double periods = 1.0;
  std::string out = "-";
  std::string theta = "J";
  bool raw = false;
};

// Carries a C status out of nested loops.
struct StatusError : std::runtime_error {
  exflow_status status;
  explicit StatusError(exflow_status s)
      : std::runtime_error(exflow_last_error()), status(s) {}
};

void check(exflow_status s) {
  if (s != EXFLOW_OK) throw StatusError(s);
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) {
    if (path == "-") {
      file_ = stdout;
    } else {
      file_ = std::fopen(path.c_str(), "w");
      if (!file_) throw UsageError("cannot open output file " + path);
      owned_ = true;
    }
  }
  ~CsvWriter() {
    if (owned_) std::fclose(file_);
  }
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void header(const std::vector<std::string>& names) {
    for (size_t i = 0; i < names.size(); ++i) {
      std::fputs(names[i].c_str(), file_);
      std::fputc(i + 1 == names.size() ? '\n' : ',', file_);
    }
  }

  void row(const std::vector<double>& values) {
    char buf[40];
    for (size_t i = 0; i < values.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", values[i] == 0.0 ? 0.0 : values[i]);
      std::fputs(buf, file_);
      std::fputc(i + 1 == values.size() ? '\n' : ',', file_);
    }
  }

 private:
  std::FILE* file_ = nullptr;
  bool owned_ = false;
};

struct Network {
  exflow_network* handle = nullptr;
  double period = 0.0;
  int n = 0;

  Network(int n_qubits, double coupling) : n(n_qubits) {
    check(exflow_network_create(n_qubits, coupling, &handle));
    check(exflow_network_period(handle, &period));
  }
  ~Network() { exflow_network_destroy(handle); }
  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;
};

std::vector<int> parse_k(const std::string& text, int n) {
  static const std::regex single(R"(\s*(\d+)\s*)");
  static const std::regex range(R"(\s*(\d+)\s*\.\.\s*(\d+)\s*)");
  std::smatch m;
  int lo = 0;
  int hi = 0;
  if (std::regex_match(text, m, range)) {
    lo = std::stoi(m[1]);
    hi = std::stoi(m[2]);
  } else if (std::regex_match(text, m, single)) {
    lo = hi = std::stoi(m[1]);
  } else {
    throw UsageError("--k must be an integer or a range a..b");
  }
  if (lo < 1 || hi < lo || hi > n) {
    throw UsageError("--k must satisfy 1 <= a <= b <= N");
  }
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

std::vector<exflow_class> parse_classes(const std::string& text) {
  if (text.empty()) return {EXFLOW_CLASS1, EXFLOW_CLASS0};
  if (text == "1") return {EXFLOW_CLASS1};
  if (text == "0") return {EXFLOW_CLASS0};
  throw UsageError("--class must be 0 or 1");
}

int class_digit(exflow_class c) { return c == EXFLOW_CLASS1 ? 1 : 0; }

// Class0 subsystems exclude the excited qubit, so K <= N - 1.
bool admissible(exflow_class c, int k, int n) {
  return c == EXFLOW_CLASS1 || k < n;
}

std::vector<double> time_grid(const Config& cfg) {
  if (cfg.steps < 2) throw UsageError("--steps must be >= 2");
  if (!(cfg.periods > 0.0)) throw UsageError("--periods must be positive");
  std::vector<double> grid(cfg.steps);
  for (int i = 0; i < cfg.steps; ++i) {
    grid[i] = cfg.periods * i / (cfg.steps - 1);
  }
  return grid;
}

// Grid offsets after --t1: up to --t2 when given, else --periods.
std::vector<double> offset_grid(const Config& cfg) {
  Config span = cfg;
  if (cfg.t2) {
    if (!(*cfg.t2 > cfg.t1)) throw UsageError("--t2 must exceed --t1");
    span.periods = *cfg.t2 - cfg.t1;
  }
  return time_grid(span);
}

double require_dt(const Config& cfg) {
  if (!cfg.dt || !(*cfg.dt > 0.0)) {
    throw UsageError("this subcommand needs --dt > 0 (period units)");
  }
  return *cfg.dt;
}

void cmd_amplitudes(const Config& cfg, const Network& net, CsvWriter& csv) {
  csv.header({"t_over_period", "re_u_s", "im_u_s", "re_u_d", "im_u_d",
              "abs2_u_s", "abs2_u_d", "unitarity_residual"});
  for (double tau : time_grid(cfg)) {
    const double t = tau * net.period;
    exflow_complex us;
    exflow_complex ud;
    double resid = 0.0;
    check(exflow_amplitudes(net.handle, t, &us, &ud));
    check(exflow_unitarity_residual(net.handle, t, &resid));
    csv.row({tau, us.re, us.im, ud.re, ud.im, us.re * us.re + us.im * us.im,
             ud.re * ud.re + ud.im * ud.im, resid});
  }
}

void cmd_flow(const Config& cfg, const Network& net, CsvWriter& csv) {
  const double dt = require_dt(cfg);
  const auto ks = parse_k(cfg.k, net.n);
  const auto classes = parse_classes(cfg.cls);
  std::vector<std::string> names{"t_over_period"};
  for (auto c : classes)
    for (int k : ks)
      if (admissible(c, k, net.n))
        names.push_back("phi_tau_c" + std::to_string(class_digit(c)) + "_k" +
                        std::to_string(k));
  csv.header(names);
  for (double tau : time_grid(cfg)) {
    std::vector<double> row{tau};
    for (auto c : classes) {
      for (int k : ks) {
        if (!admissible(c, k, net.n)) continue;
        double v = 0.0;
        check(exflow_flow_amplitude(net.handle, k, c, tau * net.period,
                                    (tau + dt) * net.period, &v));
        row.push_back(v);
      }
    }
    csv.row(row);
  }
}

// Seven axial starting points spanning [-1, 1].
const std::vector<std::pair<double, std::string>>& bloch_starts() {
  static const std::vector<std::pair<double, std::string>> starts{
      {-1.0, "m1"},      {-2.0 / 3.0, "m2o3"}, {-1.0 / 3.0, "m1o3"},
      {0.0, "0"},        {1.0 / 3.0, "1o3"},   {2.0 / 3.0, "2o3"},
      {1.0, "1"}};
  return starts;
}

double physical_bz(const Network& net, exflow_class c, double t) {
  double p = 0.0;
  check(exflow_excitation_probability(net.handle, 1, c, t, &p));
  // Class1: p is the excited population. Class0: p is the ground population.
  return c == EXFLOW_CLASS1 ? 1.0 - 2.0 * p : 2.0 * p - 1.0;
}

void cmd_bloch_traj(const Config& cfg, const Network& net, CsvWriter& csv) {
  const auto classes = parse_classes(cfg.cls);
  std::vector<std::string> names{"t_over_period"};
  for (auto c : classes) {
    const std::string prefix = "c" + std::to_string(class_digit(c)) + "_";
    for (const auto& s : bloch_starts()) names.push_back(prefix + "bz_from_" + s.second);
    names.push_back(prefix + "bz_physical");
    names.push_back(prefix + "phi_tau");
  }
  csv.header(names);
  const double t1 = cfg.t1 * net.period;
  for (double tau : offset_grid(cfg)) {
    const double t = t1 + tau * net.period;
    std::vector<double> row{cfg.t1 + tau};
    for (auto c : classes) {
      exflow_bloch_map map;
      check(exflow_bloch_affine_map(net.handle, c, t1, t, &map));
      for (const auto& s : bloch_starts()) {
        const double in[3] = {0.0, 0.0, s.first};
        double out[3];
        check(exflow_bloch_evolve(&map, in, out));
        row.push_back(out[2]);
      }
      row.push_back(physical_bz(net, c, t));
      double flow = 0.0;
      check(exflow_flow_amplitude(net.handle, 1, c, t1, t, &flow));
      row.push_back(flow);
    }
    csv.row(row);
  }
}

void cmd_bloch_domain(const Config& cfg, const Network& net, CsvWriter& csv) {
  const double dt = require_dt(cfg);
  const auto classes = parse_classes(cfg.cls);
  std::vector<std::string> names{"t_over_period"};
  for (auto c : classes) {
    const std::string prefix = "c" + std::to_string(class_digit(c)) + "_";
    names.push_back(prefix + "band_lo");
    names.push_back(prefix + "band_hi");
    names.push_back(prefix + "phi_tau");
    names.push_back(prefix + "bz_physical");
  }
  csv.header(names);
  for (double tau : time_grid(cfg)) {
    const double t = tau * net.period;
    std::vector<double> row{tau};
    for (auto c : classes) {
      exflow_bloch_map map;
      check(exflow_bloch_affine_map(net.handle, c, t, t + dt * net.period, &map));
      double lo = kNaN;
      double hi = kNaN;
      int nonempty = 0;
      check(exflow_bloch_axial_band(&map, &lo, &hi, &nonempty));
      double flow = 0.0;
      check(exflow_flow_amplitude(net.handle, 1, c, t, t + dt * net.period,
                                  &flow));
      row.push_back(nonempty ? lo : kNaN);
      row.push_back(nonempty ? hi : kNaN);
      row.push_back(flow);
      row.push_back(physical_bz(net, c, t));
    }
    csv.row(row);
  }
}

void cmd_entropy(const Config& cfg, const Network& net, CsvWriter& csv) {
  const auto ks = parse_k(cfg.k, net.n);
  const auto classes = parse_classes(cfg.cls);
  std::vector<std::string> names{"t_over_period"};
  for (auto c : classes)
    for (int k : ks)
      if (admissible(c, k, net.n))
        names.push_back("S_c" + std::to_string(class_digit(c)) + "_k" +
                        std::to_string(k));
  csv.header(names);
  for (double tau : time_grid(cfg)) {
    std::vector<double> row{tau};
    for (auto c : classes) {
      for (int k : ks) {
        if (!admissible(c, k, net.n)) continue;
        double s = 0.0;
        check(exflow_entanglement_entropy(net.handle, k, c, tau * net.period, &s));
        row.push_back(s);
      }
    }
    csv.row(row);
  }
}

void cmd_fisher(const Config& cfg, const Network& net, CsvWriter& csv) {
  const auto ks = parse_k(cfg.k, net.n);
  const auto classes = parse_classes(cfg.cls);
  struct Column {
    exflow_class cls;
    int k;
    exflow_theta theta;
  };
  std::vector<Column> cols;
  std::vector<std::string> names{"t_over_period"};
  for (auto theta : {EXFLOW_THETA_COUPLING, EXFLOW_THETA_SIZE}) {
    for (auto c : classes) {
      for (int k : ks) {
        if (!admissible(c, k, net.n)) continue;
        // F_N of the whole network diverges.
        if (theta == EXFLOW_THETA_SIZE && c == EXFLOW_CLASS1 && k == net.n) continue;
        cols.push_back({c, k, theta});
        const std::string stem = std::string("F_") +
                                 (theta == EXFLOW_THETA_COUPLING ? "J" : "N") +
                                 "_c" + std::to_string(class_digit(c)) + "_k" +
                                 std::to_string(k);
        names.push_back(stem + "_classical");
        names.push_back(stem + "_quantum");
        names.push_back(stem + "_total");
      }
    }
  }
  csv.header(names);
  for (double tau : time_grid(cfg)) {
    std::vector<double> row{tau};
    for (const auto& col : cols) {
      exflow_fisher f;
      check(exflow_qfi_closed_form(net.handle, col.k, col.cls, col.theta,
                                   tau * net.period, &f));
      row.push_back(f.classical);
      row.push_back(f.quantum);
      row.push_back(f.total);
    }
    csv.row(row);
  }
}

exflow_theta parse_theta(const std::string& s) {
  if (s == "J") return EXFLOW_THETA_COUPLING;
  if (s == "N") return EXFLOW_THETA_SIZE;
  throw UsageError("--theta must be J or N");
}

void cmd_fisher_decomp(const Config& cfg, const Network& net, CsvWriter& csv) {
  const auto classes = parse_classes(cfg.cls.empty() ? "1" : cfg.cls);
  const exflow_theta theta = parse_theta(cfg.theta);
  std::vector<std::string> names{"t_over_period", "window_over_period"};
  for (auto c : classes) {
    const std::string prefix = "c" + std::to_string(class_digit(c)) + "_";
    for (const char* term : {"process", "state", "cross", "total"})
      names.push_back(prefix + term);
  }
  csv.header(names);
  const double t1 = cfg.t1 * net.period;
  for (double window : offset_grid(cfg)) {
    const double t2 = t1 + window * net.period;
    std::vector<double> row{cfg.t1 + window, window};
    for (auto c : classes) {
      exflow_fisher_split s;
      check(exflow_process_state_split(net.handle, c, t1, t2, theta,
                                       cfg.raw ? 0 : 1, &s));
      row.insert(row.end(), {s.process, s.state, s.cross, s.total});
    }
    csv.row(row);
  }
}

double network_flow(double t1, double t2, void* user) {
  const auto* net = static_cast<const Network*>(user);
  double v = 0.0;
  check(exflow_flow_amplitude(net->handle, 1, EXFLOW_CLASS1, t1, t2, &v));
  return v;
}

void cmd_infer(const Config& cfg, const Network& net, CsvWriter& csv) {
  const double dt = require_dt(cfg);
  double period_est = kNaN;
  check(exflow_estimate_period(network_flow, const_cast<Network*>(&net),
                               dt * net.period, 2.0 * net.period, 1000,
                               &period_est));
  csv.header({"t_over_period", "flow_c1", "flow_c0", "ground_prob_t1",
              "n_estimate", "n_rounded", "two_qubit_consistent",
              "period_estimate", "j_estimate"});
  for (double tau : time_grid(cfg)) {
    const double t = tau * net.period;
    exflow_observation obs;
    check(exflow_simulate_observation(net.handle, t, t + dt * net.period, &obs));
    int consistent = 0;
    check(exflow_two_qubit_consistency(&obs, 1e-12, &consistent));
    exflow_size_estimate est{kNaN, 0, kNaN};
    double j_est = kNaN;
    double rounded = kNaN;
    // Windows with vanishing flow leave N undetermined.
    if (exflow_infer_network_size(&obs, &est) == EXFLOW_OK) {
      rounded = est.rounded;
      check(exflow_infer_coupling(period_est, est.estimate, &j_est));
    } else {
      est.estimate = kNaN;
    }
    csv.row({tau, obs.flow_class1, obs.flow_class0, obs.ground_prob_t1,
             est.estimate, rounded, static_cast<double>(consistent),
             period_est / net.period, j_est});
  }
}

void report_check(const char* name, double residual, double tol, int passed,
                  void* user) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s,%.17g,%.17g,%d\n", name, residual, tol,
                passed);
  std::fputs(buf, static_cast<std::FILE*>(user));
}

int cmd_verify(const Config& cfg, const Network& net) {
  std::FILE* out = stdout;
  if (cfg.out != "-") {
    out = std::fopen(cfg.out.c_str(), "w");
    if (!out) throw UsageError("cannot open output file " + cfg.out);
  }
  std::fputs("check,max_residual,tolerance,passed\n", out);
  int all = 0;
  const exflow_status s = exflow_verify(net.handle, report_check, out, &all);
  if (out != stdout) std::fclose(out);
  check(s);
  return all ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open-subsystem propagators of an all-to-all qubit network"};
  app.require_subcommand(1);
  Config cfg;

  app.add_option("--n", cfg.n, "Number of qubits N >= 2")->required();
  app.add_option("--j", cfg.j, "Coupling J > 0")->capture_default_str();
  app.add_option("--k", cfg.k, "Subsystem size K or range a..b")
      ->capture_default_str();
  app.add_option("--class", cfg.cls, "Dynamical class 0 or 1 (default both)");
  app.add_option("--t1", cfg.t1, "Start time in periods")->capture_default_str();
  app.add_option("--t2", cfg.t2, "End time in periods");
  app.add_option("--dt", cfg.dt, "Window length in periods");
  app.add_option("--steps", cfg.steps, "Grid points")->capture_default_str();
  app.add_option("--periods", cfg.periods, "Grid span in periods")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Output path or - for stdout")
      ->capture_default_str();
  app.add_option("--theta", cfg.theta, "Fisher parameter J or N")
      ->capture_default_str();
  app.add_flag("--raw", cfg.raw, "Unrescaled Fisher decomposition");

  struct Entry {
    const char* name;
    const char* help;
    void (*run)(const Config&, const Network&, CsvWriter&);
  };
  const std::vector<Entry> datasets{
      {"amplitudes", "Global amplitudes u_s, u_d", cmd_amplitudes},
      {"flow", "Flow amplitude over windows [t, t+dt]", cmd_flow},
      {"bloch-traj", "Axial Bloch trajectories under the K=1 map", cmd_bloch_traj},
      {"bloch-domain", "Axial domain of positivity over [t, t+dt]", cmd_bloch_domain},
      {"entropy", "Entanglement entropy", cmd_entropy},
      {"fisher", "Fisher information, classical and quantum parts", cmd_fisher},
      {"fisher-decomp", "Process, state and cross Fisher terms", cmd_fisher_decomp},
      {"infer", "Network size and coupling from flows", cmd_infer},
  };
  for (const auto& e : datasets) app.add_subcommand(e.name, e.help)->fallthrough();
  CLI::App* verify = app.add_subcommand("verify", "Run oracle verification");
  verify->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Network net(cfg.n, cfg.j);
    if (verify->parsed()) return cmd_verify(cfg, net);
    for (const auto& e : datasets) {
      if (app.got_subcommand(e.name)) {
        CsvWriter csv(cfg.out);
        e.run(cfg, net, csv);
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const StatusError& e) {
    if (e.status == EXFLOW_ERR_SINGULAR) {
      const double t1 = exflow_last_singular_t1();
      const double p = 2.0 * 3.14159265358979323846 / (cfg.n * cfg.j);
      std::fprintf(stderr,
                   "error: propagator undefined from singular start time "
                   "t1 = %.17g (t1/period = %.12g): %s\n",
                   t1, t1 / p, e.what());
      return kExitSingular;
    }
    std::fprintf(stderr, "error: %s: %s\n", exflow_status_string(e.status),
                 e.what());
    return kExitUsage;
  }
}
