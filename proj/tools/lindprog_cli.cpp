// Copyright 2026 The lindprog developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of this license at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lindprog/conic.hpp"
#include "lindprog/json_io.hpp"
#include "lindprog/programmability.hpp"
#include "lindprog/protocols.hpp"
#include "lindprog/rng.hpp"

using namespace lindprog;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;  // verdicts and infeasibility

struct GlobalOpts {
  bool quiet = false;
  bool no_timestamp = false;
  int threads = 1;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void log(const GlobalOpts &g, const std::string &msg) {
  if (!g.quiet) std::fprintf(stderr, "%s\n", msg.c_str());
}

class CsvWriter {
 public:
  CsvWriter(const std::string &path, const GlobalOpts &g) : out_(path) {
    if (!out_) throw std::invalid_argument("cannot open output file: " + path);
    if (!g.no_timestamp) {
      auto now = std::chrono::system_clock::now();
      std::time_t tt = std::chrono::system_clock::to_time_t(now);
      char buf[64];
      std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&tt));
      out_ << "# generated " << buf << "\n";
    }
  }
  void header(const std::vector<std::string> &cols) {
    for (size_t i = 0; i < cols.size(); ++i)
      out_ << (i ? "," : "") << cols[i];
    out_ << "\n";
  }
  void row(const std::vector<std::string> &vals) {
    for (size_t i = 0; i < vals.size(); ++i)
      out_ << (i ? "," : "") << vals[i];
    out_ << "\n";
  }

 private:
  std::ofstream out_;
};

// Ordered parallel map over grid indices.
template <typename F>
void parallel_for(int n, int threads, F &&fn) {
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += threads) fn(i);
    });
  for (auto &th : pool) th.join();
}

int cmd_simulate(const GlobalOpts &g, const std::string &input,
                 const std::string &output, double tmax, int steps) {
  LindbladianSpec spec = load_lindbladian_file(input);
  const Lindbladian &lin = spec.lindbladian;
  ComplexMatrix rho0 = spec.initial_state.value_or(
      ComplexMatrix(identity(lin.dim) / double(lin.dim)));

  std::vector<std::string> cols = {"t"};
  for (Index i = 0; i < lin.dim; ++i)
    for (Index j = 0; j < lin.dim; ++j) {
      std::string base =
          "rho_" + std::to_string(i) + "_" + std::to_string(j);
      cols.push_back(base + "_re");
      cols.push_back(base + "_im");
    }

  std::vector<ComplexMatrix> states(steps);
  parallel_for(steps, g.threads, [&](int m) {
    double t = tmax * double(m) / double(steps - 1);
    states[m] = evolve_state(lin, rho0, t);
  });

  CsvWriter csv(output, g);
  csv.header(cols);
  for (int m = 0; m < steps; ++m) {
    double t = tmax * double(m) / double(steps - 1);
    std::vector<std::string> row = {fmt(t)};
    for (Index i = 0; i < lin.dim; ++i)
      for (Index j = 0; j < lin.dim; ++j) {
        row.push_back(fmt(states[m](i, j).real()));
        row.push_back(fmt(states[m](i, j).imag()));
      }
    csv.row(row);
  }
  log(g, "simulate: wrote " + std::to_string(steps) + " rows to " + output);
  return kExitOk;
}

int cmd_check(const GlobalOpts &g, const std::string &input,
              const std::string &output) {
  LindbladianSpec spec = load_lindbladian_file(input);
  const Lindbladian &lin = spec.lindbladian;

  json verdict;
  bool programmable = false;

  Complex mean_diag = lin.hamiltonian.trace() / double(lin.dim);
  ComplexMatrix coherent_part =
      lin.hamiltonian - mean_diag * identity(lin.dim);
  if (coherent_part.cwiseAbs().maxCoeff() > 1e-10) {
    verdict["cptp_programmable"] = false;
    verdict["reason"] = "coherent";
  } else {
    auto form = cptp_form_check(lin);
    if (form.has_value()) {
      programmable = true;
      verdict["cptp_programmable"] = true;
      verdict["alpha"] = form->alpha;
    } else {
      verdict["cptp_programmable"] = false;
      verdict["reason"] = "no_cptp_form";
    }
  }

  // Pauli route (Theorem-style test) and the port-based obstruction.
  bool pauli_ok = false;
  try {
    pauli_qmatrix(lin);
    pauli_ok = true;
  } catch (const std::invalid_argument &) {
  }
  verdict["pauli_programmable"] = pauli_ok;

  PortObstruction port = port_obstruction_check(lin);
  verdict["port_obstructed"] = port.verdict == PortVerdict::obstructed;
  verdict["unique_steady_state"] = port.unique_steady_state;
  if (port.unique_steady_state)
    verdict["steady_state_min_eigenvalue"] = port.min_eigenvalue;

  std::ofstream out(output);
  if (!out) throw std::invalid_argument("cannot open output file: " + output);
  out << verdict.dump(2) << "\n";
  log(g, "check: verdict written to " + output);
  return programmable || pauli_ok ? kExitOk : kExitNegative;
}

int cmd_pauli_program(const GlobalOpts &g, const std::string &input,
                      const std::string &output, double tmax, int steps) {
  LindbladianSpec spec = load_lindbladian_file(input);
  const Lindbladian &lin = spec.lindbladian;
  PauliProgramProtocol proto = pauli_program_protocol(lin);
  int n = 0;
  while ((Index(1) << n) < lin.dim) ++n;

  std::vector<std::string> cols = {"t"};
  for (Index l = 0; l < proto.q.size(); ++l)
    cols.push_back("p_" + pauli_label_name(n, l));
  cols.push_back("residual");

  CsvWriter csv(output, g);
  csv.header(cols);
  for (int m = 0; m < steps; ++m) {
    double t = tmax * double(m) / double(steps - 1);
    RealVector p = proto.weights(t);
    // Choi-space residual of the reconstructed channel.
    ComplexMatrix mix = czeros(lin.dim * lin.dim, lin.dim * lin.dim);
    for (Index l = 0; l < p.size(); ++l)
      mix += p(l) * proto.channels[l].matrix;
    double residual = frobenius_norm(
        ComplexMatrix(mix - semigroup_choi(lin, t).matrix));
    std::vector<std::string> row = {fmt(t)};
    for (Index l = 0; l < p.size(); ++l) row.push_back(fmt(p(l)));
    row.push_back(fmt(residual));
    csv.row(row);
  }
  log(g, "pauli-program: wrote " + std::to_string(steps) + " rows");
  return kExitOk;
}

int cmd_protocol(const GlobalOpts &g, const std::string &name,
                 const std::string &output, double lambda, double gamma,
                 double tmax, int steps, int64_t samples, uint64_t seed) {
  QuasiProtocol proto;
  ComplexMatrix rho0, obs;
  if (name == "swap-dephasing") {
    proto = swap_dephasing_protocol(lambda);
    rho0 = czeros(4, 4);
    rho0(1, 1) = 1.0;  // |01><01|
    obs = rho0;
  } else if (name == "amplitude-damping") {
    proto = semigroup_family(ad_quasi_protocol(0.5),
                             emission_lindbladian(gamma));
    rho0 = matrix_unit(2, 1, 1);
    obs = pauli_z();
  } else {
    throw std::invalid_argument("unknown protocol: " + name);
  }

  std::vector<McResult> results(steps);
  std::vector<double> exact(steps);
  parallel_for(steps, g.threads, [&](int m) {
    double t = tmax * double(m) / double(steps - 1);
    exact[m] =
        (obs * apply_choi(proto.target(t), rho0)).trace().real();
    results[m] = mc_estimate(proto, rho0, obs, t, samples,
                             CounterRng::mix(seed + m));
  });

  CsvWriter csv(output, g);
  csv.header({"t", "exact", "estimate", "stderr", "n_samples", "seed"});
  for (int m = 0; m < steps; ++m) {
    double t = tmax * double(m) / double(steps - 1);
    csv.row({fmt(t), fmt(exact[m]), fmt(results[m].estimate),
             fmt(results[m].stderr_est), std::to_string(samples),
             std::to_string(seed)});
  }
  log(g, "protocol: wrote " + std::to_string(steps) + " rows");
  return kExitOk;
}

int cmd_cost(const GlobalOpts &g, const std::string &input,
             const std::string &output, double tmax, int time_samples,
             const std::vector<double> &epsilons, double solver_tol,
             int max_iter) {
  LindbladianSpec spec = load_lindbladian_file(input);
  CostOptions opts;
  opts.n_time_samples = time_samples;
  opts.solver.tol = solver_tol;
  opts.solver.max_iter = max_iter;

  std::vector<CostResult> results;
  if (g.threads > 1) {
    results.resize(epsilons.size());
    parallel_for(static_cast<int>(epsilons.size()), g.threads, [&](int i) {
      results[i] = programming_cost(spec.lindbladian,
                                    choi_program_family(spec.lindbladian),
                                    tmax, epsilons[i], opts);
    });
  } else {
    results = cost_sweep(spec.lindbladian,
                         choi_program_family(spec.lindbladian), tmax,
                         epsilons, opts);
  }

  CsvWriter csv(output, g);
  csv.header({"epsilon", "gamma", "status", "iterations", "primal_residual",
              "dual_residual"});
  bool any_infeasible = false, any_failure = false;
  for (size_t i = 0; i < epsilons.size(); ++i) {
    const CostResult &r = results[i];
    std::string status = r.status == CostResult::Status::optimal
                             ? "optimal"
                             : r.status == CostResult::Status::infeasible
                                   ? "infeasible"
                                   : "solver_failure";
    any_infeasible |= r.status == CostResult::Status::infeasible;
    any_failure |= r.status == CostResult::Status::solver_failure;
    csv.row({fmt(epsilons[i]), fmt(r.gamma), status,
             std::to_string(r.iterations), fmt(r.primal_residual),
             fmt(r.dual_residual)});
  }
  log(g, "cost: wrote " + std::to_string(epsilons.size()) + " rows");
  if (any_failure) return kExitError;
  return any_infeasible ? kExitNegative : kExitOk;
}

int cmd_diamond(const GlobalOpts &g, const std::string &input,
                const std::string &output) {
  std::ifstream in(input);
  if (!in) throw std::invalid_argument("cannot open input file: " + input);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(std::string("parse error: ") + e.what());
  }
  if (!j.contains("dim_in") || !j.contains("dim_out") || !j.contains("matrix"))
    throw std::invalid_argument(
        "expected fields dim_in, dim_out, matrix in the Choi file");
  Index din = j["dim_in"].get<Index>(), dout = j["dim_out"].get<Index>();
  ChoiOperator choi{din, dout,
                    matrix_from_json(j["matrix"], din * dout, din * dout,
                                     "matrix")};
  double value = diamond_norm(choi);
  json out_json = {{"diamond_norm", value}};
  std::ofstream out(output);
  if (!out) throw std::invalid_argument("cannot open output file: " + output);
  out << out_json.dump(2) << "\n";
  log(g, "diamond: " + fmt(value));
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Lindbladian programmability toolkit"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--quiet", g.quiet, "suppress progress output");
  app.add_flag("--no-timestamp", g.no_timestamp,
               "omit the timestamp header line in CSV outputs");
  app.add_option("--threads", g.threads, "worker threads for grid sweeps")
      ->check(CLI::PositiveNumber);

  std::string input, output, name = "swap-dephasing";
  double tmax = 10.0, lambda = 0.5, gamma = 1.0, solver_tol = 1e-7;
  int steps = 21, time_samples = 20, max_iter = 200000;
  int64_t samples = 100000;
  uint64_t seed = 1;
  std::vector<double> epsilons = {0.0};

  auto *sim = app.add_subcommand("simulate", "integrate the master equation");
  sim->add_option("--input", input)->required();
  sim->add_option("--output", output)->required();
  sim->add_option("--tmax", tmax)->check(CLI::PositiveNumber);
  sim->add_option("--steps", steps)->check(CLI::Range(2, 1000000));

  auto *chk = app.add_subcommand("check", "programmability verdicts");
  chk->add_option("--input", input)->required();
  chk->add_option("--output", output)->required();

  auto *pp = app.add_subcommand("pauli-program",
                                "Pauli mixture weights over a time grid");
  pp->add_option("--input", input)->required();
  pp->add_option("--output", output)->required();
  pp->add_option("--tmax", tmax)->check(CLI::PositiveNumber);
  pp->add_option("--steps", steps)->check(CLI::Range(2, 1000000));

  auto *pr = app.add_subcommand("protocol",
                                "quasi-probability sampling trajectories");
  pr->add_option("--name", name)
      ->check(CLI::IsMember({"swap-dephasing", "amplitude-damping"}));
  pr->add_option("--output", output)->required();
  pr->add_option("--lambda", lambda)->check(CLI::NonNegativeNumber);
  pr->add_option("--gamma", gamma)->check(CLI::PositiveNumber);
  pr->add_option("--tmax", tmax)->check(CLI::PositiveNumber);
  pr->add_option("--steps", steps)->check(CLI::Range(2, 100000));
  pr->add_option("--samples", samples)->check(CLI::PositiveNumber);
  pr->add_option("--seed", seed);

  auto *cost = app.add_subcommand("cost", "port-based programming cost");
  cost->add_option("--input", input)->required();
  cost->add_option("--output", output)->required();
  cost->add_option("--tmax", tmax)->check(CLI::PositiveNumber);
  cost->add_option("--time-samples", time_samples)->check(CLI::Range(2, 200));
  cost->add_option("--epsilons", epsilons)->delimiter(',');
  cost->add_option("--solver-tol", solver_tol)->check(CLI::PositiveNumber);
  cost->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);

  auto *dia = app.add_subcommand("diamond", "diamond norm of a Choi matrix");
  dia->add_option("--input", input)->required();
  dia->add_option("--output", output)->required();

  for (auto *sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(g, input, output, tmax, steps);
    if (chk->parsed()) return cmd_check(g, input, output);
    if (pp->parsed()) return cmd_pauli_program(g, input, output, tmax, steps);
    if (pr->parsed())
      return cmd_protocol(g, name, output, lambda, gamma, tmax, steps,
                          samples, seed);
    if (cost->parsed())
      return cmd_cost(g, input, output, tmax, time_samples, epsilons,
                      solver_tol, max_iter);
    if (dia->parsed()) return cmd_diamond(g, input, output);
  } catch (const std::invalid_argument &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
  return kExitError;
}
