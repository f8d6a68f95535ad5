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

#include "lindprog/protocols.hpp"

#include <cmath>
#include <thread>

#include "lindprog/rng.hpp"

namespace lindprog {

namespace {

// Program-factor block <k| M |l> of a joint operator on S (x) P.
ComplexMatrix p_block(const ComplexMatrix &m, Index ds, Index dp, Index k,
                      Index l) {
  ComplexMatrix out(ds, ds);
  for (Index i = 0; i < ds; ++i)
    for (Index j = 0; j < ds; ++j) out(i, j) = m(i * dp + k, j * dp + l);
  return out;
}

// Data-factor block <a| M |b> of a joint operator on S (x) P.
ComplexMatrix s_block(const ComplexMatrix &m, Index ds, Index dp, Index a,
                      Index b) {
  ComplexMatrix out(dp, dp);
  for (Index k = 0; k < dp; ++k)
    for (Index l = 0; l < dp; ++l) out(k, l) = m(a * dp + k, b * dp + l);
  return out;
}

ComplexMatrix trace_out_program(const ComplexMatrix &m, Index ds, Index dp) {
  ComplexMatrix out = czeros(ds, ds);
  for (Index k = 0; k < dp; ++k) out += p_block(m, ds, dp, k, k);
  return out;
}

ComplexMatrix diag_part(const ComplexMatrix &m) {
  ComplexMatrix out = czeros(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) out(i, i) = m(i, i);
  return out;
}

ComplexMatrix bloch_state(double x, double y, double z) {
  ComplexMatrix s = czeros(2, 2);
  s(0, 0) = 0.5 * (1.0 + z);
  s(1, 1) = 0.5 * (1.0 - z);
  s(0, 1) = 0.5 * Complex(x, -y);
  s(1, 0) = 0.5 * Complex(x, y);
  return s;
}

}  // namespace

//============================================================================
// QuasiProtocol
//============================================================================

double QuasiProtocol::kappa() const {
  double k = 0;
  for (const auto &b : branches) k += std::abs(b.coefficient);
  return k;
}

ChoiOperator QuasiProtocol::realized_choi(double t) const {
  ComplexMatrix acc = czeros(dim_s * dim_out, dim_s * dim_out);
  for (const auto &b : branches)
    acc += b.coefficient *
           b.processor.program_applied_choi(b.program(t)).matrix;
  return ChoiOperator{dim_s, dim_out, std::move(acc)};
}

ComplexMatrix QuasiProtocol::apply(const ComplexMatrix &rho, double t) const {
  ComplexMatrix acc = czeros(dim_out, dim_out);
  for (const auto &b : branches)
    acc += b.coefficient * b.processor.apply(rho, b.program(t));
  return acc;
}

QuasiProtocol identity_protocol(Index dim) {
  QuasiProtocol proto;
  proto.dim_s = dim;
  proto.dim_out = dim;
  proto.label = "identity";
  QuasiProtocol::Branch br;
  br.coefficient = 1.0;
  br.processor = processor_from_map(
      dim, 1, dim, [](const ComplexMatrix &joint) { return joint; });
  br.program = constant_program(identity(1), "trivial");
  proto.branches.push_back(std::move(br));
  proto.target = [dim](double) { return choi_of_identity(dim); };
  return proto;
}

//============================================================================
// Coherent generators
//============================================================================

CoherentProtocol coherent_protocol(const ComplexMatrix &hamiltonian,
                                   double degeneracy_tol) {
  if (!is_hermitian(hamiltonian, 1e-10))
    throw std::invalid_argument("coherent_protocol: H must be Hermitian");
  const Index d = hamiltonian.rows();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hamiltonian);
  RealVector lam = es.eigenvalues();  // ascending

  CoherentProtocol proto;
  Index start = 0;
  for (Index i = 1; i <= d; ++i) {
    if (i == d || lam(i) - lam(i - 1) > degeneracy_tol) {
      ComplexMatrix pi = czeros(d, d);
      double mean = 0;
      for (Index j = start; j < i; ++j) {
        pi += ComplexMatrix(es.eigenvectors().col(j) *
                            es.eigenvectors().col(j).adjoint());
        mean += lam(j);
      }
      proto.projectors.push_back(std::move(pi));
      proto.cluster_values.push_back(mean / double(i - start));
      start = i;
    }
  }
  const Index k = static_cast<Index>(proto.projectors.size());
  proto.levels = k;

  // P(M) = sum_k Pi_k tr_P(M) Pi_k + K sum_{k != l} Pi_k M_kl Pi_l.
  auto projectors = proto.projectors;
  proto.processor = processor_from_map(
      d, k, d, [projectors, d, k](const ComplexMatrix &joint) {
        ComplexMatrix out = czeros(d, d);
        ComplexMatrix tr_p = trace_out_program(joint, d, k);
        for (Index a = 0; a < k; ++a)
          out += projectors[a] * tr_p * projectors[a];
        for (Index a = 0; a < k; ++a)
          for (Index b = 0; b < k; ++b) {
            if (a == b) continue;
            out += double(k) * projectors[a] *
                   p_block(joint, d, k, a, b) * projectors[b];
          }
        return out;
      });

  auto values = proto.cluster_values;
  proto.program.dim_p = k;
  proto.program.label = "phase-superposition";
  proto.program.evaluator = [values, k](double t) {
    ComplexVector v(k);
    for (Index j = 0; j < k; ++j)
      v(j) = std::exp(Complex(0, values[j] * t)) / std::sqrt(double(k));
    return ComplexMatrix(v * v.adjoint());
  };
  return proto;
}

CoherentQuasiBranches coherent_quasi_branches_k2(const ComplexMatrix &proj0,
                                                 const ComplexMatrix &proj1) {
  const Index d = proj0.rows();
  ComplexMatrix zt = proj0 - proj1;           // unitary, Hermitian
  ComplexMatrix w = proj0 + Complex(0, 1) * proj1;  // unitary phase

  auto xplus = [d](const ComplexMatrix &m) {
    return ComplexMatrix(0.5 * (p_block(m, d, 2, 0, 0) + p_block(m, d, 2, 1, 1) +
                                p_block(m, d, 2, 0, 1) + p_block(m, d, 2, 1, 0)));
  };
  auto xminus = [d](const ComplexMatrix &m) {
    return ComplexMatrix(0.5 * (p_block(m, d, 2, 0, 0) + p_block(m, d, 2, 1, 1) -
                                p_block(m, d, 2, 0, 1) - p_block(m, d, 2, 1, 0)));
  };
  auto yplus = [d](const ComplexMatrix &m) {
    return ComplexMatrix(
        0.5 * (p_block(m, d, 2, 0, 0) + p_block(m, d, 2, 1, 1) +
               Complex(0, 1) * p_block(m, d, 2, 0, 1) -
               Complex(0, 1) * p_block(m, d, 2, 1, 0)));
  };
  auto yminus = [d](const ComplexMatrix &m) {
    return ComplexMatrix(
        0.5 * (p_block(m, d, 2, 0, 0) + p_block(m, d, 2, 1, 1) -
               Complex(0, 1) * p_block(m, d, 2, 0, 1) +
               Complex(0, 1) * p_block(m, d, 2, 1, 0)));
  };

  CoherentQuasiBranches out;
  out.coefficients = {1.0, 0.5, -0.5};
  out.processors[0] = processor_from_map(
      d, 2, d, [=](const ComplexMatrix &m) {
        return ComplexMatrix(xplus(m) + zt * xminus(m) * zt);
      });
  out.processors[1] = processor_from_map(
      d, 2, d, [=](const ComplexMatrix &m) {
        return ComplexMatrix(w * yplus(m) * dagger(w) +
                             dagger(w) * yminus(m) * w);
      });
  out.processors[2] = processor_from_map(
      d, 2, d, [=](const ComplexMatrix &m) {
        return ComplexMatrix(dagger(w) * yplus(m) * w +
                             w * yminus(m) * dagger(w));
      });
  return out;
}

//============================================================================
// SWAP-dephasing model
//============================================================================

namespace {

ComplexMatrix swap_gate() {
  ComplexMatrix s = czeros(4, 4);
  s(0, 0) = s(3, 3) = 1.0;
  s(1, 2) = s(2, 1) = 1.0;
  return s;
}

std::vector<ComplexMatrix> bell_projectors() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexVector phi_p(4), phi_m(4), psi_p(4), psi_m(4);
  phi_p << r, 0, 0, r;
  phi_m << r, 0, 0, -r;
  psi_p << 0, r, r, 0;
  psi_m << 0, r, -r, 0;
  std::vector<ComplexMatrix> out;
  for (const auto &v : {phi_p, phi_m, psi_p, psi_m})
    out.push_back(ComplexMatrix(v * v.adjoint()));
  return out;
}

ComplexMatrix bell_dephase(const ComplexMatrix &rho) {
  ComplexMatrix out = czeros(4, 4);
  for (const auto &p : bell_projectors()) out += p * rho * p;
  return out;
}

}  // namespace

ChoiOperator swap_dephasing_exact(double lambda, double t) {
  if (lambda < 0 || t < 0)
    throw std::invalid_argument("swap_dephasing_exact: lambda, t >= 0");
  ComplexMatrix s = swap_gate();
  ComplexMatrix psi_m = bell_projectors()[3];
  ComplexMatrix proj_p = identity(4) - psi_m;
  ComplexMatrix ut = std::exp(Complex(0, t)) * proj_p +
                     std::exp(Complex(0, -t)) * psi_m;
  double w = std::exp(-lambda * t);
  ComplexMatrix j = w * unitary_channel_choi(ut).matrix +
                    (1.0 - w) * choi_from_map(4, 4, bell_dephase).matrix;
  return ChoiOperator{4, 4, std::move(j)};
}

QuasiProtocol swap_dephasing_protocol(double lambda) {
  if (lambda < 0)
    throw std::invalid_argument("swap_dephasing_protocol: lambda >= 0");

  ComplexMatrix psi_m = bell_projectors()[3];
  ComplexMatrix proj_p = identity(4) - psi_m;
  CoherentQuasiBranches coh = coherent_quasi_branches_k2(proj_p, psi_m);

  QuasiProtocol proto;
  proto.dim_s = 4;
  proto.dim_out = 4;
  proto.label = "swap-dephasing";

  // Program = theta_t (x) sigma_t on R (x) C; the control qubit C selects
  // the coherent SWAP branch (outcome 0) or Bell dephasing (outcome 1).
  ProgramStateFamily program;
  program.dim_p = 4;
  program.label = "swap-phase+control";
  program.evaluator = [lambda](double t) {
    ComplexVector theta(2), sigma(2);
    theta << std::exp(Complex(0, t)) / std::sqrt(2.0),
        std::exp(Complex(0, -t)) / std::sqrt(2.0);
    double w = std::exp(-lambda * t);
    sigma << std::sqrt(w), std::sqrt(1.0 - w);
    ComplexMatrix th = theta * theta.adjoint();
    ComplexMatrix sg = sigma * sigma.adjoint();
    return kron(th, sg);
  };

  for (int m = 0; m < 3; ++m) {
    // Full branch on S (x) (R (x) C): measure C, feed the coherent branch
    // on outcome 0 and Bell dephasing on outcome 1.
    ProcessorMap coh_branch = coh.processors[m];
    ProcessorMap proc = processor_from_map(
        4, 4, 4, [coh_branch](const ComplexMatrix &joint) {
          // Joint index (s, r, c) with c the least significant factor.
          ComplexMatrix m00(8, 8), m11(8, 8);
          for (Index x = 0; x < 8; ++x)
            for (Index y = 0; y < 8; ++y) {
              m00(x, y) = joint(x * 2, y * 2);
              m11(x, y) = joint(x * 2 + 1, y * 2 + 1);
            }
          ComplexMatrix dephased =
              bell_dephase(trace_out_program(m11, 4, 2));
          return ComplexMatrix(coh_branch.apply_joint(m00) + dephased);
        });
    QuasiProtocol::Branch br;
    br.coefficient = coh.coefficients[m];
    br.processor = std::move(proc);
    br.program = program;
    proto.branches.push_back(std::move(br));
  }

  proto.target = [lambda](double t) { return swap_dephasing_exact(lambda, t); };
  return proto;
}

//============================================================================
// Amplitude damping
//============================================================================

std::array<ComplexMatrix, 6> ad_program_states(double gamma) {
  if (gamma < 0 || gamma > 1)
    throw std::invalid_argument("ad_program_states: gamma in [0,1]");
  const double s2 = std::sqrt(gamma);        // sin(theta/2)
  const double c2 = std::sqrt(1.0 - gamma);  // cos(theta/2)
  return {
      bloch_state(0, 0, 1),                      // |0>
      bloch_state(2 * s2 * c2, 0, s2 * s2 - c2 * c2),  // sin|0> + cos|1>
      bloch_state(c2, 0, s2),                    // normalized Pi_+ branch
      bloch_state(-c2, 0, -s2),                  // normalized Pi_- branch
      bloch_state(c2 * s2, c2, s2 * s2),         // phase-gate branch
      bloch_state(c2 * s2, -c2, s2 * s2),        // conjugate phase branch
  };
}

namespace {

std::vector<ProcessorMap> ad_branch_processors() {
  const Index ds = 2, dp = 2;
  ComplexMatrix z = pauli_z();

  auto xbasis = [=](const ComplexMatrix &m, int sign) {
    return ComplexMatrix(
        0.5 * (p_block(m, ds, dp, 0, 0) + p_block(m, ds, dp, 1, 1) +
               double(sign) * (p_block(m, ds, dp, 0, 1) +
                               p_block(m, ds, dp, 1, 0))));
  };
  auto ybasis = [=](const ComplexMatrix &m, int sign) {
    return ComplexMatrix(
        0.5 * (p_block(m, ds, dp, 0, 0) + p_block(m, ds, dp, 1, 1) +
               Complex(0, sign) * p_block(m, ds, dp, 0, 1) -
               Complex(0, sign) * p_block(m, ds, dp, 1, 0)));
  };

  std::vector<ProcessorMap> procs;
  // 1: dephase the data, discard the program.
  procs.push_back(processor_from_map(ds, dp, 2, [=](const ComplexMatrix &m) {
    return diag_part(trace_out_program(m, ds, dp));
  }));
  // 2: measure the data in Z; outcome 1 keeps the dephased program,
  // outcome 0 prepares |0><0|.
  procs.push_back(processor_from_map(ds, dp, 2, [=](const ComplexMatrix &m) {
    ComplexMatrix out = diag_part(s_block(m, ds, dp, 1, 1));
    out(0, 0) += s_block(m, ds, dp, 0, 0).trace();
    return out;
  }));
  // 3-6: measure the program in X or Y and conditionally flip the data
  // phase.
  procs.push_back(processor_from_map(ds, dp, 2, [=](const ComplexMatrix &m) {
    return ComplexMatrix(xbasis(m, +1) + z * xbasis(m, -1) * z);
  }));
  procs.push_back(processor_from_map(ds, dp, 2, [=](const ComplexMatrix &m) {
    return ComplexMatrix(z * xbasis(m, +1) * z + xbasis(m, -1));
  }));
  procs.push_back(processor_from_map(ds, dp, 2, [=](const ComplexMatrix &m) {
    return ComplexMatrix(z * ybasis(m, +1) * z + ybasis(m, -1));
  }));
  procs.push_back(processor_from_map(ds, dp, 2, [=](const ComplexMatrix &m) {
    return ComplexMatrix(ybasis(m, +1) + z * ybasis(m, -1) * z);
  }));
  return procs;
}

constexpr double kAdCoefficients[6] = {1.0, 1.0, 1.0, -1.0, -0.5, -0.5};

}  // namespace

QuasiProtocol ad_quasi_protocol(double gamma) {
  auto states = ad_program_states(gamma);
  auto procs = ad_branch_processors();

  QuasiProtocol proto;
  proto.dim_s = 2;
  proto.dim_out = 2;
  proto.label = "amplitude-damping";
  for (int j = 0; j < 6; ++j) {
    QuasiProtocol::Branch br;
    br.coefficient = kAdCoefficients[j];
    br.processor = procs[j];
    br.program = constant_program(states[j], "sigma" + std::to_string(j + 1));
    proto.branches.push_back(std::move(br));
  }
  proto.target = [gamma](double) { return amplitude_damping_choi(gamma); };
  return proto;
}

QuasiProtocol semigroup_family(const QuasiProtocol &ad_protocol,
                               const Lindbladian &emission_reference) {
  if (ad_protocol.branches.size() != 6 || ad_protocol.dim_s != 2)
    throw std::invalid_argument("semigroup_family: expected the AD protocol");
  const Lindbladian &lin = emission_reference;
  if (lin.dim != 2 || lin.hamiltonian.cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument(
        "semigroup_family: unsupported reference Lindbladian");
  double rate = 0;
  for (const auto &j : lin.jumps) {
    Complex c = j.op(0, 1);
    ComplexMatrix rem = j.op;
    rem(0, 1) = 0;
    if (rem.cwiseAbs().maxCoeff() > 1e-12)
      throw std::invalid_argument(
          "semigroup_family: reference must be a pure emission model");
    rate += j.rate * std::norm(c);
  }
  if (rate <= 0)
    throw std::invalid_argument("semigroup_family: vanishing emission rate");

  QuasiProtocol proto;
  proto.dim_s = 2;
  proto.dim_out = 2;
  proto.label = "emission-semigroup";
  for (int j = 0; j < 6; ++j) {
    QuasiProtocol::Branch br;
    br.coefficient = ad_protocol.branches[j].coefficient;
    br.processor = ad_protocol.branches[j].processor;
    br.program.dim_p = 2;
    br.program.label = "sigma" + std::to_string(j + 1) + "(theta(t))";
    br.program.evaluator = [j, rate](double t) {
      double eta = 1.0 - std::exp(-rate * t);
      return ad_program_states(eta)[j];
    };
    proto.branches.push_back(std::move(br));
  }
  proto.target = [rate](double t) {
    return amplitude_damping_choi(1.0 - std::exp(-rate * t));
  };
  return proto;
}

//============================================================================
// Monte-Carlo estimation
//============================================================================

McResult mc_estimate(const QuasiProtocol &protocol, const ComplexMatrix &rho0,
                     const ComplexMatrix &observable, double t,
                     int64_t n_samples, uint64_t seed, int n_workers) {
  if (n_samples < 1)
    throw std::invalid_argument("mc_estimate: n_samples >= 1");
  if (n_workers < 1) n_workers = 1;
  if (!is_hermitian(observable, 1e-10))
    throw std::invalid_argument("mc_estimate: observable must be Hermitian");

  const double kappa = protocol.kappa();
  const size_t nb = protocol.branches.size();

  // Exact branch values; sampling only selects among them.
  std::vector<double> value(nb), prob(nb), cum(nb);
  double acc = 0;
  for (size_t j = 0; j < nb; ++j) {
    const auto &br = protocol.branches[j];
    ComplexMatrix out = br.processor.apply(rho0, br.program(t));
    double v = (observable * out).trace().real();
    double sgn = br.coefficient >= 0 ? 1.0 : -1.0;
    value[j] = kappa * sgn * v;
    prob[j] = std::abs(br.coefficient) / kappa;
    acc += prob[j];
    cum[j] = acc;
  }
  cum[nb - 1] = 1.0;

  // Branch draws are tallied as integer counts per worker slice, so the
  // totals are bit-identical for any worker count.
  CounterRng rng{seed};
  std::vector<std::vector<int64_t>> counts(
      n_workers, std::vector<int64_t>(nb, 0));
  auto run = [&](int w) {
    int64_t lo = n_samples * w / n_workers;
    int64_t hi = n_samples * (w + 1) / n_workers;
    for (int64_t i = lo; i < hi; ++i) {
      double u = rng.uniform_at(static_cast<uint64_t>(i));
      size_t j = 0;
      while (j + 1 < nb && u >= cum[j]) ++j;
      ++counts[w][j];
    }
  };
  if (n_workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(run, w);
    for (auto &th : pool) th.join();
  }

  std::vector<int64_t> total(nb, 0);
  for (int w = 0; w < n_workers; ++w)
    for (size_t j = 0; j < nb; ++j) total[j] += counts[w][j];

  double mean = 0;
  for (size_t j = 0; j < nb; ++j) mean += double(total[j]) * value[j];
  mean /= double(n_samples);

  double var = 0;
  for (size_t j = 0; j < nb; ++j)
    var += double(total[j]) * (value[j] - mean) * (value[j] - mean);
  var = n_samples > 1 ? var / double(n_samples - 1) : 0.0;

  McResult res;
  res.estimate = mean;
  res.stderr_est = std::sqrt(var / double(n_samples));
  res.n_samples = n_samples;
  res.seed = seed;
  return res;
}

//============================================================================
// Composition
//============================================================================

QuasiProtocol compose_serial(const QuasiProtocol &a, const QuasiProtocol &b) {
  if (b.dim_s != a.dim_out)
    throw std::invalid_argument("compose_serial: dimension mismatch");

  QuasiProtocol proto;
  proto.dim_s = a.dim_s;
  proto.dim_out = b.dim_out;
  proto.label = a.label + ";" + b.label;
  for (const auto &ba : a.branches)
    for (const auto &bb : b.branches) {
      // (S (x) P_A (x) P_B) -> (S' (x) P_B) -> S''.
      ChoiOperator stage1 = tensor_choi(
          ba.processor.choi, choi_of_identity(bb.processor.dim_p));
      ChoiOperator combined = link_product(stage1, bb.processor.choi);
      QuasiProtocol::Branch br;
      br.coefficient = ba.coefficient * bb.coefficient;
      br.processor =
          ProcessorMap{a.dim_s, ba.processor.dim_p * bb.processor.dim_p,
                       b.dim_out, std::move(combined)};
      br.program.dim_p = ba.program.dim_p * bb.program.dim_p;
      br.program.label = ba.program.label + "(x)" + bb.program.label;
      br.program.evaluator = [pa = ba.program, pb = bb.program](double t) {
        return kron(pa(t), pb(t));
      };
      proto.branches.push_back(std::move(br));
    }
  proto.target = [ta = a.target, tb = b.target](double t) {
    return link_product(ta(t), tb(t));
  };
  return proto;
}

QuasiProtocol compose_tensor(const QuasiProtocol &a, const QuasiProtocol &b) {
  QuasiProtocol proto;
  proto.dim_s = a.dim_s * b.dim_s;
  proto.dim_out = a.dim_out * b.dim_out;
  proto.label = a.label + "(x)" + b.label;
  for (const auto &ba : a.branches)
    for (const auto &bb : b.branches) {
      ChoiOperator raw = tensor_choi(ba.processor.choi, bb.processor.choi);
      // Reorder the input factors (S_A, P_A, S_B, P_B) -> (S_A, S_B, P_A,
      // P_B); the output stays put.
      SystemDims dims{a.dim_s, ba.processor.dim_p, b.dim_s,
                      bb.processor.dim_p, a.dim_out * b.dim_out};
      ComplexMatrix mat = permute_systems(raw.matrix, dims, {0, 2, 1, 3, 4});
      QuasiProtocol::Branch br;
      br.coefficient = ba.coefficient * bb.coefficient;
      br.processor = ProcessorMap{
          proto.dim_s, ba.processor.dim_p * bb.processor.dim_p, proto.dim_out,
          ChoiOperator{proto.dim_s * ba.processor.dim_p * bb.processor.dim_p,
                       proto.dim_out, std::move(mat)}};
      br.program.dim_p = ba.program.dim_p * bb.program.dim_p;
      br.program.label = ba.program.label + "(x)" + bb.program.label;
      br.program.evaluator = [pa = ba.program, pb = bb.program](double t) {
        return kron(pa(t), pb(t));
      };
      proto.branches.push_back(std::move(br));
    }
  proto.target = [ta = a.target, tb = b.target](double t) {
    return tensor_choi(ta(t), tb(t));
  };
  return proto;
}

double TrotterComposition::kappa() const {
  return std::pow(step.kappa(), n_steps);
}

ChoiOperator TrotterComposition::realized_choi() const {
  ChoiOperator s = step.realized_choi(time / n_steps);
  ChoiOperator acc = s;
  for (int i = 1; i < n_steps; ++i) acc = link_product(acc, s);
  return acc;
}

ChoiOperator TrotterComposition::target_product_choi() const {
  ChoiOperator s = step.target(time / n_steps);
  ChoiOperator acc = s;
  for (int i = 1; i < n_steps; ++i) acc = link_product(acc, s);
  return acc;
}

TrotterComposition trotter_compose(const QuasiProtocol &a,
                                   const QuasiProtocol &b, int n_steps,
                                   double t) {
  if (n_steps < 1)
    throw std::invalid_argument("trotter_compose: n_steps >= 1");
  return TrotterComposition{compose_serial(a, b), n_steps, t};
}

}  // namespace lindprog
