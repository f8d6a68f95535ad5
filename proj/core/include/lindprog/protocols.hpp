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

#ifndef LINDPROG_PROTOCOLS_HPP_
#define LINDPROG_PROTOCOLS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lindprog/channels.hpp"
#include "lindprog/dynamics.hpp"
#include "lindprog/program_family.hpp"

namespace lindprog {

//============================================================================
// Quasi-probability protocols
//============================================================================

// Signed mixture of CPTP branch processors with per-branch program state
// families: sum_j alpha_j B_j(rho (x) pi_j(t)) = target_t(rho).
struct QuasiProtocol {
  struct Branch {
    double coefficient = 0.0;
    ProcessorMap processor;
    ProgramStateFamily program;
  };

  Index dim_s = 0;
  Index dim_out = 0;
  std::string label;
  std::vector<Branch> branches;
  std::function<ChoiOperator(double)> target;

  double kappa() const;
  // sum_j alpha_j Choi(rho -> B_j(rho (x) pi_j(t))).
  ChoiOperator realized_choi(double t) const;
  ComplexMatrix apply(const ComplexMatrix &rho, double t) const;
};

// Trivial single-branch protocol for the identity channel.
QuasiProtocol identity_protocol(Index dim);

//============================================================================
// Coherent generators L = i ad_H
//============================================================================

struct CoherentProtocol {
  ProcessorMap processor;     // HPTP, fixed
  ProgramStateFamily program; // |pi_t> = K^{-1/2} sum_j e^{i lambda_j t}|j>
  Index levels = 0;           // K = number of eigenvalue clusters
  std::vector<double> cluster_values;
  std::vector<ComplexMatrix> projectors;
};

// Exact HPTP programming of rho -> e^{iHt} rho e^{-iHt} with a K-level
// program, K the number of distinct (clustered) eigenvalues of H.
CoherentProtocol coherent_protocol(const ComplexMatrix &hamiltonian,
                                   double degeneracy_tol = 1e-9);

// Quasi-decomposition of the K=2 coherent processor into three CPTP
// measure-and-feedforward branches with weights (1, 1/2, -1/2); kappa = 2.
struct CoherentQuasiBranches {
  std::array<ProcessorMap, 3> processors;
  std::array<double, 3> coefficients;
};
CoherentQuasiBranches coherent_quasi_branches_k2(const ComplexMatrix &proj0,
                                                 const ComplexMatrix &proj1);

//============================================================================
// SWAP-dephasing model
//============================================================================

// Closed form E_t = e^{-lambda t} e^{it ad_S} + (1 - e^{-lambda t}) D_B.
ChoiOperator swap_dephasing_exact(double lambda, double t);

// Three-branch quasi protocol driven by the program theta_t (x) sigma_t;
// the control qubit selects the coherent SWAP branch or Bell dephasing.
QuasiProtocol swap_dephasing_protocol(double lambda);

//============================================================================
// Amplitude damping
//============================================================================

// The six single-qubit program states sigma_j(theta), theta = 2 asin(sqrt
// gamma). States 3 and 4 are the normalized projector-branch states; 5 and
// 6 carry the phase-gate pieces of the CNOT cut.
std::array<ComplexMatrix, 6> ad_program_states(double gamma);

// Six-branch protocol for AD_gamma with kappa = |1|+|1|+|1|+|-1|+2*|1/2| = 5.
QuasiProtocol ad_quasi_protocol(double gamma);

// Rebinds the AD protocol's program states through theta(t) =
// 2 asin(sqrt(1 - e^{-gamma t})) so it programs the emission semigroup.
QuasiProtocol semigroup_family(const QuasiProtocol &ad_protocol,
                               const Lindbladian &emission_reference);

//============================================================================
// Monte-Carlo estimation
//============================================================================

struct McResult {
  double estimate = 0.0;
  double stderr_est = 0.0;
  int64_t n_samples = 0;
  uint64_t seed = 0;
};

// Unbiased estimate of tr(O target_t(rho0)): branch j is drawn with
// probability |alpha_j|/kappa, its exact branch value is reweighted by
// kappa sign(alpha_j). Counter-based sampling makes the result independent
// of n_workers for a fixed seed.
McResult mc_estimate(const QuasiProtocol &protocol, const ComplexMatrix &rho0,
                     const ComplexMatrix &observable, double t,
                     int64_t n_samples, uint64_t seed, int n_workers = 1);

//============================================================================
// Composition
//============================================================================

// Serial composition W = Q o (P (x) I_{P2}); exact when the targets
// commute. kappa multiplies.
QuasiProtocol compose_serial(const QuasiProtocol &a, const QuasiProtocol &b);

// Tensor composition W = (P (x) Q) o SWAP; always exact. kappa multiplies.
QuasiProtocol compose_tensor(const QuasiProtocol &a, const QuasiProtocol &b);

// n-step Trotter product of two protocols evaluated at total time t. The
// branch set is the n-fold product and is sampled per step rather than
// enumerated; kappa = (kappa_A kappa_B)^n.
struct TrotterComposition {
  QuasiProtocol step;  // serial composition of A and B, used at t/n
  int n_steps = 1;
  double time = 0.0;

  double kappa() const;
  ChoiOperator realized_choi() const;       // n-fold product of step outputs
  ChoiOperator target_product_choi() const; // n-fold product of step targets
};
TrotterComposition trotter_compose(const QuasiProtocol &a,
                                   const QuasiProtocol &b, int n_steps,
                                   double t);

}  // namespace lindprog

#endif  // LINDPROG_PROTOCOLS_HPP_
