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

#ifndef LINDPROG_CONIC_HPP_
#define LINDPROG_CONIC_HPP_

#include <vector>

#include "lindprog/dynamics.hpp"
#include "lindprog/program_family.hpp"
#include "lindprog/sdp.hpp"

namespace lindprog {

//============================================================================
// Norm programs
//============================================================================

// Diamond norm of a Hermitian-preserving map given its (Hermitian) Choi
// matrix: min ||tr_out Y||_inf over Y >= +-J. Equals 1 for CPTP maps.
double diamond_norm(const ChoiOperator &j, const SolveOptions &opts = {});

// Physical implementability nu = log2 min(p1 + p2) over two-channel splits
// J = J1 - J2, J_i >= 0, tr_out J_i = p_i I. Zero iff CPTP.
double implementability_nu(const ChoiOperator &j, const SolveOptions &opts = {});

//============================================================================
// Programming cost
//============================================================================

struct CostResult {
  enum class Status { optimal, infeasible, solver_failure };
  Status status = Status::solver_failure;
  double gamma = 0.0;  // log2(p1 + p2) when optimal
  double p_sum = 0.0;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  // The optimizing HPTP processor J1 - J2 on (S (x) P) -> S'.
  ChoiOperator processor;
};

struct CostOptions {
  int n_time_samples = 20;
  SolveOptions solver;
};

// epsilon-error programming cost of e^{tL} for the given program family on
// the uniform grid over [0, T] (t = 0 always included). epsilon = 0 uses
// the exact-equality constraint per sample; epsilon > 0 the diamond-ball
// relaxation. Infeasibility ("not programmable on this grid") is a valid
// result distinct from solver failure.
CostResult programming_cost(const Lindbladian &lin,
                            const ProgramStateFamily &family, double t_max,
                            double epsilon, const CostOptions &opts = {});

// Choi-state program pi_t = J(e^{tL}) / d.
ProgramStateFamily choi_program_family(const Lindbladian &lin);
CostResult port_based_cost(const Lindbladian &lin, double t_max,
                           double epsilon, const CostOptions &opts = {});

// Sweep over epsilon values with a shared constraint structure and warm
// starts between consecutive solves.
std::vector<CostResult> cost_sweep(const Lindbladian &lin,
                                   const ProgramStateFamily &family,
                                   double t_max,
                                   const std::vector<double> &epsilons,
                                   const CostOptions &opts = {});

}  // namespace lindprog

#endif  // LINDPROG_CONIC_HPP_
