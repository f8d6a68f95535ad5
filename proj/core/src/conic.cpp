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

#include "lindprog/conic.hpp"

#include <cmath>

namespace lindprog {

namespace {

// Functional F for the (p,q) component of tr_out on a (d_in (x) d_out)
// block: f(X) = sum_a X[(p,a),(q,a)].
ComplexMatrix trace_out_functional(Index d_in, Index d_out, Index p, Index q) {
  ComplexMatrix f = czeros(d_in * d_out, d_in * d_out);
  for (Index a = 0; a < d_out; ++a) f(p * d_out + a, q * d_out + a) = 1.0;
  return f;
}

}  // namespace

//============================================================================
// Norm programs
//============================================================================

double diamond_norm(const ChoiOperator &j, const SolveOptions &opts) {
  if (!is_hermitian(j.matrix, 1e-9))
    throw std::invalid_argument("diamond_norm: Choi must be Hermitian");
  const Index din = j.dim_in, dout = j.dim_out;
  const Index m = din * dout;

  SdpProblem prob;
  int y = prob.add_hermitian_block(SdpProblem::BlockKind::free_hermitian, m,
                                   "Y");
  int zp = prob.add_hermitian_block(SdpProblem::BlockKind::psd, m, "Y-J");
  int zm = prob.add_hermitian_block(SdpProblem::BlockKind::psd, m, "Y+J");
  int w = prob.add_hermitian_block(SdpProblem::BlockKind::psd, din, "sI-trY");
  int s = prob.add_scalar("s", true);

  // Z+- = Y -+ J.
  for (Index p = 0; p < m; ++p)
    for (Index q = p; q < m; ++q) {
      ComplexMatrix e = matrix_unit(m, p, q);
      int r_re = prob.new_row(-j.matrix(p, q).real());
      int r_im = p == q ? -1 : prob.new_row(-j.matrix(p, q).imag());
      prob.add_complex_coeff(r_re, r_im, zp, e);
      prob.add_complex_coeff(r_re, r_im, y, e, -1.0);
      int s_re = prob.new_row(j.matrix(p, q).real());
      int s_im = p == q ? -1 : prob.new_row(j.matrix(p, q).imag());
      prob.add_complex_coeff(s_re, s_im, zm, e);
      prob.add_complex_coeff(s_re, s_im, y, e, -1.0);
    }

  // W + tr_out(Y) - s I = 0.
  for (Index p = 0; p < din; ++p)
    for (Index q = p; q < din; ++q) {
      int r_re = prob.new_row(0.0);
      int r_im = p == q ? -1 : prob.new_row(0.0);
      prob.add_complex_coeff(r_re, r_im, w, matrix_unit(din, p, q));
      prob.add_complex_coeff(r_re, r_im, y,
                             trace_out_functional(din, dout, p, q));
      if (p == q) prob.add_scalar_coeff(r_re, s, -1.0);
    }

  prob.add_objective_scalar(s, 1.0);

  SdpSolution sol = solve_sdp(prob, opts);
  if (sol.status != SdpSolution::Status::optimal)
    throw std::runtime_error("diamond_norm: solver did not converge");
  return prob.extract_scalar(sol.x, s);
}

double implementability_nu(const ChoiOperator &j, const SolveOptions &opts) {
  if (!is_hptp(j, 1e-6))
    throw std::invalid_argument("implementability_nu: input must be HPTP");
  const Index din = j.dim_in, dout = j.dim_out;
  const Index m = din * dout;

  SdpProblem prob;
  int j1 = prob.add_hermitian_block(SdpProblem::BlockKind::psd, m, "J1");
  int j2 = prob.add_hermitian_block(SdpProblem::BlockKind::psd, m, "J2");
  int p1 = prob.add_scalar("p1", true);
  int p2 = prob.add_scalar("p2", true);

  // J1 - J2 = J.
  for (Index p = 0; p < m; ++p)
    for (Index q = p; q < m; ++q) {
      ComplexMatrix e = matrix_unit(m, p, q);
      int r_re = prob.new_row(j.matrix(p, q).real());
      int r_im = p == q ? -1 : prob.new_row(j.matrix(p, q).imag());
      prob.add_complex_coeff(r_re, r_im, j1, e);
      prob.add_complex_coeff(r_re, r_im, j2, e, -1.0);
    }

  // tr_out J_i = p_i I.
  for (int which = 0; which < 2; ++which) {
    int blk = which == 0 ? j1 : j2;
    int ps = which == 0 ? p1 : p2;
    for (Index p = 0; p < din; ++p)
      for (Index q = p; q < din; ++q) {
        int r_re = prob.new_row(0.0);
        int r_im = p == q ? -1 : prob.new_row(0.0);
        prob.add_complex_coeff(r_re, r_im, blk,
                               trace_out_functional(din, dout, p, q));
        if (p == q) prob.add_scalar_coeff(r_re, ps, -1.0);
      }
  }

  prob.add_objective_scalar(p1, 1.0);
  prob.add_objective_scalar(p2, 1.0);

  SdpSolution sol = solve_sdp(prob, opts);
  if (sol.status != SdpSolution::Status::optimal)
    throw std::runtime_error("implementability_nu: solver did not converge");
  double psum =
      prob.extract_scalar(sol.x, p1) + prob.extract_scalar(sol.x, p2);
  double nu = std::log2(std::max(psum, 1e-300));
  if (nu < 0 && nu > -1e-6) nu = 0.0;
  return nu;
}

//============================================================================
// Programming cost
//============================================================================

namespace {

struct CostProgram {
  SdpProblem prob;
  int j1 = 0, j2 = 0, p1 = 0, p2 = 0;
  // Rows whose right-hand side carries 2*epsilon (diagonal components of
  // the per-sample norm bound), for sweeping epsilon in place.
  std::vector<int> epsilon_rows;
};

// Functional F for component ((i,a),(j,b)) of tr_P[X (I (x) pi^T (x) I)]
// on a block over S (x) P (x) S': f(X) = sum_{kl} pi_{kl} X[(i,k,a),(j,l,b)].
ComplexMatrix reduced_functional(Index ds, Index dp, Index dout,
                                 const ComplexMatrix &pi, Index i, Index a,
                                 Index j, Index b) {
  const Index big = ds * dp * dout;
  ComplexMatrix f = czeros(big, big);
  for (Index k = 0; k < dp; ++k)
    for (Index l = 0; l < dp; ++l)
      f((i * dp + k) * dout + a, (j * dp + l) * dout + b) =
          std::conj(pi(k, l));
  return f;
}

// Builds the cost program. With `ball = false` the per-sample constraint
// is the exact equality; with `ball = true` the diamond-ball relaxation
// (Y_m >= +-D_m and ||tr_out Y_m|| <= 2 epsilon).
CostProgram build_cost_program(const Lindbladian &lin,
                               const ProgramStateFamily &family, double t_max,
                               double epsilon, int n_samples, bool ball) {
  const Index ds = lin.dim, dp = family.dim_p, dout = lin.dim;
  const Index big = ds * dp * dout;
  const Index red = ds * dout;

  CostProgram cp;
  SdpProblem &prob = cp.prob;
  cp.j1 = prob.add_hermitian_block(SdpProblem::BlockKind::psd, big, "J1");
  cp.j2 = prob.add_hermitian_block(SdpProblem::BlockKind::psd, big, "J2");
  cp.p1 = prob.add_scalar("p1", true);
  cp.p2 = prob.add_scalar("p2", true);

  // tr_{S'} J_i = p_i I_{SP}.
  for (int which = 0; which < 2; ++which) {
    int blk = which == 0 ? cp.j1 : cp.j2;
    int ps = which == 0 ? cp.p1 : cp.p2;
    for (Index p = 0; p < ds * dp; ++p)
      for (Index q = p; q < ds * dp; ++q) {
        int r_re = prob.new_row(0.0);
        int r_im = p == q ? -1 : prob.new_row(0.0);
        prob.add_complex_coeff(r_re, r_im, blk,
                               trace_out_functional(ds * dp, dout, p, q));
        if (p == q) prob.add_scalar_coeff(r_re, ps, -1.0);
      }
  }

  // The processor is trace preserving: p1 - p2 = 1. The exact-equality
  // constraint implies this; the diamond-ball relaxation does not, and
  // without it the optimizer could leave the HPTP set.
  {
    int row = prob.new_row(1.0);
    prob.add_scalar_coeff(row, cp.p1, 1.0);
    prob.add_scalar_coeff(row, cp.p2, -1.0);
  }

  for (int ms = 0; ms < n_samples; ++ms) {
    double t =
        n_samples > 1 ? t_max * double(ms) / double(n_samples - 1) : 0.0;
    ComplexMatrix pi = family(t);
    ComplexMatrix target = semigroup_choi(lin, t).matrix;

    if (!ball) {
      // tr_P[(J1 - J2)(pi^T)] = J(e^{tL}).
      for (Index p = 0; p < red; ++p)
        for (Index q = p; q < red; ++q) {
          Index i = p / dout, a = p % dout, jj = q / dout, b = q % dout;
          ComplexMatrix f = reduced_functional(ds, dp, dout, pi, i, a, jj, b);
          int r_re = prob.new_row(target(p, q).real());
          int r_im = p == q ? -1 : prob.new_row(target(p, q).imag());
          prob.add_complex_coeff(r_re, r_im, cp.j1, f);
          prob.add_complex_coeff(r_re, r_im, cp.j2, f, -1.0);
        }
      continue;
    }

    int y = prob.add_hermitian_block(SdpProblem::BlockKind::free_hermitian,
                                     red, "Y");
    int zp = prob.add_hermitian_block(SdpProblem::BlockKind::psd, red, "Y-D");
    int zm = prob.add_hermitian_block(SdpProblem::BlockKind::psd, red, "Y+D");
    int w = prob.add_hermitian_block(SdpProblem::BlockKind::psd, ds, "2eI");

    for (Index p = 0; p < red; ++p)
      for (Index q = p; q < red; ++q) {
        Index i = p / dout, a = p % dout, jj = q / dout, b = q % dout;
        ComplexMatrix f = reduced_functional(ds, dp, dout, pi, i, a, jj, b);
        ComplexMatrix e = matrix_unit(red, p, q);
        // Z+ - Y + reduced(J1 - J2) = C.
        int r_re = prob.new_row(target(p, q).real());
        int r_im = p == q ? -1 : prob.new_row(target(p, q).imag());
        prob.add_complex_coeff(r_re, r_im, zp, e);
        prob.add_complex_coeff(r_re, r_im, y, e, -1.0);
        prob.add_complex_coeff(r_re, r_im, cp.j1, f);
        prob.add_complex_coeff(r_re, r_im, cp.j2, f, -1.0);
        // Z- - Y - reduced(J1 - J2) = -C.
        int s_re = prob.new_row(-target(p, q).real());
        int s_im = p == q ? -1 : prob.new_row(-target(p, q).imag());
        prob.add_complex_coeff(s_re, s_im, zm, e);
        prob.add_complex_coeff(s_re, s_im, y, e, -1.0);
        prob.add_complex_coeff(s_re, s_im, cp.j1, f, -1.0);
        prob.add_complex_coeff(s_re, s_im, cp.j2, f);
      }

    // W + tr_out(Y) = 2 epsilon I.
    for (Index p = 0; p < ds; ++p)
      for (Index q = p; q < ds; ++q) {
        int r_re = prob.new_row(p == q ? 2.0 * epsilon : 0.0);
        int r_im = p == q ? -1 : prob.new_row(0.0);
        prob.add_complex_coeff(r_re, r_im, w, matrix_unit(ds, p, q));
        prob.add_complex_coeff(r_re, r_im, y,
                               trace_out_functional(ds, dout, p, q));
        if (p == q) cp.epsilon_rows.push_back(r_re);
      }
  }

  prob.add_objective_scalar(cp.p1, 1.0);
  prob.add_objective_scalar(cp.p2, 1.0);
  return cp;
}

CostResult run_cost_solve(CostProgram &cp, Index ds, Index dp,
                          const SolveOptions &opts, SdpState *state) {
  SdpSolution sol = solve_sdp(cp.prob, opts, state);
  CostResult res;
  res.iterations = sol.iterations;
  res.primal_residual = sol.primal_residual;
  res.dual_residual = sol.dual_residual;
  switch (sol.status) {
    case SdpSolution::Status::optimal: {
      res.status = CostResult::Status::optimal;
      res.p_sum = cp.prob.extract_scalar(sol.x, cp.p1) +
                  cp.prob.extract_scalar(sol.x, cp.p2);
      res.gamma = std::log2(std::max(res.p_sum, 1e-300));
      if (res.gamma < 0 && res.gamma > -1e-6) res.gamma = 0.0;
      res.processor = ChoiOperator{
          ds * dp, ds,
          ComplexMatrix(cp.prob.extract_matrix(sol.x, cp.j1) -
                        cp.prob.extract_matrix(sol.x, cp.j2))};
      break;
    }
    case SdpSolution::Status::infeasible:
      res.status = CostResult::Status::infeasible;
      break;
    default:
      res.status = CostResult::Status::solver_failure;
      break;
  }
  return res;
}

}  // namespace

CostResult programming_cost(const Lindbladian &lin,
                            const ProgramStateFamily &family, double t_max,
                            double epsilon, const CostOptions &opts) {
  if (t_max < 0) throw std::invalid_argument("programming_cost: T >= 0");
  if (epsilon < 0)
    throw std::invalid_argument("programming_cost: epsilon >= 0");
  if (opts.n_time_samples < 2)
    throw std::invalid_argument("programming_cost: n_time_samples >= 2");
  // t_max = 0 degenerates to the single-sample grid {0}.
  int n = t_max == 0.0 ? 1 : opts.n_time_samples;
  CostProgram cp =
      build_cost_program(lin, family, t_max, epsilon, n, epsilon > 0);
  return run_cost_solve(cp, lin.dim, family.dim_p, opts.solver, nullptr);
}

ProgramStateFamily choi_program_family(const Lindbladian &lin) {
  ProgramStateFamily f;
  f.dim_p = lin.dim * lin.dim;
  f.label = "choi-state";
  Lindbladian copy = lin;
  f.evaluator = [copy](double t) {
    return ComplexMatrix(semigroup_choi(copy, t).matrix /
                         double(copy.dim));
  };
  return f;
}

CostResult port_based_cost(const Lindbladian &lin, double t_max,
                           double epsilon, const CostOptions &opts) {
  return programming_cost(lin, choi_program_family(lin), t_max, epsilon, opts);
}

std::vector<CostResult> cost_sweep(const Lindbladian &lin,
                                   const ProgramStateFamily &family,
                                   double t_max,
                                   const std::vector<double> &epsilons,
                                   const CostOptions &opts) {
  // One ball-form program serves every epsilon: only the bound rows change.
  CostProgram cp = build_cost_program(lin, family, t_max, 0.0,
                                      opts.n_time_samples, true);
  std::vector<CostResult> out;
  SdpState state;
  for (double eps : epsilons) {
    if (eps < 0) throw std::invalid_argument("cost_sweep: epsilon >= 0");
    for (int row : cp.epsilon_rows) cp.prob.set_rhs(row, 2.0 * eps);
    out.push_back(
        run_cost_solve(cp, lin.dim, family.dim_p, opts.solver, &state));
  }
  return out;
}

}  // namespace lindprog
