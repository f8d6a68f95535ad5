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

#include "lindprog/sdp.hpp"

#include <cmath>
#include <cstdio>

namespace lindprog {

//============================================================================
// Problem description
//============================================================================

int SdpProblem::add_hermitian_block(BlockKind kind, Index dim,
                                    std::string name) {
  if (kind != BlockKind::psd && kind != BlockKind::free_hermitian)
    throw std::invalid_argument("add_hermitian_block: wrong kind");
  Block b{kind, dim, num_vars, std::move(name)};
  num_vars += b.coords();
  blocks.push_back(std::move(b));
  return static_cast<int>(blocks.size()) - 1;
}

int SdpProblem::add_scalar(std::string name, bool nonneg) {
  Block b{nonneg ? BlockKind::scalar_nonneg : BlockKind::scalar, 1, num_vars,
          std::move(name)};
  num_vars += 1;
  blocks.push_back(std::move(b));
  return static_cast<int>(blocks.size()) - 1;
}

namespace {

// Coordinates preceding row i of the upper triangle: i diagonal slots and
// 2 * (i rows' off-diagonal pairs).
Index row_base(Index n, Index i) {
  // sum_{r<i} (1 + 2*(n-1-r))
  return i + 2 * ((n - 1) * i - i * (i - 1) / 2);
}

}  // namespace

Index SdpProblem::diag_coord(int block, Index i) const {
  const Block &b = blocks[block];
  return b.offset + row_base(b.dim, i);
}

std::pair<Index, Index> SdpProblem::offdiag_coords(int block, Index i,
                                                   Index j) const {
  const Block &b = blocks[block];
  Index base = b.offset + row_base(b.dim, i) + 1 + 2 * (j - i - 1);
  return {base, base + 1};
}

int SdpProblem::new_row(double b) {
  rhs.push_back(b);
  return num_rows++;
}

void SdpProblem::set_rhs(int row, double b) { rhs[row] = b; }

void SdpProblem::add_scalar_coeff(int row, int block, double coeff) {
  if (coeff == 0.0) return;
  triplets.emplace_back(row, static_cast<int>(blocks[block].offset), coeff);
}

void SdpProblem::add_matrix_coeff(int row, int block, const ComplexMatrix &c,
                                  double weight) {
  const Block &b = blocks[block];
  const double s = std::sqrt(2.0);
  for (Index i = 0; i < b.dim; ++i) {
    double v = weight * c(i, i).real();
    if (v != 0.0)
      triplets.emplace_back(row, static_cast<int>(diag_coord(block, i)), v);
    for (Index j = i + 1; j < b.dim; ++j) {
      auto [re, im] = offdiag_coords(block, i, j);
      double vr = weight * s * c(i, j).real();
      double vi = weight * s * c(i, j).imag();
      if (vr != 0.0) triplets.emplace_back(row, static_cast<int>(re), vr);
      if (vi != 0.0) triplets.emplace_back(row, static_cast<int>(im), vi);
    }
  }
}

void SdpProblem::add_complex_coeff(int row_re, int row_im, int block,
                                   const ComplexMatrix &f, double weight) {
  // f(X) = tr(F^+ X) = <H1, X> - i <H2, X> for F = H1 + i H2 Hermitian
  // parts, X Hermitian.
  ComplexMatrix h1 = hermitize(f);
  ComplexMatrix h2 = hermitize(Complex(0, -1) * (f - dagger(f)) * 0.5);
  add_matrix_coeff(row_re, block, h1, weight);
  if (row_im >= 0) add_matrix_coeff(row_im, block, h2, -weight);
}

void SdpProblem::add_objective(int block, const ComplexMatrix &c) {
  const Block &b = blocks[block];
  const double s = std::sqrt(2.0);
  for (Index i = 0; i < b.dim; ++i) {
    objective.push_back({diag_coord(block, i), c(i, i).real()});
    for (Index j = i + 1; j < b.dim; ++j) {
      auto [re, im] = offdiag_coords(block, i, j);
      objective.push_back({re, s * c(i, j).real()});
      objective.push_back({im, s * c(i, j).imag()});
    }
  }
}

void SdpProblem::add_objective_scalar(int block, double coeff) {
  objective.push_back({blocks[block].offset, coeff});
}

ComplexMatrix SdpProblem::extract_matrix(const RealVector &x,
                                         int block) const {
  const Block &b = blocks[block];
  const double inv_s = 1.0 / std::sqrt(2.0);
  ComplexMatrix m(b.dim, b.dim);
  for (Index i = 0; i < b.dim; ++i) {
    m(i, i) = x(diag_coord(block, i));
    for (Index j = i + 1; j < b.dim; ++j) {
      auto [re, im] = offdiag_coords(block, i, j);
      m(i, j) = Complex(x(re), x(im)) * inv_s;
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

double SdpProblem::extract_scalar(const RealVector &x, int block) const {
  return x(blocks[block].offset);
}

//============================================================================
// Operator-splitting solver
//============================================================================

namespace {

// Projection of a Hermitian block onto the PSD cone through the real
// symmetric embedding [[Re, -Im], [Im, Re]].
void project_psd(const SdpProblem &p, int block, RealVector &z) {
  const auto &b = p.blocks[block];
  ComplexMatrix m = p.extract_matrix(z, block);
  const Index n = b.dim;

  RealMatrix emb(2 * n, 2 * n);
  emb.topLeftCorner(n, n) = m.real();
  emb.topRightCorner(n, n) = -m.imag();
  emb.bottomLeftCorner(n, n) = m.imag();
  emb.bottomRightCorner(n, n) = m.real();

  Eigen::SelfAdjointEigenSolver<RealMatrix> es(emb);
  RealVector lam = es.eigenvalues();
  if (lam(0) >= 0) return;  // already PSD
  RealMatrix clipped = RealMatrix::Zero(2 * n, 2 * n);
  for (Index i = 0; i < 2 * n; ++i) {
    if (lam(i) <= 0) continue;
    clipped += lam(i) * es.eigenvectors().col(i) *
               es.eigenvectors().col(i).transpose();
  }
  RealMatrix re = 0.5 * (clipped.topLeftCorner(n, n) +
                         clipped.bottomRightCorner(n, n));
  RealMatrix im = 0.5 * (clipped.bottomLeftCorner(n, n) -
                         clipped.topRightCorner(n, n));

  const double s = std::sqrt(2.0);
  for (Index i = 0; i < n; ++i) {
    z(p.diag_coord(block, i)) = re(i, i);
    for (Index j = i + 1; j < n; ++j) {
      auto [rec, imc] = p.offdiag_coords(block, i, j);
      z(rec) = s * re(i, j);
      z(imc) = s * im(i, j);
    }
  }
}

void project_cone(const SdpProblem &p, RealVector &z) {
  for (int k = 0; k < static_cast<int>(p.blocks.size()); ++k) {
    switch (p.blocks[k].kind) {
      case SdpProblem::BlockKind::psd:
        project_psd(p, k, z);
        break;
      case SdpProblem::BlockKind::scalar_nonneg: {
        Index off = p.blocks[k].offset;
        if (z(off) < 0) z(off) = 0;
        break;
      }
      default:
        break;
    }
  }
}

struct KktSolver {
  Eigen::SparseMatrix<double> kkt;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt;
  Index n = 0;
  int m = 0;

  void factor(const Eigen::SparseMatrix<double> &a, double rho,
              double delta) {
    n = a.cols();
    m = static_cast<int>(a.rows());
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(a.nonZeros() * 2 + n + m);
    for (Index i = 0; i < n; ++i) t.emplace_back(i, i, rho);
    for (int i = 0; i < m; ++i)
      t.emplace_back(static_cast<int>(n) + i, static_cast<int>(n) + i,
                     -delta);
    for (int k = 0; k < a.outerSize(); ++k)
      for (Eigen::SparseMatrix<double>::InnerIterator it(a, k); it; ++it) {
        t.emplace_back(static_cast<int>(n) + static_cast<int>(it.row()),
                       static_cast<int>(it.col()), it.value());
        t.emplace_back(static_cast<int>(it.col()),
                       static_cast<int>(n) + static_cast<int>(it.row()),
                       it.value());
      }
    kkt.resize(n + m, n + m);
    kkt.setFromTriplets(t.begin(), t.end());
    ldlt.compute(kkt);
    if (ldlt.info() != Eigen::Success)
      throw std::runtime_error("solve_sdp: KKT factorization failed");
  }

  RealVector solve(const RealVector &top, const RealVector &bottom) const {
    RealVector rhs(n + m);
    rhs.head(n) = top;
    rhs.tail(m) = bottom;
    RealVector sol = ldlt.solve(rhs);
    // One step of iterative refinement keeps the regularization-induced
    // error well below the solver tolerance.
    RealVector resid = rhs - kkt * sol;
    sol += ldlt.solve(resid);
    return sol.head(n);
  }
};

}  // namespace

SdpSolution solve_sdp(const SdpProblem &problem, const SolveOptions &opts,
                      SdpState *state) {
  const Index n = problem.num_vars;
  const int m = problem.num_rows;

  Eigen::SparseMatrix<double> a(m, n);
  a.setFromTriplets(problem.triplets.begin(), problem.triplets.end());

  // Row equilibration.
  RealVector b(m);
  for (int i = 0; i < m; ++i) b(i) = problem.rhs[i];
  RealVector row_scale = RealVector::Ones(m);
  for (int k = 0; k < a.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, k); it; ++it)
      row_scale(it.row()) = std::max(row_scale(it.row()),
                                     std::abs(it.value()));
  for (int k = 0; k < a.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(a, k); it; ++it)
      it.valueRef() /= row_scale(it.row());
  for (int i = 0; i < m; ++i) b(i) /= row_scale(i);

  RealVector c = RealVector::Zero(n);
  for (auto [idx, v] : problem.objective) c(idx) += v;

  double rho = opts.rho;
  RealVector z = RealVector::Zero(n), u = RealVector::Zero(n);
  if (state && state->z.size() == n) {
    z = state->z;
    u = state->u;
    if (state->rho > 0) rho = state->rho;
  }

  KktSolver kkt;
  kkt.factor(a, rho, 1e-9);

  SdpSolution sol;
  RealVector x = z;
  const double b_scale = 1.0 + b.norm();
  double plateau_feas = 1e300;
  int plateau_iter = 0;

  const int check_every = 25;
  int refactor_budget = 30;

  for (int it = 1; it <= opts.max_iter; ++it) {
    x = kkt.solve(rho * (z - u) - c, b);
    RealVector x_relaxed = opts.over_relax * x + (1.0 - opts.over_relax) * z;
    RealVector z_prev = z;
    z = x_relaxed + u;
    project_cone(problem, z);
    u += x_relaxed - z;

    if (it % check_every != 0 && it != opts.max_iter) continue;

    double scale = std::max({1.0, x.norm(), z.norm()});
    double rp = (x - z).norm();
    double rd = rho * (z - z_prev).norm();
    // Constraint violation at the cone-feasible point; unlike the scaled
    // consensus residual this cannot be masked by diverging iterates.
    double feas = (a * z - b).norm() / b_scale;
    sol.primal_residual = std::max(rp / scale, feas);
    sol.dual_residual = rd / scale;
    sol.iterations = it;

    if (opts.verbose && it % 1000 == 0)
      std::fprintf(stderr, "[sdp] it=%d rp=%.3e rd=%.3e feas=%.3e rho=%.2e\n",
                   it, rp / scale, sol.dual_residual, feas, rho);

    if (rp / scale < opts.tol && sol.dual_residual < opts.tol &&
        feas < 10 * opts.tol) {
      sol.status = SdpSolution::Status::optimal;
      break;
    }

    // Stalled constraint violation with a settled dual direction indicates
    // an infeasible constraint set.
    if (it - plateau_iter >= 3000) {
      if (feas > 1e-5 && feas > 0.9999 * plateau_feas &&
          sol.dual_residual < 1e-2 * feas) {
        sol.status = SdpSolution::Status::infeasible;
        break;
      }
      plateau_feas = feas;
      plateau_iter = it;
    }

    if (opts.adaptive_rho && refactor_budget > 0 && it % 500 == 0) {
      double ratio = (rp + 1e-300) / (rd + 1e-300);
      if (ratio > 10.0 || ratio < 0.1) {
        double f = std::sqrt(std::min(std::max(ratio, 1e-4), 1e4));
        rho *= f;
        u /= f;
        kkt.factor(a, rho, 1e-9);
        --refactor_budget;
      }
    }
  }

  sol.x = z;
  sol.objective = c.dot(z);
  if (state) {
    state->z = z;
    state->u = u;
    state->rho = rho;
  }
  return sol;
}

}  // namespace lindprog
