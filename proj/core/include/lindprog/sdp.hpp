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

#ifndef LINDPROG_SDP_HPP_
#define LINDPROG_SDP_HPP_

#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "lindprog/matcore.hpp"

namespace lindprog {

//============================================================================
// Problem description
//============================================================================

// Conic program over Hermitian blocks and scalars with affine equality
// constraints and a linear objective:
//   min <c, x>  s.t.  A x = b,  psd/nonneg blocks in their cones.
//
// Hermitian blocks are parameterized isometrically by real coordinates
// (diagonal entries, then sqrt(2)-scaled real/imag parts of the upper
// triangle row by row), so Frobenius and Euclidean geometry agree.
struct SdpProblem {
  enum class BlockKind { psd, free_hermitian, scalar, scalar_nonneg };

  struct Block {
    BlockKind kind;
    Index dim;     // matrix dimension; 1 for scalars
    Index offset;  // first real coordinate
    std::string name;
    Index coords() const {
      return (kind == BlockKind::psd || kind == BlockKind::free_hermitian)
                 ? dim * dim
                 : 1;
    }
  };

  std::vector<Block> blocks;
  Index num_vars = 0;
  int num_rows = 0;
  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<double> rhs;
  std::vector<std::pair<Index, double>> objective;

  int add_hermitian_block(BlockKind kind, Index dim, std::string name);
  int add_scalar(std::string name, bool nonneg);

  // Coordinate helpers for Hermitian blocks.
  Index diag_coord(int block, Index i) const;
  std::pair<Index, Index> offdiag_coords(int block, Index i, Index j) const;

  int new_row(double b);
  void set_rhs(int row, double b);
  void add_scalar_coeff(int row, int block, double coeff);
  // Adds weight * <C, X_block> (real Hilbert-Schmidt inner product,
  // C Hermitian) to a row.
  void add_matrix_coeff(int row, int block, const ComplexMatrix &c,
                        double weight = 1.0);
  // For a complex functional f(X) = tr(F^+ X): adds weight*Re f to row_re
  // and weight*Im f to row_im (skipped when row_im < 0).
  void add_complex_coeff(int row_re, int row_im, int block,
                         const ComplexMatrix &f, double weight = 1.0);
  void add_objective(int block, const ComplexMatrix &c);
  void add_objective_scalar(int block, double coeff);

  ComplexMatrix extract_matrix(const RealVector &x, int block) const;
  double extract_scalar(const RealVector &x, int block) const;
};

//============================================================================
// Operator-splitting solver
//============================================================================

struct SolveOptions {
  double tol = 1e-7;
  int max_iter = 200000;
  double rho = 1.0;
  double over_relax = 1.6;
  bool adaptive_rho = true;
  bool verbose = false;
};

struct SdpSolution {
  enum class Status { optimal, infeasible, max_iter };
  Status status = Status::max_iter;
  double objective = 0.0;
  RealVector x;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
};

// Warm-start state carried between related solves (e.g. an epsilon sweep
// over a fixed constraint matrix).
struct SdpState {
  RealVector z, u;
  double rho = 0.0;
};

SdpSolution solve_sdp(const SdpProblem &problem, const SolveOptions &opts = {},
                      SdpState *state = nullptr);

}  // namespace lindprog

#endif  // LINDPROG_SDP_HPP_
