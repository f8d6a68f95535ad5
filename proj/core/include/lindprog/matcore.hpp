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

#ifndef LINDPROG_MATCORE_HPP_
#define LINDPROG_MATCORE_HPP_

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace lindprog {

using Complex = std::complex<double>;

// Dense complex matrices are stored row-major so that vectorize() stacks
// rows, matching the |i><j| -> |i>|j> convention used throughout.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

//============================================================================
// Tensor bookkeeping
//============================================================================

// Ordered subsystem dimensions annotating a square matrix of size
// prod(factors).
struct SystemDims {
  std::vector<Index> factors;

  SystemDims() = default;
  SystemDims(std::initializer_list<Index> f) : factors(f) {}
  explicit SystemDims(std::vector<Index> f) : factors(std::move(f)) {}

  Index total() const {
    Index p = 1;
    for (Index f : factors) p *= f;
    return p;
  }
  size_t count() const { return factors.size(); }
};

//============================================================================
// Vectorization and Kronecker products
//============================================================================

// Row-major stacking: vec(|i><j|) = e_{i*cols + j}.
ComplexVector vectorize(const ComplexMatrix &m);
ComplexMatrix devectorize(const ComplexVector &v, Index rows, Index cols);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

// Reorders the tensor factors of a square matrix: entry indices are
// decomposed according to `dims` and factor k of the result is factor
// perm[k] of the input.
ComplexMatrix permute_systems(const ComplexMatrix &m, const SystemDims &dims,
                              const std::vector<int> &perm);

//============================================================================
// Matrix functions and spectra
//============================================================================

// Matrix exponential. Normal matrices (||MM^+ - M^+M|| < 1e-12) go through
// an eigendecomposition; everything else through scaling-and-squaring Pade.
ComplexMatrix expm(const ComplexMatrix &m);

// Orthonormal basis of the (right) null space, SVD-based. Singular values
// below tol*sigma_max are treated as zero; tol <= 0 selects the 1e-9
// default.
std::vector<ComplexVector> null_space(const ComplexMatrix &m,
                                      double tol = -1.0);

//============================================================================
// Partial operations
//============================================================================

// Traces out every subsystem not listed in `keep`; kept factors stay in
// their original order.
ComplexMatrix partial_trace(const ComplexMatrix &m, const SystemDims &dims,
                            const std::vector<int> &keep);

ComplexMatrix partial_transpose(const ComplexMatrix &m, const SystemDims &dims,
                                int subsystem);

//============================================================================
// Norms, fidelity, predicates
//============================================================================

double trace_norm(const ComplexMatrix &m);
double operator_norm(const ComplexMatrix &m);
std::pair<double, double> schatten_norms(const ComplexMatrix &m);
double frobenius_norm(const ComplexMatrix &m);

// Uhlmann fidelity tr^2 sqrt(sqrt(rho) sigma sqrt(rho)). Inputs must be PSD
// with unit trace up to `tol`; small negative eigenvalues above -tol are
// clipped to zero.
double fidelity(const ComplexMatrix &rho, const ComplexMatrix &sigma,
                double tol = 1e-9);

bool is_hermitian(const ComplexMatrix &m, double tol = 1e-12);
ComplexMatrix dagger(const ComplexMatrix &m);
ComplexMatrix hermitize(const ComplexMatrix &m);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix &m);

//============================================================================
// Common constructions
//============================================================================

ComplexMatrix identity(Index d);
ComplexMatrix czeros(Index rows, Index cols);
ComplexMatrix matrix_unit(Index d, Index i, Index j);
ComplexVector basis_state(Index d, Index i);

ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// |Phi> = sum_i |ii>/sqrt(d) and its projector.
ComplexVector max_entangled_ket(Index d);
ComplexMatrix max_entangled_projector(Index d);

}  // namespace lindprog

#endif  // LINDPROG_MATCORE_HPP_
