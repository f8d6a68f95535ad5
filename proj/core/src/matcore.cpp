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

#include "lindprog/matcore.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace lindprog {

namespace {

void check_square(const ComplexMatrix &m, const char *what) {
  if (m.rows() != m.cols())
    throw std::invalid_argument(std::string(what) + ": matrix must be square");
}

void check_dims(const ComplexMatrix &m, const SystemDims &dims,
                const char *what) {
  check_square(m, what);
  if (dims.total() != m.rows())
    throw std::invalid_argument(std::string(what) +
                                ": subsystem dimensions do not match matrix");
}

// Decomposes a flat index into per-subsystem digits (most significant
// factor first, matching kron ordering).
void unpack_index(Index idx, const std::vector<Index> &dims,
                  std::vector<Index> &out) {
  const size_t n = dims.size();
  out.resize(n);
  for (size_t k = n; k-- > 0;) {
    out[k] = idx % dims[k];
    idx /= dims[k];
  }
}

Index pack_index(const std::vector<Index> &digits,
                 const std::vector<Index> &dims) {
  Index idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}

}  // namespace

//============================================================================
// Vectorization and Kronecker products
//============================================================================

ComplexVector vectorize(const ComplexMatrix &m) {
  // Row-major storage makes the flat view the row-stacked vector.
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix devectorize(const ComplexVector &v, Index rows, Index cols) {
  if (v.size() != rows * cols)
    throw std::invalid_argument("devectorize: length != rows*cols");
  ComplexMatrix m(rows, cols);
  Eigen::Map<ComplexVector>(m.data(), m.size()) = v;
  return m;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix permute_systems(const ComplexMatrix &m, const SystemDims &dims,
                              const std::vector<int> &perm) {
  check_dims(m, dims, "permute_systems");
  if (perm.size() != dims.count())
    throw std::invalid_argument("permute_systems: permutation size mismatch");

  std::vector<Index> new_dims(dims.count());
  for (size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] < 0 || static_cast<size_t>(perm[k]) >= dims.count())
      throw std::invalid_argument("permute_systems: invalid permutation entry");
    new_dims[k] = dims.factors[perm[k]];
  }

  const Index d = m.rows();
  ComplexMatrix out(d, d);
  std::vector<Index> rp(dims.count()), cp(dims.count());
  for (Index r = 0; r < d; ++r) {
    unpack_index(r, new_dims, rp);
    for (Index c = 0; c < d; ++c) {
      unpack_index(c, new_dims, cp);
      // Entry (r, c) of the permuted matrix pulls from the source indices
      // obtained by scattering digits back to their original slots.
      std::vector<Index> src_r(dims.count()), src_c(dims.count());
      for (size_t k = 0; k < perm.size(); ++k) {
        src_r[perm[k]] = rp[k];
        src_c[perm[k]] = cp[k];
      }
      out(r, c) = m(pack_index(src_r, dims.factors),
                    pack_index(src_c, dims.factors));
    }
  }
  return out;
}

//============================================================================
// Matrix functions and spectra
//============================================================================

ComplexMatrix expm(const ComplexMatrix &m) {
  check_square(m, "expm");
  const Index d = m.rows();
  if (d == 0) return m;

  const double scale = m.cwiseAbs().maxCoeff();
  const ComplexMatrix comm = m * dagger(m) - dagger(m) * m;
  if (scale == 0.0) return identity(d);

  if (comm.cwiseAbs().maxCoeff() < 1e-12 * scale * scale) {
    // Normal matrix: the Schur form is diagonal with a unitary basis, so
    // exponentiating the spectrum is exact.
    Eigen::ComplexSchur<ComplexMatrix> schur(m);
    if (schur.info() == Eigen::Success) {
      ComplexMatrix t = schur.matrixT();
      ComplexMatrix u = schur.matrixU();
      ComplexMatrix off = t;
      for (Index i = 0; i < d; ++i) off(i, i) = 0;
      if (off.cwiseAbs().maxCoeff() < 1e-12 * scale) {
        ComplexVector elam(d);
        for (Index i = 0; i < d; ++i) elam(i) = std::exp(t(i, i));
        return u * elam.asDiagonal() * dagger(u);
      }
    }
  }
  return m.exp();
}

std::vector<ComplexVector> null_space(const ComplexMatrix &m, double tol) {
  check_square(m, "null_space");
  Eigen::JacobiSVD<ComplexMatrix> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto &sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  if (tol <= 0) tol = 1e-9;
  const double cut = tol * (smax > 0 ? smax : 1.0);

  std::vector<ComplexVector> basis;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= cut) basis.push_back(svd.matrixV().col(i));
  return basis;
}

//============================================================================
// Partial operations
//============================================================================

ComplexMatrix partial_trace(const ComplexMatrix &m, const SystemDims &dims,
                            const std::vector<int> &keep) {
  check_dims(m, dims, "partial_trace");
  const size_t n = dims.count();
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || static_cast<size_t>(k) >= n)
      throw std::invalid_argument("partial_trace: invalid subsystem index");
    kept[k] = true;
  }

  std::vector<Index> keep_dims, trace_dims;
  std::vector<size_t> keep_pos, trace_pos;
  for (size_t k = 0; k < n; ++k) {
    if (kept[k]) {
      keep_dims.push_back(dims.factors[k]);
      keep_pos.push_back(k);
    } else {
      trace_dims.push_back(dims.factors[k]);
      trace_pos.push_back(k);
    }
  }
  Index dk = 1, dt = 1;
  for (Index f : keep_dims) dk *= f;
  for (Index f : trace_dims) dt *= f;

  ComplexMatrix out = czeros(dk, dk);
  std::vector<Index> ri(n), ci(n), rk, ck, tt;
  for (Index r = 0; r < dk; ++r) {
    unpack_index(r, keep_dims, rk);
    for (Index c = 0; c < dk; ++c) {
      unpack_index(c, keep_dims, ck);
      Complex acc = 0;
      for (Index t = 0; t < dt; ++t) {
        unpack_index(t, trace_dims, tt);
        for (size_t k = 0; k < keep_pos.size(); ++k) {
          ri[keep_pos[k]] = rk[k];
          ci[keep_pos[k]] = ck[k];
        }
        for (size_t k = 0; k < trace_pos.size(); ++k) {
          ri[trace_pos[k]] = tt[k];
          ci[trace_pos[k]] = tt[k];
        }
        acc += m(pack_index(ri, dims.factors), pack_index(ci, dims.factors));
      }
      out(r, c) = acc;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, const SystemDims &dims,
                                int subsystem) {
  check_dims(m, dims, "partial_transpose");
  if (subsystem < 0 || static_cast<size_t>(subsystem) >= dims.count())
    throw std::invalid_argument("partial_transpose: invalid subsystem index");

  const Index d = m.rows();
  ComplexMatrix out(d, d);
  std::vector<Index> ri, ci;
  for (Index r = 0; r < d; ++r) {
    unpack_index(r, dims.factors, ri);
    for (Index c = 0; c < d; ++c) {
      unpack_index(c, dims.factors, ci);
      std::vector<Index> sr = ri, sc = ci;
      std::swap(sr[subsystem], sc[subsystem]);
      out(r, c) = m(pack_index(sr, dims.factors), pack_index(sc, dims.factors));
    }
  }
  return out;
}

//============================================================================
// Norms, fidelity, predicates
//============================================================================

double trace_norm(const ComplexMatrix &m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double operator_norm(const ComplexMatrix &m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

std::pair<double, double> schatten_norms(const ComplexMatrix &m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto &sv = svd.singularValues();
  return {sv.sum(), sv.size() ? sv(0) : 0.0};
}

double frobenius_norm(const ComplexMatrix &m) { return m.norm(); }

namespace {

// PSD square root with eigenvalue clipping; negatives below -tol reject.
ComplexMatrix psd_sqrt(const ComplexMatrix &rho, double tol,
                       const char *what) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
  ComplexMatrix v = es.eigenvectors();
  RealVector lam = es.eigenvalues();
  ComplexVector slam(lam.size());
  for (Index i = 0; i < lam.size(); ++i) {
    if (lam(i) < -tol)
      throw std::invalid_argument(std::string(what) +
                                  ": input is not positive semidefinite");
    slam(i) = std::sqrt(std::max(lam(i), 0.0));
  }
  return v * slam.asDiagonal() * dagger(v);
}

}  // namespace

double fidelity(const ComplexMatrix &rho, const ComplexMatrix &sigma,
                double tol) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("fidelity: dimension mismatch");
  if (!is_hermitian(rho, 10 * tol) || !is_hermitian(sigma, 10 * tol))
    throw std::invalid_argument("fidelity: inputs must be Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 10 * tol ||
      std::abs(sigma.trace().real() - 1.0) > 10 * tol)
    throw std::invalid_argument("fidelity: inputs must have unit trace");

  ComplexMatrix sr = psd_sqrt(rho, tol, "fidelity");
  ComplexMatrix inner = sr * sigma * sr;
  ComplexMatrix s = psd_sqrt(hermitize(inner), tol, "fidelity");
  double t = s.trace().real();
  return t * t;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - dagger(m)).cwiseAbs().maxCoeff() <= tol;
}

ComplexMatrix dagger(const ComplexMatrix &m) { return m.adjoint(); }

ComplexMatrix hermitize(const ComplexMatrix &m) {
  return 0.5 * (m + dagger(m));
}

double min_eigenvalue(const ComplexMatrix &m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  return es.eigenvalues().minCoeff();
}

//============================================================================
// Common constructions
//============================================================================

ComplexMatrix identity(Index d) { return ComplexMatrix::Identity(d, d); }

ComplexMatrix czeros(Index rows, Index cols) {
  return ComplexMatrix::Zero(rows, cols);
}

ComplexMatrix matrix_unit(Index d, Index i, Index j) {
  ComplexMatrix m = czeros(d, d);
  m(i, j) = 1.0;
  return m;
}

ComplexVector basis_state(Index d, Index i) {
  ComplexVector v = ComplexVector::Zero(d);
  v(i) = 1.0;
  return v;
}

ComplexMatrix pauli_i() { return identity(2); }

ComplexMatrix pauli_x() {
  ComplexMatrix m = czeros(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m = czeros(2, 2);
  m(0, 1) = Complex(0, -1);
  m(1, 0) = Complex(0, 1);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m = czeros(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

ComplexVector max_entangled_ket(Index d) {
  ComplexVector v = ComplexVector::Zero(d * d);
  for (Index i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(double(d));
  return v;
}

ComplexMatrix max_entangled_projector(Index d) {
  ComplexVector v = max_entangled_ket(d);
  return v * v.adjoint();
}

}  // namespace lindprog
