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

#include "lindprog/dynamics.hpp"

#include <cmath>

namespace lindprog {

Lindbladian make_lindbladian(Index dim, const ComplexMatrix &hamiltonian,
                             std::vector<Lindbladian::Jump> jumps) {
  Lindbladian lin;
  lin.dim = dim;
  if (hamiltonian.size() == 0) {
    lin.hamiltonian = czeros(dim, dim);
  } else {
    if (hamiltonian.rows() != dim || hamiltonian.cols() != dim)
      throw std::invalid_argument("make_lindbladian: Hamiltonian dimension");
    double scale = std::max(1.0, hamiltonian.cwiseAbs().maxCoeff());
    if ((hamiltonian - dagger(hamiltonian)).cwiseAbs().maxCoeff() >
        1e-12 * scale)
      throw std::invalid_argument(
          "make_lindbladian: Hamiltonian must be Hermitian");
    lin.hamiltonian = hamiltonian;
  }
  for (auto &j : jumps) {
    if (j.rate < 0)
      throw std::invalid_argument("make_lindbladian: negative jump rate");
    if (j.op.rows() != dim || j.op.cols() != dim)
      throw std::invalid_argument("make_lindbladian: jump dimension");
    if (j.rate == 0.0) continue;  // degenerate jumps are dropped
    lin.jumps.push_back(std::move(j));
  }
  return lin;
}

Lindbladian zero_lindbladian(Index dim) {
  return make_lindbladian(dim, czeros(dim, dim), {});
}

Lindbladian emission_lindbladian(double gamma) {
  ComplexMatrix sm = czeros(2, 2);
  sm(0, 1) = 1.0;  // |0><1|
  return make_lindbladian(2, czeros(2, 2), {{gamma, sm}});
}

Lindbladian dephasing_lindbladian(double gamma) {
  return make_lindbladian(2, czeros(2, 2), {{gamma, pauli_z()}});
}

Lindbladian isotropic_depolarizing_lindbladian(double gamma) {
  return make_lindbladian(
      2, czeros(2, 2),
      {{gamma, pauli_x()}, {gamma, pauli_y()}, {gamma, pauli_z()}});
}

Lindbladian swap_dephasing_lindbladian(double lambda) {
  ComplexMatrix swap = czeros(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;

  // Bell projectors; D_B - I is the dissipator with one jump per projector.
  const double s = 1.0 / std::sqrt(2.0);
  ComplexVector phi_p(4), phi_m(4), psi_p(4), psi_m(4);
  phi_p << s, 0, 0, s;
  phi_m << s, 0, 0, -s;
  psi_p << 0, s, s, 0;
  psi_m << 0, s, -s, 0;

  std::vector<Lindbladian::Jump> jumps;
  for (const auto &v : {phi_p, phi_m, psi_p, psi_m}) {
    ComplexMatrix p = v * v.adjoint();
    jumps.push_back({lambda, p});
  }
  return make_lindbladian(4, -swap, std::move(jumps));
}

ComplexMatrix lindblad_apply(const Lindbladian &lin, const ComplexMatrix &rho) {
  const Complex i(0, 1);
  ComplexMatrix out =
      -i * (lin.hamiltonian * rho - rho * lin.hamiltonian);
  for (const auto &j : lin.jumps) {
    ComplexMatrix ldl = dagger(j.op) * j.op;
    out += j.rate * (j.op * rho * dagger(j.op) -
                     0.5 * (ldl * rho + rho * ldl));
  }
  return out;
}

LiouvilleOperator build_liouville(const Lindbladian &lin) {
  const Index d = lin.dim;
  const Complex i(0, 1);
  ComplexMatrix id = identity(d);
  ComplexMatrix l = -i * (kron(lin.hamiltonian, id) -
                          kron(id, lin.hamiltonian.transpose()));
  for (const auto &j : lin.jumps) {
    ComplexMatrix ldl = dagger(j.op) * j.op;
    l += j.rate * (kron(j.op, j.op.conjugate()) -
                   0.5 * kron(ldl, id) -
                   0.5 * kron(id, ldl.transpose()));
  }
  return LiouvilleOperator{d, std::move(l)};
}

ComplexMatrix evolve_state(const Lindbladian &lin, const ComplexMatrix &rho0,
                           double t) {
  if (t < 0) throw std::invalid_argument("evolve_state: t must be >= 0");
  if (rho0.rows() != lin.dim || rho0.cols() != lin.dim)
    throw std::invalid_argument("evolve_state: state dimension mismatch");
  LiouvilleOperator l = build_liouville(lin);
  ComplexMatrix prop = expm(t * l.matrix);
  return devectorize(prop * vectorize(rho0), lin.dim, lin.dim);
}

ChoiOperator semigroup_choi(const Lindbladian &lin, double t) {
  if (t < 0) throw std::invalid_argument("semigroup_choi: t must be >= 0");
  LiouvilleOperator l = build_liouville(lin);
  LiouvilleOperator k{lin.dim, expm(t * l.matrix)};
  return liouville_to_choi(k);
}

ChoiOperator liouville_to_choi(const LiouvilleOperator &k) {
  if (k.matrix.rows() != k.dim * k.dim || k.matrix.cols() != k.dim * k.dim)
    throw std::invalid_argument("liouville_to_choi: size mismatch");
  const Index d = k.dim;
  // J[(i,a),(j,b)] = K[(a,b),(i,j)].
  ComplexMatrix out(d * d, d * d);
  for (Index i = 0; i < d; ++i)
    for (Index a = 0; a < d; ++a)
      for (Index j = 0; j < d; ++j)
        for (Index b = 0; b < d; ++b)
          out(i * d + a, j * d + b) = k.matrix(a * d + b, i * d + j);
  return ChoiOperator{d, d, std::move(out)};
}

LiouvilleOperator choi_to_liouville(const ChoiOperator &j) {
  if (j.dim_in != j.dim_out)
    throw std::invalid_argument("choi_to_liouville: map must be square");
  const Index d = j.dim_in;
  if (j.matrix.rows() != d * d || j.matrix.cols() != d * d)
    throw std::invalid_argument("choi_to_liouville: size mismatch");
  // K[(a,b),(i,j)] = J[(i,a),(j,b)].
  ComplexMatrix out(d * d, d * d);
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index i = 0; i < d; ++i)
        for (Index j2 = 0; j2 < d; ++j2)
          out(a * d + b, i * d + j2) = j.matrix(i * d + a, j2 * d + b);
  return LiouvilleOperator{d, std::move(out)};
}

SteadyStates steady_states(const Lindbladian &lin, double tol) {
  if (tol <= 0) throw std::invalid_argument("steady_states: tol must be > 0");
  const Index d = lin.dim;
  LiouvilleOperator l = build_liouville(lin);
  std::vector<ComplexVector> ker = null_space(l.matrix);

  SteadyStates out;
  out.kernel_dim = static_cast<int>(ker.size());

  // Lindbladians are Hermiticity-preserving, so Hermitized kernel vectors
  // stay in the kernel.
  std::vector<ComplexMatrix> herm;
  for (const auto &v : ker) {
    ComplexMatrix x = devectorize(v, d, d);
    for (ComplexMatrix h :
         {hermitize(x), hermitize(Complex(0, -1) * x)}) {
      if (h.cwiseAbs().maxCoeff() < 1e-12) continue;
      // Orthogonalize against what we already kept.
      for (const auto &g : herm) {
        Complex ov = (dagger(g) * h).trace() / (dagger(g) * g).trace();
        h -= ov * g;
      }
      if (h.cwiseAbs().maxCoeff() > 1e-10) herm.push_back(h);
    }
  }

  auto push_state = [&](const ComplexMatrix &cand) {
    if (trace_norm(lindblad_apply(lin, cand)) > tol) return;
    for (const auto &s : out.states)
      if ((s - cand).cwiseAbs().maxCoeff() < 1e-8) return;
    out.states.push_back(cand);
  };

  // The maximally mixed state first when it is steady (covers the unital
  // and L = 0 cases).
  ComplexMatrix mixed = identity(d) / double(d);
  if (trace_norm(lindblad_apply(lin, mixed)) <= tol &&
      out.kernel_dim > 0)
    out.states.push_back(mixed);

  for (const auto &h : herm) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    RealVector lam = es.eigenvalues();
    double lmin = lam.minCoeff(), lmax = lam.maxCoeff();
    bool found = false;
    if (lmin >= -1e-10 * std::max(1.0, lmax) && h.trace().real() > 1e-12) {
      push_state(h / h.trace().real());
      found = true;
    } else if (lmax <= 1e-10 * std::max(1.0, -lmin) &&
               h.trace().real() < -1e-12) {
      push_state(-h / (-h.trace().real()));
      found = true;
    } else {
      // Indefinite direction: its eigenprojectors may still be steady
      // (kernels of classical-like generators decompose this way).
      ComplexMatrix v = es.eigenvectors();
      for (Index i = 0; i < lam.size(); ++i) {
        if (std::abs(lam(i)) < 1e-10) continue;
        ComplexMatrix proj =
            v.col(i) * v.col(i).adjoint();
        size_t before = out.states.size();
        push_state(proj);
        if (out.states.size() > before) found = true;
      }
    }
    if (!found) ++out.non_state_dims;
  }
  return out;
}

bool is_cptp(const ChoiOperator &j, double tol) {
  if (tol <= 0) throw std::invalid_argument("is_cptp: tol must be > 0");
  if (!is_hermitian(j.matrix, tol)) return false;
  if (min_eigenvalue(hermitize(j.matrix)) < -tol) return false;
  SystemDims dims{j.dim_in, j.dim_out};
  ComplexMatrix red = partial_trace(j.matrix, dims, {0});
  return (red - identity(j.dim_in)).cwiseAbs().maxCoeff() <= tol;
}

bool is_hptp(const ChoiOperator &j, double tol) {
  if (tol <= 0) throw std::invalid_argument("is_hptp: tol must be > 0");
  if (!is_hermitian(j.matrix, tol)) return false;
  SystemDims dims{j.dim_in, j.dim_out};
  ComplexMatrix red = partial_trace(j.matrix, dims, {0});
  return (red - identity(j.dim_in)).cwiseAbs().maxCoeff() <= tol;
}

ChoiOperator choi_of_identity(Index d) {
  return ChoiOperator{d, d, double(d) * max_entangled_projector(d)};
}

}  // namespace lindprog
