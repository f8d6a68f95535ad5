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

#include "lindprog/programmability.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace lindprog {

//============================================================================
// Pauli strings
//============================================================================

namespace {

int qubit_count(Index dim, const char *what) {
  Index d = dim;
  int n = 0;
  while (d > 1) {
    if (d % 2 != 0)
      throw std::invalid_argument(std::string(what) +
                                  ": dimension is not a power of two");
    d /= 2;
    ++n;
  }
  if (n == 0)
    throw std::invalid_argument(std::string(what) + ": dimension must be >= 2");
  return n;
}

// Single-qubit digit: 0=I, 1=X, 2=Y, 3=Z -> symplectic bits (x, z).
constexpr int kDigitX[4] = {0, 1, 1, 0};
constexpr int kDigitZ[4] = {0, 0, 1, 1};

int digit_from_bits(int x, int z) {
  if (x == 0 && z == 0) return 0;
  if (x == 1 && z == 0) return 1;
  if (x == 1 && z == 1) return 2;
  return 3;
}

}  // namespace

Index pauli_label_count(int n_qubits) {
  Index c = 1;
  for (int i = 0; i < n_qubits; ++i) c *= 4;
  return c;
}

std::string pauli_label_name(int n_qubits, Index label) {
  static const char names[] = "IXYZ";
  std::string s(n_qubits, 'I');
  for (int k = n_qubits - 1; k >= 0; --k) {
    s[k] = names[label % 4];
    label /= 4;
  }
  return s;
}

ComplexMatrix pauli_string(int n_qubits, Index label) {
  std::vector<Index> digits(n_qubits);
  for (int k = n_qubits - 1; k >= 0; --k) {
    digits[k] = label % 4;
    label /= 4;
  }
  ComplexMatrix out = identity(1);
  for (int k = 0; k < n_qubits; ++k) {
    ComplexMatrix p;
    switch (digits[k]) {
      case 0: p = pauli_i(); break;
      case 1: p = pauli_x(); break;
      case 2: p = pauli_y(); break;
      default: p = pauli_z(); break;
    }
    out = kron(out, p);
  }
  return out;
}

Index pauli_label_product(int n_qubits, Index a, Index b) {
  Index out = 0;
  Index mult = 1;
  for (int k = 0; k < n_qubits; ++k) {
    int da = (a / mult) % 4;
    int db = (b / mult) % 4;
    int x = kDigitX[da] ^ kDigitX[db];
    int z = kDigitZ[da] ^ kDigitZ[db];
    out += static_cast<Index>(digit_from_bits(x, z)) * mult;
    mult *= 4;
  }
  return out;
}

//============================================================================
// Q-matrix machinery
//============================================================================

void validate_qmatrix(const QMatrix &q, double tol) {
  const Index k = q.size();
  if (q.q.cols() != k) throw std::invalid_argument("QMatrix: not square");
  for (Index j = 0; j < k; ++j) {
    if (q.q(j, j) > tol)
      throw std::invalid_argument("QMatrix: positive diagonal entry");
    double col = 0;
    for (Index i = 0; i < k; ++i) {
      if (i != j && q.q(i, j) < -tol)
        throw std::invalid_argument("QMatrix: negative off-diagonal entry");
      col += q.q(i, j);
    }
    if (std::abs(col) > tol)
      throw std::invalid_argument("QMatrix: column does not sum to zero");
  }
}

QMatrix pauli_qmatrix(const Lindbladian &lin) {
  const int n = qubit_count(lin.dim, "pauli_qmatrix");
  if (lin.hamiltonian.cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("pauli_qmatrix: Hamiltonian must vanish");

  const Index nlab = pauli_label_count(n);
  const double d = static_cast<double>(lin.dim);

  // Identify each jump as a scalar multiple of one Pauli string.
  std::vector<std::pair<Index, double>> pauli_jumps;  // (label, eff. rate)
  for (const auto &jump : lin.jumps) {
    Index found = -1;
    Complex coeff = 0;
    for (Index l = 0; l < nlab; ++l) {
      Complex ov = (pauli_string(n, l) * jump.op).trace() / d;
      if (std::abs(ov) > 1e-12) {
        if (found >= 0)
          throw std::invalid_argument(
              "pauli_qmatrix: jump is not a single Pauli string");
        found = l;
        coeff = ov;
      }
    }
    if (found < 0)
      throw std::invalid_argument("pauli_qmatrix: zero jump operator");
    if ((jump.op - coeff * pauli_string(n, found)).cwiseAbs().maxCoeff() >
        1e-12)
      throw std::invalid_argument(
          "pauli_qmatrix: jump deviates from the Pauli basis");
    pauli_jumps.push_back({found, jump.rate * std::norm(coeff)});
  }

  QMatrix q{RealMatrix::Zero(nlab, nlab)};
  for (Index k = 0; k < nlab; ++k) {
    for (const auto &[lab, rate] : pauli_jumps) {
      q.q(pauli_label_product(n, lab, k), k) += rate;
      q.q(k, k) -= rate;
    }
  }
  validate_qmatrix(q);
  return q;
}

RealVector classical_propagate(const QMatrix &q, const RealVector &p0,
                               double t) {
  if (t < 0) throw std::invalid_argument("classical_propagate: t >= 0");
  if (p0.size() != q.size())
    throw std::invalid_argument("classical_propagate: size mismatch");
  if (p0.minCoeff() < -1e-12 || std::abs(p0.sum() - 1.0) > 1e-10)
    throw std::invalid_argument(
        "classical_propagate: p0 is not a probability vector");
  RealMatrix prop = (t * q.q).exp();
  return prop * p0;
}

RealVector PauliProgramProtocol::weights(double t) const {
  RealVector p0 = RealVector::Zero(q.size());
  p0(0) = 1.0;  // identity label: A_0 = I
  return classical_propagate(q, p0, t);
}

PauliProgramProtocol pauli_program_protocol(const Lindbladian &lin) {
  PauliProgramProtocol proto;
  proto.q = pauli_qmatrix(lin);
  const int n = qubit_count(lin.dim, "pauli_program_protocol");
  const Index nlab = pauli_label_count(n);

  for (Index l = 0; l < nlab; ++l)
    proto.channels.push_back(unitary_channel_choi(pauli_string(n, l)));
  proto.processor = measure_and_prepare_processor(proto.channels);

  QMatrix q = proto.q;
  proto.program.dim_p = nlab;
  proto.program.label = "pauli-mixture";
  proto.program.evaluator = [q, nlab](double t) {
    RealVector p0 = RealVector::Zero(nlab);
    p0(0) = 1.0;
    RealVector p = classical_propagate(q, p0, t);
    ComplexMatrix pi = czeros(nlab, nlab);
    for (Index j = 0; j < nlab; ++j) pi(j, j) = std::max(p(j), 0.0);
    return pi;
  };
  return proto;
}

std::optional<QMatrix> polytope_membership_qmatrix(
    const Lindbladian &lin, const std::vector<ChoiOperator> &channels,
    double residual_tol, double sign_tol) {
  const Index k = static_cast<Index>(channels.size());
  if (k == 0) throw std::invalid_argument("polytope_membership: empty set");
  const Index d = lin.dim;

  std::vector<ComplexMatrix> reps;  // Liouville representations
  for (const auto &c : channels) {
    if (c.dim_in != d || c.dim_out != d)
      throw std::invalid_argument("polytope_membership: channel dimension");
    reps.push_back(choi_to_liouville(c).matrix);
  }

  // Gram rank check for linear independence.
  ComplexMatrix gram(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j)
      gram(i, j) = (dagger(reps[i]) * reps[j]).trace();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ges(gram);
  if (ges.eigenvalues().minCoeff() <
      1e-10 * std::max(1.0, ges.eigenvalues().maxCoeff()))
    throw std::invalid_argument(
        "polytope_membership: channels are linearly dependent");

  ComplexMatrix boldl = build_liouville(lin).matrix;

  // Real least squares: stack Re/Im of vectorized Liouville matrices.
  const Index m = d * d * d * d;
  RealMatrix basis(2 * m, k);
  for (Index j = 0; j < k; ++j) {
    ComplexVector v = vectorize(reps[j]);
    basis.col(j).head(m) = v.real();
    basis.col(j).tail(m) = v.imag();
  }
  Eigen::ColPivHouseholderQR<RealMatrix> qr(basis);

  QMatrix q{RealMatrix::Zero(k, k)};
  for (Index i = 0; i < k; ++i) {
    ComplexVector target = vectorize(ComplexMatrix(boldl * reps[i]));
    RealVector rhs(2 * m);
    rhs.head(m) = target.real();
    rhs.tail(m) = target.imag();
    RealVector sol = qr.solve(rhs);
    double residual = (basis * sol - rhs).norm();
    if (residual > residual_tol * std::max(1.0, rhs.norm()))
      return std::nullopt;
    q.q.col(i) = sol;
  }

  // Sign structure: tolerate tiny negatives, then repair the diagonal so
  // columns sum to zero exactly.
  for (Index j = 0; j < q.size(); ++j) {
    for (Index i = 0; i < q.size(); ++i) {
      if (i == j) continue;
      if (q.q(i, j) < -sign_tol) return std::nullopt;
      q.q(i, j) = std::max(q.q(i, j), 0.0);
    }
    double off = 0;
    for (Index i = 0; i < q.size(); ++i)
      if (i != j) off += q.q(i, j);
    if (std::abs(q.q(j, j) + off) > 1e-6 * std::max(1.0, std::abs(off)))
      return std::nullopt;
    q.q(j, j) = -off;
  }
  validate_qmatrix(q);
  return q;
}

//============================================================================
// Structural CPTP-programmability test
//============================================================================

std::optional<CptpForm> cptp_form_check(const Lindbladian &lin,
                                        const CptpFormOptions &opts) {
  const Index d = lin.dim;
  ComplexMatrix boldl = build_liouville(lin).matrix;
  const double lnorm = frobenius_norm(boldl);
  ComplexMatrix ji = choi_of_identity(d).matrix;

  if (lnorm < 1e-14) {
    // L = 0: the zero-rate form with E = I.
    return CptpForm{0.0, choi_of_identity(d)};
  }

  ComplexMatrix jl = liouville_to_choi(LiouvilleOperator{d, boldl}).matrix;
  jl = hermitize(jl);  // generators are Hermiticity-preserving

  // g(alpha) = lambda_min(alpha J(I) + J(L)) is concave; the feasible set
  // {g >= -tol * alpha} is an interval.
  auto g = [&](double alpha) {
    return min_eigenvalue(alpha * ji + jl);
  };
  auto feasible = [&](double alpha) {
    return g(alpha) >= -opts.psd_tol * alpha;
  };

  const double alpha_max = opts.alpha_max_factor * lnorm;

  // Golden-section maximum of the concave g.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = alpha_max * 1e-12, hi = alpha_max;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double g1 = g(x1), g2 = g(x2);
  for (int it = 0; it < opts.iterations; ++it) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + gr * (hi - lo);
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - gr * (hi - lo);
      g1 = g(x1);
    }
  }
  double alpha_star = 0.5 * (lo + hi);
  if (!feasible(alpha_star)) {
    if (feasible(alpha_max))
      alpha_star = alpha_max;
    else
      return std::nullopt;
  }

  // Bisect down to the left edge of the feasible interval, keeping the
  // feasible endpoint.
  double bad = alpha_max * 1e-12, good = alpha_star;
  if (feasible(bad)) {
    good = bad;
  } else {
    for (int it = 0; it < opts.iterations; ++it) {
      double mid = 0.5 * (bad + good);
      if (feasible(mid))
        good = mid;
      else
        bad = mid;
    }
  }

  ComplexMatrix je = ji + jl / good;
  return CptpForm{good, ChoiOperator{d, d, std::move(je)}};
}

//============================================================================
// Symmetry and port-based obstruction
//============================================================================

bool covariance_check(const Lindbladian &lin,
                      const std::vector<ComplexMatrix> &unitaries,
                      double tol) {
  ComplexMatrix boldl = build_liouville(lin).matrix;
  for (const auto &u : unitaries) {
    if (u.rows() != lin.dim || u.cols() != lin.dim)
      throw std::invalid_argument("covariance_check: unitary dimension");
    if ((dagger(u) * u - identity(lin.dim)).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("covariance_check: input is not unitary");
    ComplexMatrix conj_rep = kron(u, u.conjugate());
    if (frobenius_norm(boldl * conj_rep - conj_rep * boldl) > tol)
      return false;
  }
  return true;
}

PortObstruction port_obstruction_check(const Lindbladian &lin, double tol) {
  PortObstruction out;
  SteadyStates ss = steady_states(lin);
  out.unique_steady_state = ss.unique();
  if (!out.unique_steady_state) return out;

  out.min_eigenvalue = min_eigenvalue(ss.states.front());
  const double d = static_cast<double>(lin.dim);
  if (out.min_eigenvalue < 1.0 / (d * d) - tol)
    out.verdict = PortVerdict::obstructed;
  return out;
}

}  // namespace lindprog
