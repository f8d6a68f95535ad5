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

#ifndef LINDPROG_PROGRAMMABILITY_HPP_
#define LINDPROG_PROGRAMMABILITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "lindprog/channels.hpp"
#include "lindprog/dynamics.hpp"
#include "lindprog/program_family.hpp"

namespace lindprog {

//============================================================================
// Pauli strings
//============================================================================

// Labels are lexicographic over {I,X,Y,Z}^n with digit order I<X<Y<Z and
// the first qubit most significant; label 0 is the identity string.
Index pauli_label_count(int n_qubits);
std::string pauli_label_name(int n_qubits, Index label);
ComplexMatrix pauli_string(int n_qubits, Index label);
// Label of the operator product P_a P_b (phases dropped).
Index pauli_label_product(int n_qubits, Index a, Index b);

//============================================================================
// Q-matrix machinery
//============================================================================

// Transition-rate generator in column convention: off-diagonals >= 0 and
// every column sums to zero.
struct QMatrix {
  RealMatrix q;
  Index size() const { return q.rows(); }
};

// Throws when the Q-matrix conditions are violated beyond `tol`.
void validate_qmatrix(const QMatrix &q, double tol = 1e-10);

// Q-matrix of a fully dissipative Lindbladian whose jumps are (multiples
// of) Pauli strings: L o P_k-conjugation = sum_j q_{jk} P_j-conjugation.
// Scalar factors on jumps fold into effective rates. Requires H = 0.
QMatrix pauli_qmatrix(const Lindbladian &lin);

// p(t) = e^{Qt} p0; p0 must be a probability vector.
RealVector classical_propagate(const QMatrix &q, const RealVector &p0,
                               double t);

// Measure-and-prepare protocol over the 4^n Pauli conjugations with the
// diagonal program pi_t = sum_j p_j(t) |j><j|.
struct PauliProgramProtocol {
  ProcessorMap processor;
  ProgramStateFamily program;
  std::vector<ChoiOperator> channels;
  QMatrix q;
  RealVector weights(double t) const;
};
PauliProgramProtocol pauli_program_protocol(const Lindbladian &lin);

// Least-squares expansion L o E_i = sum_j q_{ji} E_j over a user-supplied
// channel set; empty when the residual exceeds tolerance or the Q-matrix
// sign structure fails. Throws on a linearly dependent channel set.
std::optional<QMatrix> polytope_membership_qmatrix(
    const Lindbladian &lin, const std::vector<ChoiOperator> &channels,
    double residual_tol = 1e-9, double sign_tol = 1e-10);

//============================================================================
// Structural CPTP-programmability test
//============================================================================

// L(rho) = alpha (E(rho) - rho) with E a channel.
struct CptpForm {
  double alpha = 0.0;
  ChoiOperator channel_choi;
};

struct CptpFormOptions {
  double alpha_max_factor = 1e3;  // search range (0, factor * ||bold L||_F]
  int iterations = 60;
  double psd_tol = 1e-9;
};

// Existence of the alpha(E - I) form; required for CPTP-programmability.
// Feasibility in alpha is an interval (lambda_min of the shifted Choi is
// concave), located by a golden-section maximum followed by bisection to
// the minimal feasible alpha. Absence is a valid answer.
std::optional<CptpForm> cptp_form_check(const Lindbladian &lin,
                                        const CptpFormOptions &opts = {});

//============================================================================
// Symmetry and port-based obstruction
//============================================================================

// True iff [bold L, U (x) conj(U)] vanishes (Frobenius) for every supplied
// unitary; row-major vectorization makes U (x) conj(U) the Liouville form
// of the conjugation.
bool covariance_check(const Lindbladian &lin,
                      const std::vector<ComplexMatrix> &unitaries,
                      double tol = 1e-9);

enum class PortVerdict { obstructed, inconclusive };

struct PortObstruction {
  PortVerdict verdict = PortVerdict::inconclusive;
  bool unique_steady_state = false;
  double min_eigenvalue = 0.0;  // of the steady state, when unique
};

// "obstructed" when the steady state is unique with an eigenvalue below
// 1/d^2 - tol; then the Choi-program cost is strictly positive.
PortObstruction port_obstruction_check(const Lindbladian &lin,
                                       double tol = 1e-9);

}  // namespace lindprog

#endif  // LINDPROG_PROGRAMMABILITY_HPP_
