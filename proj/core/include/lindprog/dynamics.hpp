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

#ifndef LINDPROG_DYNAMICS_HPP_
#define LINDPROG_DYNAMICS_HPP_

#include <vector>

#include "lindprog/matcore.hpp"

namespace lindprog {

//============================================================================
// Generators and representations
//============================================================================

// Markovian generator: Hermitian Hamiltonian plus weighted jump operators.
// d rho/dt = -i[H, rho] + sum_j rate_j (L_j rho L_j^+ - {L_j^+ L_j, rho}/2).
struct Lindbladian {
  struct Jump {
    double rate = 0.0;
    ComplexMatrix op;
  };

  Index dim = 0;
  ComplexMatrix hamiltonian;
  std::vector<Jump> jumps;
};

// Validating constructor: checks Hermiticity (1e-12), nonnegative rates,
// and drops zero-rate jumps.
Lindbladian make_lindbladian(Index dim, const ComplexMatrix &hamiltonian,
                             std::vector<Lindbladian::Jump> jumps);

// Canonical models used throughout.
Lindbladian zero_lindbladian(Index dim);
Lindbladian emission_lindbladian(double gamma);
Lindbladian dephasing_lindbladian(double gamma);
Lindbladian isotropic_depolarizing_lindbladian(double gamma);
// Exchange plus collective Bell-basis dephasing on two qubits (the SWAP
// coherent part enters as H = -S so the commutator term is +i[S, .]).
Lindbladian swap_dephasing_lindbladian(double lambda);

// The d^2 x d^2 superoperator acting on vectorized operators.
struct LiouvilleOperator {
  Index dim = 0;
  ComplexMatrix matrix;
};

// Choi operator with the trace-d normalization: J(N) = d (I (x) N)(Phi),
// i.e. J = sum_ij |i><j| (x) N(|i><j|); tr J = dim_in for TP maps.
struct ChoiOperator {
  Index dim_in = 0;
  Index dim_out = 0;
  ComplexMatrix matrix;
};

//============================================================================
// Operations
//============================================================================

// Direct master-equation right-hand side L(rho).
ComplexMatrix lindblad_apply(const Lindbladian &lin, const ComplexMatrix &rho);

// bold L = -i(H (x) I - I (x) H^T)
//          + sum_k rate_k (L (x) conj(L) - (I (x) L^+L)/2 - ((L^+L)^T (x) I)/2)
LiouvilleOperator build_liouville(const Lindbladian &lin);

// rho(t) = devec(exp(t bold L) vec(rho0)); requires a density-matrix input
// and t >= 0.
ComplexMatrix evolve_state(const Lindbladian &lin, const ComplexMatrix &rho0,
                           double t);

// Choi operator of e^{tL}.
ChoiOperator semigroup_choi(const Lindbladian &lin, double t);

// Reshuffle between the Liouville matrix K and the Choi matrix J:
// J[(i,a),(j,b)] = K[(a,b),(i,j)]. The two directions are mutually inverse.
ChoiOperator liouville_to_choi(const LiouvilleOperator &k);
LiouvilleOperator choi_to_liouville(const ChoiOperator &j);

// Kernel of bold L, Hermitized and searched for density-matrix
// representatives. Kernel directions with no PSD representative are counted
// separately.
struct SteadyStates {
  std::vector<ComplexMatrix> states;
  int kernel_dim = 0;      // complex dimension of ker(bold L)
  int non_state_dims = 0;  // Hermitian kernel directions with no state found
  bool unique() const { return kernel_dim == 1 && states.size() == 1; }
};
SteadyStates steady_states(const Lindbladian &lin, double tol = 1e-9);

bool is_cptp(const ChoiOperator &j, double tol = 1e-9);
bool is_hptp(const ChoiOperator &j, double tol = 1e-9);

// Choi of the identity channel (= d * max entangled projector).
ChoiOperator choi_of_identity(Index d);

}  // namespace lindprog

#endif  // LINDPROG_DYNAMICS_HPP_
