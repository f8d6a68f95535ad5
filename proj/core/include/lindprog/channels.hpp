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

#ifndef LINDPROG_CHANNELS_HPP_
#define LINDPROG_CHANNELS_HPP_

#include <functional>
#include <vector>

#include "lindprog/dynamics.hpp"
#include "lindprog/matcore.hpp"

namespace lindprog {

//============================================================================
// Kraus form
//============================================================================

struct KrausChannel {
  Index dim_in = 0;
  Index dim_out = 0;
  std::vector<ComplexMatrix> ops;  // each dim_out x dim_in
};

ChoiOperator kraus_to_choi(const KrausChannel &k);

// Eigendecomposition of a CP Choi; eigenvalues below `cutoff` are dropped.
KrausChannel choi_to_kraus(const ChoiOperator &j, double cutoff = 1e-10);

//============================================================================
// Choi algebra
//============================================================================

// N(rho) = tr_in[(rho^T (x) I) J] with the trace-d Choi normalization.
ComplexMatrix apply_choi(const ChoiOperator &j, const ComplexMatrix &rho);

// Choi of F o E from J(E) on A(x)B and J(F) on B(x)C:
// J(E) * J(F) = tr_B[(J(E)^{T_B} (x) I_C)(I_A (x) J(F))].
ChoiOperator link_product(const ChoiOperator &je, const ChoiOperator &jf);

// Serial composition "first A then B" (a link-product specialization).
ChoiOperator compose_serial_choi(const ChoiOperator &ja, const ChoiOperator &jb);

// Choi of A (x) B with the (A_in B_in | A_out B_out) index interleaving;
// the plain Kronecker product of Chois has the wrong index order.
ChoiOperator tensor_choi(const ChoiOperator &ja, const ChoiOperator &jb);

ChoiOperator unitary_channel_choi(const ComplexMatrix &u);
ChoiOperator choi_from_map(
    Index dim_in, Index dim_out,
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map);

// Qubit amplitude damping with parameter eta = 1 - e^{-gamma t}.
ChoiOperator amplitude_damping_choi(double eta);

//============================================================================
// Processors
//============================================================================

// A map from the joint data (x) program space into the output system,
// stored as a Choi operator on (S (x) P) (x) S'.
struct ProcessorMap {
  Index dim_s = 0;
  Index dim_p = 0;
  Index dim_out = 0;
  ChoiOperator choi;

  ComplexMatrix apply_joint(const ComplexMatrix &joint) const;
  ComplexMatrix apply(const ComplexMatrix &rho,
                      const ComplexMatrix &program) const;
  // Choi of rho -> P(rho (x) pi), i.e. tr_P[J (I (x) pi^T (x) I)].
  ChoiOperator program_applied_choi(const ComplexMatrix &program) const;
};

ProcessorMap processor_from_map(
    Index dim_s, Index dim_p, Index dim_out,
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map);

// Measures the program register in the computational basis and applies the
// selected channel; program dimension equals the number of channels.
ProcessorMap measure_and_prepare_processor(
    const std::vector<ChoiOperator> &channels);

}  // namespace lindprog

#endif  // LINDPROG_CHANNELS_HPP_
