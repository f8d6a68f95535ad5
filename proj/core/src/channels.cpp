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

#include "lindprog/channels.hpp"

#include <cmath>

namespace lindprog {

ChoiOperator kraus_to_choi(const KrausChannel &k) {
  const Index din = k.dim_in, dout = k.dim_out;
  ComplexMatrix j = czeros(din * dout, din * dout);
  for (const auto &op : k.ops) {
    if (op.rows() != dout || op.cols() != din)
      throw std::invalid_argument("kraus_to_choi: operator dimension");
    // |v> = sum_i |i> (x) K|i> has components v[(i,a)] = K(a,i).
    ComplexVector v(din * dout);
    for (Index i = 0; i < din; ++i)
      for (Index a = 0; a < dout; ++a) v(i * dout + a) = op(a, i);
    j += v * v.adjoint();
  }
  return ChoiOperator{din, dout, std::move(j)};
}

KrausChannel choi_to_kraus(const ChoiOperator &j, double cutoff) {
  const Index din = j.dim_in, dout = j.dim_out;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitize(j.matrix));
  KrausChannel k{din, dout, {}};
  for (Index m = 0; m < es.eigenvalues().size(); ++m) {
    double lam = es.eigenvalues()(m);
    if (lam <= cutoff) continue;
    ComplexMatrix op(dout, din);
    for (Index i = 0; i < din; ++i)
      for (Index a = 0; a < dout; ++a)
        op(a, i) = std::sqrt(lam) * es.eigenvectors()(i * dout + a, m);
    k.ops.push_back(std::move(op));
  }
  return k;
}

ComplexMatrix apply_choi(const ChoiOperator &j, const ComplexMatrix &rho) {
  if (rho.rows() != j.dim_in || rho.cols() != j.dim_in)
    throw std::invalid_argument("apply_choi: input dimension mismatch");
  ComplexMatrix m =
      kron(rho.transpose(), identity(j.dim_out)) * j.matrix;
  return partial_trace(m, SystemDims{j.dim_in, j.dim_out}, {1});
}

ChoiOperator link_product(const ChoiOperator &je, const ChoiOperator &jf) {
  if (je.dim_out != jf.dim_in)
    throw std::invalid_argument("link_product: shared dimension mismatch");
  const Index da = je.dim_in, db = je.dim_out, dc = jf.dim_out;
  ComplexMatrix et = partial_transpose(je.matrix, SystemDims{da, db}, 1);
  ComplexMatrix big =
      kron(et, identity(dc)) * kron(identity(da), jf.matrix);
  ComplexMatrix out = partial_trace(big, SystemDims{da, db, dc}, {0, 2});
  return ChoiOperator{da, dc, std::move(out)};
}

ChoiOperator compose_serial_choi(const ChoiOperator &ja,
                                 const ChoiOperator &jb) {
  return link_product(ja, jb);
}

ChoiOperator tensor_choi(const ChoiOperator &ja, const ChoiOperator &jb) {
  // kron leaves indices ordered (A_in, A_out, B_in, B_out); the Choi of the
  // product map needs (A_in, B_in, A_out, B_out).
  ComplexMatrix raw = kron(ja.matrix, jb.matrix);
  SystemDims dims{ja.dim_in, ja.dim_out, jb.dim_in, jb.dim_out};
  ComplexMatrix out = permute_systems(raw, dims, {0, 2, 1, 3});
  return ChoiOperator{ja.dim_in * jb.dim_in, ja.dim_out * jb.dim_out,
                      std::move(out)};
}

ChoiOperator unitary_channel_choi(const ComplexMatrix &u) {
  KrausChannel k{u.cols(), u.rows(), {u}};
  return kraus_to_choi(k);
}

ChoiOperator choi_from_map(
    Index dim_in, Index dim_out,
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map) {
  ComplexMatrix j = czeros(dim_in * dim_out, dim_in * dim_out);
  for (Index i = 0; i < dim_in; ++i)
    for (Index jj = 0; jj < dim_in; ++jj) {
      ComplexMatrix out = map(matrix_unit(dim_in, i, jj));
      for (Index a = 0; a < dim_out; ++a)
        for (Index b = 0; b < dim_out; ++b)
          j(i * dim_out + a, jj * dim_out + b) = out(a, b);
    }
  return ChoiOperator{dim_in, dim_out, std::move(j)};
}

ChoiOperator amplitude_damping_choi(double eta) {
  if (eta < 0 || eta > 1)
    throw std::invalid_argument("amplitude_damping_choi: eta in [0,1]");
  ComplexMatrix e0 = czeros(2, 2), e1 = czeros(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - eta);
  e1(0, 1) = std::sqrt(eta);
  return kraus_to_choi(KrausChannel{2, 2, {e0, e1}});
}

//============================================================================
// Processors
//============================================================================

ComplexMatrix ProcessorMap::apply_joint(const ComplexMatrix &joint) const {
  return apply_choi(choi, joint);
}

ComplexMatrix ProcessorMap::apply(const ComplexMatrix &rho,
                                  const ComplexMatrix &program) const {
  return apply_choi(choi, kron(rho, program));
}

ChoiOperator ProcessorMap::program_applied_choi(
    const ComplexMatrix &program) const {
  ComplexMatrix m =
      choi.matrix *
      kron(kron(identity(dim_s), program.transpose()), identity(dim_out));
  ComplexMatrix red =
      partial_trace(m, SystemDims{dim_s, dim_p, dim_out}, {0, 2});
  return ChoiOperator{dim_s, dim_out, std::move(red)};
}

ProcessorMap processor_from_map(
    Index dim_s, Index dim_p, Index dim_out,
    const std::function<ComplexMatrix(const ComplexMatrix &)> &map) {
  return ProcessorMap{dim_s, dim_p, dim_out,
                      choi_from_map(dim_s * dim_p, dim_out, map)};
}

ProcessorMap measure_and_prepare_processor(
    const std::vector<ChoiOperator> &channels) {
  if (channels.empty())
    throw std::invalid_argument("measure_and_prepare_processor: empty set");
  const Index ds = channels.front().dim_in;
  const Index dout = channels.front().dim_out;
  for (const auto &c : channels) {
    if (c.dim_in != ds || c.dim_out != dout)
      throw std::invalid_argument(
          "measure_and_prepare_processor: unequal channel dimensions");
    if (!is_cptp(c))
      throw std::invalid_argument(
          "measure_and_prepare_processor: non-CPTP member");
  }
  const Index dp = static_cast<Index>(channels.size());

  return processor_from_map(
      ds, dp, dout, [&, ds, dp, dout](const ComplexMatrix &joint) {
        ComplexMatrix out = czeros(dout, dout);
        for (Index k = 0; k < dp; ++k) {
          // <k| joint |k> on the program factor.
          ComplexMatrix blk(ds, ds);
          for (Index i = 0; i < ds; ++i)
            for (Index j = 0; j < ds; ++j)
              blk(i, j) = joint(i * dp + k, j * dp + k);
          out += apply_choi(channels[k], blk);
        }
        return out;
      });
}

}  // namespace lindprog
