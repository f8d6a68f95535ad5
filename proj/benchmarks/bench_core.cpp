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

#include <benchmark/benchmark.h>

#include "lindprog/conic.hpp"
#include "lindprog/programmability.hpp"
#include "lindprog/protocols.hpp"

using namespace lindprog;

namespace {

void BM_BuildLiouville(benchmark::State &state) {
  Lindbladian lin = swap_dephasing_lindbladian(0.5);
  for (auto _ : state) {
    auto l = build_liouville(lin);
    benchmark::DoNotOptimize(l.matrix.data());
  }
}
BENCHMARK(BM_BuildLiouville);

void BM_SemigroupChoi(benchmark::State &state) {
  Lindbladian lin = swap_dephasing_lindbladian(0.5);
  double t = 0;
  for (auto _ : state) {
    auto j = semigroup_choi(lin, 0.5 + 0.01 * (t += 1));
    benchmark::DoNotOptimize(j.matrix.data());
  }
}
BENCHMARK(BM_SemigroupChoi);

void BM_Expm(benchmark::State &state) {
  const Index d = state.range(0);
  Lindbladian lin = swap_dephasing_lindbladian(0.5);
  ComplexMatrix m = build_liouville(lin).matrix;
  ComplexMatrix big = kron(m, identity(d / 16 > 0 ? d / 16 : 1));
  for (auto _ : state) {
    auto e = expm(big);
    benchmark::DoNotOptimize(e.data());
  }
}
BENCHMARK(BM_Expm)->Arg(16)->Arg(32)->Arg(64);

void BM_PauliQMatrix2Q(benchmark::State &state) {
  Lindbladian lin = make_lindbladian(
      4, czeros(4, 4),
      {{0.4, pauli_string(2, 5)}, {0.9, pauli_string(2, 15)}});
  for (auto _ : state) {
    auto q = pauli_qmatrix(lin);
    benchmark::DoNotOptimize(q.q.data());
  }
}
BENCHMARK(BM_PauliQMatrix2Q);

void BM_AdProtocolBuild(benchmark::State &state) {
  for (auto _ : state) {
    auto proto = ad_quasi_protocol(0.5);
    benchmark::DoNotOptimize(proto.branches.data());
  }
}
BENCHMARK(BM_AdProtocolBuild);

void BM_McEstimate(benchmark::State &state) {
  QuasiProtocol proto = ad_quasi_protocol(0.5);
  ComplexMatrix rho = matrix_unit(2, 1, 1);
  uint64_t seed = 0;
  for (auto _ : state) {
    auto r = mc_estimate(proto, rho, pauli_z(), 0.0, state.range(0), ++seed);
    benchmark::DoNotOptimize(r.estimate);
  }
}
BENCHMARK(BM_McEstimate)->Arg(10000)->Arg(100000);

void BM_NuSmall(benchmark::State &state) {
  ChoiOperator j = amplitude_damping_choi(0.5);
  for (auto _ : state) {
    double nu = implementability_nu(j);
    benchmark::DoNotOptimize(nu);
  }
}
BENCHMARK(BM_NuSmall);

}  // namespace

BENCHMARK_MAIN();
