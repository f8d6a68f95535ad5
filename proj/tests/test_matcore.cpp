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

#include <doctest.h>

#include <cmath>

#include "lindprog/matcore.hpp"
#include "test_util.hpp"

using namespace lindprog;
using namespace lindprog::testing;

namespace {

// Emission-model Liouvillian assembled by hand, gamma = 1:
// rho00' = rho11, rho01' = -rho01/2, rho10' = -rho10/2, rho11' = -rho11.
ComplexMatrix emission_liouvillian_by_hand() {
  ComplexMatrix l = czeros(4, 4);
  l(0, 3) = 1.0;
  l(1, 1) = -0.5;
  l(2, 2) = -0.5;
  l(3, 3) = -1.0;
  return l;
}

// Liouville matrix of a Kraus map: vec(K rho K^+) = (K (x) conj K) vec(rho).
ComplexMatrix kraus_liouville(const std::vector<ComplexMatrix> &ops) {
  ComplexMatrix out = czeros(ops[0].rows() * ops[0].rows(),
                             ops[0].cols() * ops[0].cols());
  for (const auto &k : ops) out += kron(k, k.conjugate());
  return out;
}

}  // namespace

TEST_CASE("vectorize follows the row-major ket convention") {
  // vec(|0><1|) = e_1 on a qubit.
  ComplexVector v = vectorize(matrix_unit(2, 0, 1));
  CHECK(std::abs(v(1) - 1.0) < 1e-15);
  CHECK(v.cwiseAbs().sum() == doctest::Approx(1.0));

  ComplexVector vi = vectorize(identity(2));
  CHECK(std::abs(vi(0) - 1.0) < 1e-15);
  CHECK(std::abs(vi(3) - 1.0) < 1e-15);
  CHECK(std::abs(vi(1)) < 1e-15);
  CHECK(std::abs(vi(2)) < 1e-15);
}

TEST_CASE("vec(ABC) = (A (x) C^T) vec(B)") {
  for (int rep = 0; rep < 20; ++rep) {
    ComplexMatrix a = random_matrix(3, 3), b = random_matrix(3, 3),
                  c = random_matrix(3, 3);
    ComplexVector lhs = vectorize(ComplexMatrix(a * b * c));
    ComplexVector rhs = kron(a, c.transpose()) * vectorize(b);
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("vec/devec round trip on random sizes") {
  for (int rep = 0; rep < 1000; ++rep) {
    Index r = 1 + (rep % 16), c = 1 + ((rep * 7) % 16);
    ComplexMatrix m = random_matrix(r, c);
    CHECK((devectorize(vectorize(m), r, c) - m).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(devectorize(ComplexVector::Zero(5), 2, 2),
                  std::invalid_argument);
}

TEST_CASE("expm basics") {
  CHECK((expm(czeros(4, 4)) - identity(4)).cwiseAbs().maxCoeff() < 1e-15);

  ComplexMatrix d = czeros(2, 2);
  d(0, 0) = Complex(0, 3.14159265358979323846);
  ComplexMatrix e = expm(d);
  CHECK(std::abs(e(0, 0) - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(e(1, 1) - Complex(1, 0)) < 1e-12);

  CHECK_THROWS_AS(expm(random_matrix(2, 3)), std::invalid_argument);
}

TEST_CASE("expm of the emission Liouvillian gives amplitude damping") {
  // t = ln 2 at gamma = 1 damps with eta = 1 - e^{-t} = 1/2.
  double t = std::log(2.0);
  ComplexMatrix prop = expm(ComplexMatrix(t * emission_liouvillian_by_hand()));
  double eta = 0.5;
  ComplexMatrix e0 = czeros(2, 2), e1 = czeros(2, 2);
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1 - eta);
  e1(0, 1) = std::sqrt(eta);
  CHECK((prop - kraus_liouville({e0, e1})).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("expm multiplicativity on commuting pairs") {
  for (int rep = 0; rep < 10; ++rep) {
    ComplexMatrix v = random_unitary(4);
    ComplexVector da = random_matrix(4, 1).col(0), db = random_matrix(4, 1).col(0);
    ComplexMatrix a = v * da.asDiagonal() * dagger(v);
    ComplexMatrix b = v * db.asDiagonal() * dagger(v);
    ComplexMatrix lhs = expm(ComplexMatrix(a + b));
    ComplexMatrix rhs = expm(a) * expm(b);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("partial trace") {
  ComplexMatrix rho = random_density(2), sigma = random_density(3);
  ComplexMatrix joint = kron(rho, sigma);

  SUBCASE("product state reduces to the factor") {
    ComplexMatrix red = partial_trace(joint, SystemDims{2, 3}, {0});
    CHECK((red - rho).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("Bell state reduces to I/2") {
    ComplexMatrix bell = max_entangled_projector(2);
    ComplexMatrix red = partial_trace(bell, SystemDims{2, 2}, {1});
    CHECK((red - 0.5 * identity(2)).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("random matrix vs index-summation oracle") {
    ComplexMatrix m = random_matrix(6, 6);
    CHECK((partial_trace(m, SystemDims{2, 3}, {1}) -
           oracle_partial_trace_first(m, 2, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
    CHECK((partial_trace(m, SystemDims{2, 3}, {0}) -
           oracle_partial_trace_second(m, 2, 3))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
  SUBCASE("trace is preserved and orderings compose to the full trace") {
    ComplexMatrix m = random_matrix(6, 6);
    Complex full = m.trace();
    CHECK(std::abs(partial_trace(m, SystemDims{2, 3}, {0}).trace() - full) <
          1e-12);
    ComplexMatrix first = partial_trace(m, SystemDims{2, 3}, {1});
    CHECK(std::abs(first.trace() - full) < 1e-12);
  }
  SUBCASE("invalid subsystem index throws") {
    CHECK_THROWS_AS(partial_trace(joint, SystemDims{2, 3}, {2}),
                    std::invalid_argument);
  }
}

TEST_CASE("partial transpose") {
  ComplexMatrix rho = random_density(2), sigma = random_density(2);

  ComplexMatrix pt = partial_transpose(kron(rho, sigma), SystemDims{2, 2}, 1);
  CHECK((pt - kron(rho, sigma.transpose())).cwiseAbs().maxCoeff() < 1e-12);

  ComplexMatrix m = random_matrix(4, 4);
  ComplexMatrix twice =
      partial_transpose(partial_transpose(m, SystemDims{2, 2}, 0),
                        SystemDims{2, 2}, 0);
  CHECK((twice - m).cwiseAbs().maxCoeff() == 0.0);

  // PT of the Bell projector has eigenvalues {1/2, 1/2, 1/2, -1/2}.
  ComplexMatrix bpt =
      partial_transpose(max_entangled_projector(2), SystemDims{2, 2}, 1);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(bpt);
  RealVector lam = es.eigenvalues();
  CHECK(lam(0) == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i)
    CHECK(lam(i) == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS(partial_transpose(m, SystemDims{2, 2}, 5),
                  std::invalid_argument);
}

TEST_CASE("Schatten norms and fidelity") {
  for (Index d : {2, 3, 5}) {
    ComplexMatrix mixed = identity(d) / double(d);
    CHECK(trace_norm(mixed) == doctest::Approx(1.0).epsilon(1e-12));
  }

  ComplexMatrix h = random_hermitian(3);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  CHECK(trace_norm(h) ==
        doctest::Approx(es.eigenvalues().cwiseAbs().sum()).epsilon(1e-12));

  auto [tn, on] = schatten_norms(random_matrix(4, 4));
  CHECK(tn >= on);

  ComplexMatrix rho = random_density(3);
  CHECK(fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-9));

  // F(Phi, I/d (x) sigma) = 1/d^2 for any sigma.
  for (int rep = 0; rep < 3; ++rep) {
    ComplexMatrix sigma = random_density(2);
    ComplexMatrix a = max_entangled_projector(2);
    ComplexMatrix b = kron(ComplexMatrix(0.5 * identity(2)), sigma);
    CHECK(fidelity(a, b) == doctest::Approx(0.25).epsilon(1e-9));
  }

  ComplexMatrix not_psd = pauli_z();
  CHECK_THROWS_AS(fidelity(not_psd, not_psd), std::invalid_argument);
}

TEST_CASE("null space") {
  CHECK(null_space(identity(3)).empty());

  ComplexMatrix d = czeros(3, 3);
  d(1, 1) = 1;
  d(2, 2) = 2;
  auto basis = null_space(d);
  REQUIRE(basis.size() == 1);
  CHECK(std::abs(std::abs(basis[0](0)) - 1.0) < 1e-12);

  // Emission Liouvillian: one-dimensional kernel at |0><0|.
  auto ker = null_space(emission_liouvillian_by_hand());
  REQUIRE(ker.size() == 1);
  ComplexMatrix state = devectorize(ker[0], 2, 2);
  state /= state(0, 0);
  CHECK((state - matrix_unit(2, 0, 0)).cwiseAbs().maxCoeff() < 1e-12);

  // Orthonormality and residual bounds on a random rank-deficient matrix.
  ComplexMatrix a = random_matrix(4, 2);
  ComplexMatrix low = a * dagger(a);  // rank <= 2
  auto nb = null_space(low);
  REQUIRE(nb.size() == 2);
  for (size_t i = 0; i < nb.size(); ++i) {
    CHECK((low * nb[i]).norm() < 1e-9 * operator_norm(low));
    for (size_t j = 0; j < i; ++j)
      CHECK(std::abs(nb[i].dot(nb[j])) < 1e-12);
  }
}

TEST_CASE("permute_systems swaps Kronecker factors") {
  ComplexMatrix a = random_matrix(2, 2), b = random_matrix(3, 3);
  ComplexMatrix swapped =
      permute_systems(kron(a, b), SystemDims{2, 3}, {1, 0});
  CHECK((swapped - kron(b, a)).cwiseAbs().maxCoeff() < 1e-12);
}
