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

#include "lindprog/programmability.hpp"
#include "test_util.hpp"

using namespace lindprog;
using namespace lindprog::testing;

namespace {

// L o P_k-conjugation as a Liouville matrix; the expansion oracle.
ComplexMatrix compose_with_pauli(const Lindbladian &lin, int n, Index label) {
  ComplexMatrix p = pauli_string(n, label);
  ComplexMatrix conj_rep = kron(p, p.conjugate());
  return ComplexMatrix(build_liouville(lin).matrix * conj_rep);
}

Lindbladian random_pauli_lindbladian(int n) {
  std::uniform_real_distribution<double> rate(0.0, 2.0);
  std::uniform_int_distribution<Index> lab(1, pauli_label_count(n) - 1);
  std::vector<Lindbladian::Jump> jumps;
  int n_jumps = 1 + int(rng()() % 3);
  for (int i = 0; i < n_jumps; ++i)
    jumps.push_back({rate(rng()), pauli_string(n, lab(rng()))});
  Index d = Index(1) << n;
  return make_lindbladian(d, czeros(d, d), std::move(jumps));
}

}  // namespace

TEST_CASE("pauli label arithmetic") {
  CHECK(pauli_label_count(1) == 4);
  CHECK(pauli_label_count(2) == 16);
  CHECK(pauli_label_name(2, 0) == "II");
  CHECK(pauli_label_name(1, 3) == "Z");
  // X*Z ~ Y up to phase.
  CHECK(pauli_label_product(1, 1, 3) == 2);
  CHECK(pauli_label_product(1, 2, 2) == 0);
  // Product operators match up to a unimodular scalar.
  for (Index a = 0; a < 16; ++a)
    for (Index b = 0; b < 16; ++b) {
      ComplexMatrix prod = pauli_string(2, a) * pauli_string(2, b);
      ComplexMatrix expect = pauli_string(2, pauli_label_product(2, a, b));
      Complex scale = (dagger(expect) * prod).trace() / 4.0;
      CHECK(std::abs(std::abs(scale) - 1.0) < 1e-12);
      CHECK((prod - scale * expect).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("pauli_qmatrix") {
  SUBCASE("single Z jump") {
    double gamma = 0.9;
    QMatrix q = pauli_qmatrix(dephasing_lindbladian(gamma));
    REQUIRE(q.size() == 4);
    // On the {I, Z} block the generator is [[-g, g], [g, -g]].
    CHECK(q.q(0, 0) == doctest::Approx(-gamma));
    CHECK(q.q(3, 0) == doctest::Approx(gamma));
    CHECK(q.q(0, 3) == doctest::Approx(gamma));
    CHECK(q.q(3, 3) == doctest::Approx(-gamma));
    // X column couples to Y.
    CHECK(q.q(2, 1) == doctest::Approx(gamma));
  }
  SUBCASE("no jumps gives the zero matrix") {
    QMatrix q = pauli_qmatrix(zero_lindbladian(2));
    CHECK(q.q.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("X and Z jumps accumulate Gamma on the diagonal") {
    double gx = 0.3, gz = 1.1;
    Lindbladian lin = make_lindbladian(
        2, czeros(2, 2), {{gx, pauli_x()}, {gz, pauli_z()}});
    QMatrix q = pauli_qmatrix(lin);
    for (Index k = 0; k < 4; ++k)
      CHECK(q.q(k, k) == doctest::Approx(-(gx + gz)));
  }
  SUBCASE("superoperator expansion identity") {
    for (int n : {1, 2}) {
      Lindbladian lin = random_pauli_lindbladian(n);
      QMatrix q = pauli_qmatrix(lin);
      Index nlab = pauli_label_count(n);
      for (Index k = 0; k < nlab; ++k) {
        ComplexMatrix lhs = compose_with_pauli(lin, n, k);
        ComplexMatrix rhs =
            czeros(lhs.rows(), lhs.cols());
        for (Index j = 0; j < nlab; ++j) {
          if (q.q(j, k) == 0.0) continue;
          ComplexMatrix p = pauli_string(n, j);
          rhs += q.q(j, k) * kron(p, p.conjugate());
        }
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
  SUBCASE("scalar multiples of Paulis fold into the rate") {
    Lindbladian lin = make_lindbladian(
        2, czeros(2, 2), {{1.0, ComplexMatrix(std::sqrt(0.5) * pauli_z())}});
    QMatrix q = pauli_qmatrix(lin);
    CHECK(q.q(3, 0) == doctest::Approx(0.5));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(
        pauli_qmatrix(make_lindbladian(2, pauli_z(), {{1.0, pauli_x()}})),
        std::invalid_argument);
    ComplexMatrix not_pauli = pauli_x() + pauli_z();
    CHECK_THROWS_AS(pauli_qmatrix(make_lindbladian(2, czeros(2, 2),
                                                   {{1.0, not_pauli}})),
                    std::invalid_argument);
  }
}

TEST_CASE("classical_propagate") {
  double gamma = 0.75;
  QMatrix q = pauli_qmatrix(dephasing_lindbladian(gamma));
  RealVector p0 = RealVector::Zero(4);
  p0(0) = 1.0;

  SUBCASE("t = 0 returns p0") {
    CHECK((classical_propagate(q, p0, 0.0) - p0).cwiseAbs().maxCoeff() <
          1e-12);
  }
  SUBCASE("dephasing weights follow the two-level exponential") {
    for (double t : {0.2, 1.0, 4.0}) {
      RealVector p = classical_propagate(q, p0, t);
      double w = std::exp(-2 * gamma * t);
      CHECK(p(0) == doctest::Approx(0.5 * (1 + w)).epsilon(1e-10));
      CHECK(p(3) == doctest::Approx(0.5 * (1 - w)).epsilon(1e-10));
      CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(p.minCoeff() > -1e-12);
    }
  }
  SUBCASE("long-time limit is the stationary distribution") {
    Lindbladian lin = make_lindbladian(
        2, czeros(2, 2), {{0.5, pauli_x()}, {0.8, pauli_z()}});
    QMatrix qq = pauli_qmatrix(lin);
    RealVector p = classical_propagate(qq, p0, 200.0);
    // Stationary vector from the kernel of Q.
    Eigen::FullPivLU<RealMatrix> lu(qq.q);
    RealMatrix ker = lu.kernel();
    RealVector stat = ker.col(0) / ker.col(0).sum();
    CHECK((p - stat).cwiseAbs().maxCoeff() < 1e-8);
  }
  SUBCASE("invalid p0 throws") {
    RealVector bad = RealVector::Constant(4, 0.5);
    CHECK_THROWS_AS(classical_propagate(q, bad, 1.0), std::invalid_argument);
  }
}

TEST_CASE("pauli_program_protocol") {
  SUBCASE("dephasing protocol reproduces the semigroup on a grid") {
    Lindbladian lin = dephasing_lindbladian(0.8);
    PauliProgramProtocol proto = pauli_program_protocol(lin);
    for (double t : {0.0, 0.3, 1.0, 5.0}) {
      ComplexMatrix pi = proto.program(t);
      for (int rep = 0; rep < 3; ++rep) {
        ComplexMatrix rho = random_density(2);
        ComplexMatrix via = proto.processor.apply(rho, pi);
        CHECK(trace_norm(ComplexMatrix(via - evolve_state(lin, rho, t))) <
              1e-9);
      }
    }
  }
  SUBCASE("two-qubit ZZ rates use a 16-level program") {
    Lindbladian lin = make_lindbladian(
        4, czeros(4, 4), {{0.6, pauli_string(2, 15)}});  // Z (x) Z
    PauliProgramProtocol proto = pauli_program_protocol(lin);
    CHECK(proto.program.dim_p == 16);
    for (double t : {0.5, 2.0}) {
      ComplexMatrix rho = random_density(4);
      ComplexMatrix via = proto.processor.apply(rho, proto.program(t));
      CHECK(trace_norm(ComplexMatrix(via - evolve_state(lin, rho, t))) <
            1e-9);
    }
  }
  SUBCASE("zero generator pins the identity label") {
    PauliProgramProtocol proto = pauli_program_protocol(zero_lindbladian(2));
    ComplexMatrix pi = proto.program(3.0);
    CHECK(std::abs(pi(0, 0) - Complex(1, 0)) < 1e-12);
  }
}

TEST_CASE("polytope_membership_qmatrix") {
  double gamma = 0.45;
  std::vector<ChoiOperator> iz = {choi_of_identity(2),
                                  unitary_channel_choi(pauli_z())};

  SUBCASE("dephasing lies in the {I, Z} polytope") {
    auto q = polytope_membership_qmatrix(dephasing_lindbladian(gamma), iz);
    REQUIRE(q.has_value());
    CHECK(q->q(0, 0) == doctest::Approx(-gamma).epsilon(1e-8));
    CHECK(q->q(1, 0) == doctest::Approx(gamma).epsilon(1e-8));
    CHECK(q->q(0, 1) == doctest::Approx(gamma).epsilon(1e-8));
  }
  SUBCASE("emission does not") {
    CHECK_FALSE(
        polytope_membership_qmatrix(emission_lindbladian(1.0), iz).has_value());
  }
  SUBCASE("zero generator gives the zero matrix") {
    auto q = polytope_membership_qmatrix(zero_lindbladian(2), iz);
    REQUIRE(q.has_value());
    CHECK(q->q.cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("linearly dependent channels throw") {
    std::vector<ChoiOperator> dep = {choi_of_identity(2),
                                     choi_of_identity(2)};
    CHECK_THROWS_AS(
        polytope_membership_qmatrix(dephasing_lindbladian(1.0), dep),
        std::invalid_argument);
  }
}

TEST_CASE("cptp_form_check") {
  SUBCASE("emission has no form") {
    for (double gamma : {0.3, 1.0})
      CHECK_FALSE(cptp_form_check(emission_lindbladian(gamma)).has_value());
  }
  SUBCASE("coherent generators have no form") {
    Lindbladian coherent = make_lindbladian(2, pauli_z(), {});
    CHECK_FALSE(cptp_form_check(coherent).has_value());
    Lindbladian mixed = make_lindbladian(2, pauli_x(), {{0.2, pauli_z()}});
    CHECK_FALSE(cptp_form_check(mixed).has_value());
  }
  SUBCASE("dephasing has a valid form") {
    double gamma = 0.65;
    Lindbladian lin = dephasing_lindbladian(gamma);
    auto form = cptp_form_check(lin);
    REQUIRE(form.has_value());
    CHECK(form->alpha > 0);
    CHECK(is_cptp(form->channel_choi, 1e-8));
    // L(rho) = alpha (E(rho) - rho) on a random battery.
    for (int rep = 0; rep < 10; ++rep) {
      ComplexMatrix rho = random_density(2);
      ComplexMatrix lhs = lindblad_apply(lin, rho);
      ComplexMatrix rhs =
          form->alpha * (apply_choi(form->channel_choi, rho) - rho);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
    // The minimal feasible alpha for Z-dephasing is the jump rate.
    CHECK(form->alpha == doctest::Approx(gamma).epsilon(1e-4));
  }
  SUBCASE("L = 0 returns the zero-rate identity form") {
    auto form = cptp_form_check(zero_lindbladian(2));
    REQUIRE(form.has_value());
    CHECK(form->alpha == 0.0);
  }
  SUBCASE("isotropic depolarizing has a form") {
    auto form = cptp_form_check(isotropic_depolarizing_lindbladian(0.5));
    REQUIRE(form.has_value());
    CHECK(is_cptp(form->channel_choi, 1e-8));
  }
}

TEST_CASE("covariance_check") {
  auto rot = [](const ComplexMatrix &gen, double angle) {
    return expm(ComplexMatrix(Complex(0, -angle / 2) * gen));
  };
  std::vector<ComplexMatrix> su2 = {rot(pauli_x(), 1.2345),
                                    rot(pauli_z(), 0.7391)};

  CHECK(covariance_check(isotropic_depolarizing_lindbladian(0.8), su2));
  CHECK_FALSE(covariance_check(emission_lindbladian(1.0),
                               {rot(pauli_x(), 1.2345)}));
  CHECK(covariance_check(emission_lindbladian(1.0), {identity(2)}));
  CHECK_THROWS_AS(
      covariance_check(emission_lindbladian(1.0), {ComplexMatrix(2.0 * identity(2))}),
      std::invalid_argument);

  SUBCASE("verdict is basis independent") {
    ComplexMatrix u = random_unitary(2);
    auto conjugate = [&](const Lindbladian &lin) {
      std::vector<Lindbladian::Jump> jumps;
      for (const auto &j : lin.jumps)
        jumps.push_back({j.rate, ComplexMatrix(u * j.op * dagger(u))});
      return make_lindbladian(
          lin.dim, ComplexMatrix(u * lin.hamiltonian * dagger(u)), jumps);
    };
    std::vector<ComplexMatrix> conj_unitaries;
    for (const auto &g : su2)
      conj_unitaries.push_back(ComplexMatrix(u * g * dagger(u)));
    CHECK(covariance_check(conjugate(isotropic_depolarizing_lindbladian(0.8)),
                           conj_unitaries));
    ComplexMatrix x_conj = ComplexMatrix(u * su2[0] * dagger(u));
    CHECK_FALSE(
        covariance_check(conjugate(emission_lindbladian(1.0)), {x_conj}));
  }
}

TEST_CASE("port_obstruction_check") {
  SUBCASE("emission is obstructed") {
    PortObstruction v = port_obstruction_check(emission_lindbladian(1.0));
    CHECK(v.verdict == PortVerdict::obstructed);
    CHECK(v.unique_steady_state);
    CHECK(v.min_eigenvalue < 0.25);
  }
  SUBCASE("isotropic depolarizing is inconclusive") {
    PortObstruction v =
        port_obstruction_check(isotropic_depolarizing_lindbladian(0.9));
    CHECK(v.verdict == PortVerdict::inconclusive);
    CHECK(v.unique_steady_state);
    CHECK(v.min_eigenvalue == doctest::Approx(0.5).epsilon(1e-6));
  }
  SUBCASE("dephasing is inconclusive (non-unique steady state)") {
    PortObstruction v = port_obstruction_check(dephasing_lindbladian(1.0));
    CHECK(v.verdict == PortVerdict::inconclusive);
    CHECK_FALSE(v.unique_steady_state);
  }
}

TEST_CASE("random Pauli protocols satisfy the trace-norm invariant") {
  for (int n : {1, 2}) {
    for (int rep = 0; rep < (n == 1 ? 4 : 2); ++rep) {
      Lindbladian lin = random_pauli_lindbladian(n);
      PauliProgramProtocol proto = pauli_program_protocol(lin);
      std::uniform_real_distribution<double> tt(0.0, 4.0);
      for (int k = 0; k < 4; ++k) {
        double t = tt(rng());
        ComplexMatrix pi = proto.program(t);
        ComplexMatrix rho = random_density(lin.dim);
        CHECK(trace_norm(ComplexMatrix(proto.processor.apply(rho, pi) -
                                       evolve_state(lin, rho, t))) < 1e-9);
      }
    }
  }
}
