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

#include "lindprog/conic.hpp"
#include "lindprog/channels.hpp"
#include "lindprog/programmability.hpp"
#include "test_util.hpp"

using namespace lindprog;
using namespace lindprog::testing;

TEST_CASE("solve_sdp on toy cones") {
  SUBCASE("min tr X over trace-one PSD matrices") {
    SdpProblem prob;
    int x = prob.add_hermitian_block(SdpProblem::BlockKind::psd, 2, "X");
    int row = prob.new_row(1.0);
    prob.add_matrix_coeff(row, x, identity(2));
    prob.add_objective(x, identity(2));
    SdpSolution sol = solve_sdp(prob);
    REQUIRE(sol.status == SdpSolution::Status::optimal);
    CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("min lambda with lambda I - A >= 0 finds lambda_max") {
    ComplexMatrix a = random_hermitian(3);
    SdpProblem prob;
    int z = prob.add_hermitian_block(SdpProblem::BlockKind::psd, 3, "Z");
    int lam = prob.add_scalar("lambda", false);
    for (Index p = 0; p < 3; ++p)
      for (Index q = p; q < 3; ++q) {
        int r_re = prob.new_row(-a(p, q).real());
        int r_im = p == q ? -1 : prob.new_row(-a(p, q).imag());
        prob.add_complex_coeff(r_re, r_im, z, matrix_unit(3, p, q));
        if (p == q) prob.add_scalar_coeff(r_re, lam, -1.0);
      }
    prob.add_objective_scalar(lam, 1.0);
    SdpSolution sol = solve_sdp(prob);
    REQUIRE(sol.status == SdpSolution::Status::optimal);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a);
    CHECK(sol.objective ==
          doctest::Approx(es.eigenvalues().maxCoeff()).epsilon(1e-5));
  }
  SUBCASE("PSD with trace -1 is reported infeasible") {
    SdpProblem prob;
    int x = prob.add_hermitian_block(SdpProblem::BlockKind::psd, 2, "X");
    int row = prob.new_row(-1.0);
    prob.add_matrix_coeff(row, x, identity(2));
    prob.add_objective(x, identity(2));
    SdpSolution sol = solve_sdp(prob);
    CHECK(sol.status == SdpSolution::Status::infeasible);
  }
}

TEST_CASE("diamond_norm") {
  SUBCASE("CPTP maps have norm one") {
    CHECK(diamond_norm(choi_of_identity(2)) ==
          doctest::Approx(1.0).epsilon(1e-5));
    CHECK(diamond_norm(unitary_channel_choi(random_unitary(2))) ==
          doctest::Approx(1.0).epsilon(1e-5));
  }
  SUBCASE("difference of depolarizing extremes") {
    // E_{p=0} = identity, E_{p=1} = full depolarizing; half the diamond
    // distance is 3/4.
    ComplexMatrix depol =
        czeros(4, 4);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        depol(i * 2 + 0, j * 2 + 0) = depol(i * 2 + 1, j * 2 + 1) =
            (i == j) ? 0.5 : 0.0;
    ChoiOperator diff{2, 2,
                      ComplexMatrix(choi_of_identity(2).matrix - depol)};
    double val = diamond_norm(diff);
    CHECK(0.5 * val == doctest::Approx(0.75).epsilon(1e-4));
    CHECK(0.5 * val ==
          doctest::Approx(oracle_half_diamond_qubit(diff)).epsilon(2e-3));
  }
  SUBCASE("random channel differences match the brute-force oracle") {
    KrausChannel e = random_channel(2), f = random_channel(2);
    ChoiOperator diff{2, 2,
                      ComplexMatrix(kraus_to_choi(e).matrix -
                                    kraus_to_choi(f).matrix)};
    double val = 0.5 * diamond_norm(diff);
    CHECK(val == doctest::Approx(oracle_half_diamond_qubit(diff))
                     .epsilon(5e-3));
  }
  SUBCASE("non-Hermitian Choi throws") {
    ChoiOperator bad{2, 2, random_matrix(4, 4)};
    CHECK_THROWS_AS(diamond_norm(bad), std::invalid_argument);
  }
}

TEST_CASE("implementability_nu") {
  SUBCASE("CPTP maps cost nothing") {
    CHECK(implementability_nu(kraus_to_choi(random_channel(2))) ==
          doctest::Approx(0.0).epsilon(1e-6));
    CHECK(implementability_nu(amplitude_damping_choi(0.7)) ==
          doctest::Approx(0.0).epsilon(1e-6));
  }
  SUBCASE("the qubit transpose costs one bit") {
    // Transpose = (rho + X rho X + Z rho Z - Y rho Y)/2: an explicit
    // two-channel split with 1-norm 2 certifies the optimum from above.
    ChoiOperator jt = choi_from_map(2, 2, [](const ComplexMatrix &rho) {
      return ComplexMatrix(rho.transpose());
    });
    ComplexMatrix direct = czeros(4, 4);
    direct += 0.5 * choi_of_identity(2).matrix;
    direct += 0.5 * unitary_channel_choi(pauli_x()).matrix;
    direct += 0.5 * unitary_channel_choi(pauli_z()).matrix;
    direct -= 0.5 * unitary_channel_choi(pauli_y()).matrix;
    REQUIRE((jt.matrix - direct).cwiseAbs().maxCoeff() < 1e-12);

    CHECK(implementability_nu(jt) == doctest::Approx(1.0).epsilon(1e-4));
  }
  SUBCASE("non-HPTP input throws") {
    ChoiOperator bad{2, 2, ComplexMatrix(2.0 * choi_of_identity(2).matrix)};
    CHECK_THROWS_AS(implementability_nu(bad), std::invalid_argument);
  }
}

TEST_CASE("programming_cost") {
  CostOptions opts;
  opts.n_time_samples = 8;

  SUBCASE("L = 0 with the constant identity-Choi program costs nothing") {
    Lindbladian lin = zero_lindbladian(2);
    ProgramStateFamily family = constant_program(
        ComplexMatrix(0.5 * choi_of_identity(2).matrix), "identity-choi");
    family.dim_p = 4;
    CostResult res = programming_cost(lin, family, 2.0, 0.0, opts);
    REQUIRE(res.status == CostResult::Status::optimal);
    CHECK(std::abs(res.gamma) < 1e-6);

    // Faithfulness cross-check: the optimizing processor is physical.
    CHECK(implementability_nu(res.processor) ==
          doctest::Approx(0.0).epsilon(1e-4));
  }
  SUBCASE("dephasing with its diagonal Pauli program costs nothing") {
    Lindbladian lin = dephasing_lindbladian(0.8);
    PauliProgramProtocol proto = pauli_program_protocol(lin);
    CostResult res = programming_cost(lin, proto.program, 2.0, 0.0, opts);
    REQUIRE(res.status == CostResult::Status::optimal);
    CHECK(std::abs(res.gamma) < 1e-5);
  }
  SUBCASE("grid {0} has zero cost") {
    CostResult res =
        port_based_cost(emission_lindbladian(1.0), 0.0, 0.0, opts);
    REQUIRE(res.status == CostResult::Status::optimal);
    CHECK(std::abs(res.gamma) < 1e-5);
  }
  SUBCASE("port-based emission cost is strictly positive") {
    CostResult res = port_based_cost(emission_lindbladian(1.0), 10.0, 0.0,
                                     opts);
    REQUIRE(res.status == CostResult::Status::optimal);
    CHECK(res.gamma > 1e-3);
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS(port_based_cost(emission_lindbladian(1.0), -1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(port_based_cost(emission_lindbladian(1.0), 1.0, -0.1),
                    std::invalid_argument);
  }
}

TEST_CASE("cost properties on the emission example") {
  CostOptions opts;
  opts.n_time_samples = 8;
  Lindbladian em = emission_lindbladian(1.0);

  SUBCASE("monotone in T") {
    CostResult t1 = port_based_cost(em, 2.0, 0.0, opts);
    CostResult t2 = port_based_cost(em, 10.0, 0.0, opts);
    REQUIRE(t1.status == CostResult::Status::optimal);
    REQUIRE(t2.status == CostResult::Status::optimal);
    CHECK(t2.gamma >= t1.gamma - 1e-5);
  }
  SUBCASE("grid-refinement doubling leaves the value unchanged") {
    CostOptions fine = opts;
    fine.n_time_samples = 16;
    CostResult coarse = port_based_cost(em, 10.0, 0.0, opts);
    CostResult refined = port_based_cost(em, 10.0, 0.0, fine);
    CHECK(std::abs(coarse.gamma - refined.gamma) < 1e-4);
  }
}

TEST_CASE("unitary program noise keeps the cost invariant") {
  CostOptions opts;
  opts.n_time_samples = 8;
  Lindbladian deph = dephasing_lindbladian(0.8);
  PauliProgramProtocol proto = pauli_program_protocol(deph);

  CostResult base = programming_cost(deph, proto.program, 2.0, 0.0, opts);
  REQUIRE(base.status == CostResult::Status::optimal);

  ComplexMatrix u = random_unitary(4);
  ProgramStateFamily rotated;
  rotated.dim_p = 4;
  rotated.label = "rotated";
  rotated.evaluator = [u, family = proto.program](double t) {
    return ComplexMatrix(u * family(t) * dagger(u));
  };
  CostResult conj = programming_cost(deph, rotated, 2.0, 0.0, opts);
  REQUIRE(conj.status == CostResult::Status::optimal);
  CHECK(std::abs(conj.gamma - base.gamma) <= 2 * opts.solver.tol + 1e-9);
}

TEST_CASE("cost_sweep shares structure across epsilon values") {
  CostOptions opts;
  opts.n_time_samples = 6;
  Lindbladian lin = emission_lindbladian(1.0);
  std::vector<CostResult> sweep =
      cost_sweep(lin, choi_program_family(lin), 6.0, {0.0, 0.1, 0.2}, opts);
  REQUIRE(sweep.size() == 3);
  for (const auto &r : sweep)
    REQUIRE(r.status == CostResult::Status::optimal);
  // Monotone nonincreasing in epsilon.
  CHECK(sweep[1].gamma <= sweep[0].gamma + 1e-5);
  CHECK(sweep[2].gamma <= sweep[1].gamma + 1e-5);
}
