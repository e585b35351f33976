// Copyright 2026 The entlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "entlab/closed_form.hpp"
#include "entlab/states.hpp"
#include "test_support.hpp"

using namespace entlab;

TEST_CASE("bell states in the |11>,|10>,|01>,|00> ordering") {
    const auto psi_plus = bell_state(BellKind::PsiPlus).amplitudes();
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(psi_plus[1] - Complex(s)) < 1e-15); // |10>
    CHECK(std::abs(psi_plus[2] - Complex(s)) < 1e-15); // |01>

    const auto phi_minus = bell_state(BellKind::PhiMinus).amplitudes();
    CHECK(std::abs(phi_minus[3] - Complex(s)) < 1e-15);  // |00>
    CHECK(std::abs(phi_minus[0] + Complex(s)) < 1e-15);  // -|11>

    for (auto kind : {BellKind::PsiPlus, BellKind::PsiMinus, BellKind::PhiPlus,
                      BellKind::PhiMinus}) {
        const PureState state = bell_state(kind);
        double n2 = 0.0;
        for (const auto& a : state.amplitudes()) n2 += std::norm(a);
        CHECK(n2 == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("werner_state: f = 1/4 is maximally mixed") {
    const DensityMatrix rho = werner_state(0.25);
    ComplexMatrix expect = ComplexMatrix::identity(4);
    expect *= Complex(0.25);
    CHECK(rho.matrix().approx_equal(expect, 1e-14));
}

TEST_CASE("werner_state: f = 1 is the singlet projector") {
    const DensityMatrix rho = werner_state(1.0);
    CHECK(rho.matrix().approx_equal(bell_state(BellKind::PsiMinus).projector(), 1e-14));
}

TEST_CASE("werner_state: spectrum at f = 0.8") {
    // one eigenvalue f on the singlet, (1-f)/3 on the rest
    const DensityMatrix rho = werner_state(0.8);
    const HermitianEig eig = eig_hermitian(rho.matrix());
    CHECK(eig.values[3] == doctest::Approx(0.8).epsilon(1e-12));
    for (int k = 0; k < 3; ++k)
        CHECK(eig.values[k] == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
}

TEST_CASE("werner_state rejects out-of-range fractions") {
    CHECK_THROWS_AS(werner_state(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(werner_state(1.01), std::invalid_argument);
}

TEST_CASE("ye_state weights at the endpoints") {
    const DensityMatrix lo = ye_state(0.0);
    CHECK(lo.element(0, 0).real() == doctest::Approx(1.0 / 3.0)); // |11>
    CHECK(std::abs(lo.element(3, 3)) < 1e-15);                    // |00>

    const DensityMatrix hi = ye_state(1.0);
    CHECK(std::abs(hi.element(0, 0)) < 1e-15);
    CHECK(hi.element(3, 3).real() == doctest::Approx(1.0 / 3.0));

    for (double alpha : {0.0, 0.3, 0.7, 1.0})
        CHECK(std::abs(ye_state(alpha).matrix().trace() - Complex(1.0)) < 1e-14);
    CHECK_THROWS_AS(ye_state(1.2), std::invalid_argument);
}

TEST_CASE("egge_state endpoints, concurrence and purity") {
    const DensityMatrix a0 = egge_state(0.0);
    CHECK(a0.element(1, 1).real() == doctest::Approx(1.0)); // |10><10|

    const DensityMatrix half = egge_state(0.5);
    CHECK(concurrence(half) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(half.purity() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(egge_state(-0.5), std::invalid_argument);
}

TEST_CASE("concurrence of named states") {
    CHECK(concurrence(DensityMatrix::from_pure(bell_state(BellKind::PsiPlus))) ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(concurrence(werner_state(0.25)) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(concurrence(werner_state(0.8)) == doctest::Approx(0.6).epsilon(1e-9));
    // cross-check against the independent square-root-based evaluation
    CHECK(test::wootters_oracle_signed(werner_state(0.8)) ==
          doctest::Approx(0.6).epsilon(1e-8));
}

TEST_CASE("concurrence of Werner states follows max{0, 2f-1}") {
    for (int i = 0; i <= 20; ++i) {
        const double f = i / 20.0;
        CHECK(std::abs(concurrence(werner_state(f)) - std::max(0.0, 2.0 * f - 1.0)) < 1e-9);
    }
}

TEST_CASE("concurrence is invariant under local unitaries") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = test::random_density_matrix(rng, {2, 2});
        const ComplexMatrix u = kron(test::random_single_qubit_unitary(rng),
                                     test::random_single_qubit_unitary(rng));
        ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
        const DensityMatrix rho_rot = DensityMatrix::from_matrix({2, 2}, std::move(rotated));
        CHECK(std::abs(concurrence(rho) - concurrence(rho_rot)) < 1e-8);
    }
}

TEST_CASE("concurrence of product states vanishes") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix a = test::random_density_matrix(rng, {2});
        const DensityMatrix b = test::random_density_matrix(rng, {2});
        const DensityMatrix prod =
            DensityMatrix::from_matrix({2, 2}, kron(a.matrix(), b.matrix()));
        CHECK(concurrence(prod) < 1e-9);
    }
}

TEST_CASE("concurrence agrees with the square-root oracle on random states") {
    std::mt19937 rng(107);
    for (int trial = 0; trial < 25; ++trial) {
        const DensityMatrix rho = test::random_density_matrix(rng, {2, 2});
        CHECK(std::abs(concurrence_signed(rho) - test::wootters_oracle_signed(rho)) < 1e-8);
    }
}

TEST_CASE("fidelity examples") {
    const PureState psi_minus = bell_state(BellKind::PsiMinus);
    CHECK(fidelity(psi_minus, DensityMatrix::from_pure(psi_minus)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(bell_state(BellKind::PsiPlus), werner_state(0.25)) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity(psi_minus, werner_state(0.8)) ==
          doctest::Approx(std::sqrt(0.8)).epsilon(1e-12));
}

TEST_CASE("fidelity of a pure state with its own projector is one") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = test::random_complex_matrix(rng, 4, 1);
        double n2 = 0.0;
        for (int r = 0; r < 4; ++r) n2 += std::norm(g(r, 0));
        std::vector<Complex> amp(4);
        for (int r = 0; r < 4; ++r) amp[r] = g(r, 0) / std::sqrt(n2);
        const PureState psi({2, 2}, amp);
        CHECK(fidelity(psi, DensityMatrix::from_pure(psi)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("partial_trace of a Bell state is maximally mixed") {
    const DensityMatrix bell = DensityMatrix::from_pure(bell_state(BellKind::PsiPlus));
    const DensityMatrix reduced = partial_trace(bell, {0});
    ComplexMatrix expect = ComplexMatrix::identity(2);
    expect *= Complex(0.5);
    CHECK(reduced.matrix().approx_equal(expect, 1e-12));
}

TEST_CASE("partial_trace of a product recovers the factor") {
    std::mt19937 rng(113);
    const DensityMatrix a = test::random_density_matrix(rng, {2});
    const DensityMatrix b = test::random_density_matrix(rng, {2});
    const DensityMatrix prod = DensityMatrix::from_matrix({2, 2}, kron(a.matrix(), b.matrix()));
    CHECK(partial_trace(prod, {0}).matrix().approx_equal(a.matrix(), 1e-12));
    CHECK(partial_trace(prod, {1}).matrix().approx_equal(b.matrix(), 1e-12));
}

TEST_CASE("partial_trace preserves trace and composes") {
    std::mt19937 rng(127);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = test::random_density_matrix(rng, {2, 2, 2});
        const DensityMatrix joint = partial_trace(rho, {1});
        CHECK(std::abs(joint.matrix().trace() - Complex(1.0)) < 1e-12);
        const DensityMatrix step1 = partial_trace(rho, {0, 1});
        const DensityMatrix step2 = partial_trace(step1, {1});
        CHECK(step2.matrix().approx_equal(joint.matrix(), 1e-12));
    }
    CHECK_THROWS_AS(partial_trace(werner_state(0.5), {}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(werner_state(0.5), {2}), std::invalid_argument);
}

TEST_CASE("bloch_vector conventions") {
    ComplexMatrix ground(2, 2);
    ground(1, 1) = 1.0; // |0><0|
    const auto r0 = bloch_vector(DensityMatrix::from_matrix({2}, std::move(ground)));
    CHECK(r0.x == doctest::Approx(0.0));
    CHECK(r0.y == doctest::Approx(0.0));
    CHECK(r0.z == doctest::Approx(-1.0)); // ground state points down

    ComplexMatrix mixed = ComplexMatrix::identity(2);
    mixed *= Complex(0.5);
    const auto rm = bloch_vector(DensityMatrix::from_matrix({2}, std::move(mixed)));
    CHECK(std::abs(rm.x) < 1e-14);
    CHECK(std::abs(rm.y) < 1e-14);
    CHECK(std::abs(rm.z) < 1e-14);

    // driven-qubit steady state at critical damping
    const auto rs = bloch_vector(closed_form::single_qubit_steady(0.25, 1.0));
    CHECK(rs.y == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
    CHECK(rs.z == doctest::Approx(-8.0 / 9.0).epsilon(1e-12));
    CHECK(std::abs(rs.x) < 1e-14);
}

TEST_CASE("is_x_form classification") {
    CHECK(is_x_form(werner_state(0.8), 1e-12));
    CHECK(is_x_form(werner_state(0.25), 1e-12)); // diagonal
    DensityMatrix rho = werner_state(0.8);
    ComplexMatrix m = rho.matrix();
    m(0, 1) += 0.04; // <11|.|10>
    m(1, 0) += 0.04;
    CHECK_FALSE(is_x_form(DensityMatrix::from_matrix({2, 2}, std::move(m)), 1e-6));
}

TEST_CASE("DensityMatrix invariants are enforced") {
    ComplexMatrix not_normalized = ComplexMatrix::identity(4);
    CHECK_THROWS_AS(DensityMatrix::from_matrix({2, 2}, std::move(not_normalized)),
                    std::invalid_argument);

    ComplexMatrix not_psd(2, 2);
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    CHECK_THROWS_AS(DensityMatrix::from_matrix({2}, std::move(not_psd)),
                    std::invalid_argument);

    ComplexMatrix not_hermitian(2, 2, {0.5, 0.1, 0.2, 0.5});
    CHECK_THROWS_AS(DensityMatrix::from_matrix({2}, std::move(not_hermitian)),
                    std::invalid_argument);

    CHECK_THROWS_AS(PureState({2}, {Complex(0.5), Complex(0.0)}), std::invalid_argument);
}
