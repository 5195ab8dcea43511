// Copyright 2026 The qduplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qduplex/core.hpp"
#include "qduplex/rng.hpp"

using namespace qduplex;

namespace {

constexpr double kPi = std::numbers::pi;

PureState random_state(int qubits, RandomStream& rng) {
    const int dim = 1 << qubits;
    std::vector<Complex> a(static_cast<std::size_t>(dim));
    double norm2 = 0.0;
    for (auto& amp : a) {
        amp = Complex(rng.gaussian(), rng.gaussian());
        norm2 += std::norm(amp);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& amp : a) amp *= inv;
    return PureState(std::move(a), qubits);
}

double diff_to_identity(const ComplexMatrix& m) {
    return m.max_abs_diff(ComplexMatrix::identity(m.dim()));
}

}  // namespace

TEST_CASE("pauli matrices square to identity and anticommute") {
    const PauliVector& p = paulis();
    const ComplexMatrix* const sigmas[3] = {&p.sigma_x.matrix(), &p.sigma_y.matrix(),
                                            &p.sigma_z.matrix()};
    for (int i = 0; i < 3; ++i) {
        CHECK(diff_to_identity(*sigmas[i] * *sigmas[i]) < 1e-12);
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            ComplexMatrix anti = *sigmas[i] * *sigmas[j] + *sigmas[j] * *sigmas[i];
            CHECK(anti.max_abs() < 1e-12);
        }
    }
}

TEST_CASE("pauli exponential: zero axis gives the identity") {
    UnitaryOperator u = pauli_exponential({0.0, 0.0, 0.0}, 7.0);
    CHECK(diff_to_identity(u.matrix()) < 1e-15);
}

TEST_CASE("pauli exponential: special angles against the series oracle") {
    // z axis, angle pi: -I.
    UnitaryOperator uz = pauli_exponential({0.0, 0.0, 1.0}, kPi);
    ComplexMatrix minus_i = ComplexMatrix::identity(2).scaled(Complex(-1.0, 0.0));
    CHECK(uz.matrix().max_abs_diff(minus_i) < 1e-12);
    CHECK(uz.matrix().max_abs_diff(oracle::expm(oracle::pauli_generator({0, 0, 1}, kPi))) < 1e-9);

    // x axis, angle pi/2: i * sigma_x.
    UnitaryOperator ux = pauli_exponential({1.0, 0.0, 0.0}, kPi / 2.0);
    ComplexMatrix i_sx(2);
    i_sx.at(0, 1) = Complex(0.0, 1.0);
    i_sx.at(1, 0) = Complex(0.0, 1.0);
    CHECK(ux.matrix().max_abs_diff(i_sx) < 1e-12);
    CHECK(ux.matrix().max_abs_diff(oracle::expm(oracle::pauli_generator({1, 0, 0}, kPi / 2))) <
          1e-9);
}

TEST_CASE("pauli exponential matches the series oracle over random draws") {
    RandomStream rng(20260814);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        std::array<double, 3> c{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        double norm = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
        // Keep the rotation angle within the oracle's validated range.
        double lambda = norm > 0 ? 10.0 * rng.uniform01() / norm : 1.0;
        ComplexMatrix closed = pauli_exponential(c, lambda).matrix();
        ComplexMatrix series = oracle::expm(oracle::pauli_generator(c, lambda));
        worst = std::max(worst, closed.max_abs_diff(series));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("pauli exponential: unitarity, determinant and composition") {
    RandomStream rng(77);
    double worst_unit = 0.0, worst_det = 0.0, worst_comp = 0.0;
    for (int i = 0; i < 10000; ++i) {
        std::array<double, 3> c{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        double lambda = 20.0 * rng.uniform01();
        ComplexMatrix u = pauli_exponential(c, lambda).matrix();
        worst_unit = std::max(worst_unit, diff_to_identity(u * u.adjoint()));
        Complex det = u.at(0, 0) * u.at(1, 1) - u.at(0, 1) * u.at(1, 0);
        worst_det = std::max(worst_det, std::abs(det - Complex(1.0, 0.0)));
        if (i < 200) {
            double l2 = 5.0 * rng.uniform01();
            ComplexMatrix lhs = (pauli_exponential(c, lambda) * pauli_exponential(c, l2)).matrix();
            worst_comp =
                std::max(worst_comp, lhs.max_abs_diff(pauli_exponential(c, lambda + l2).matrix()));
        }
    }
    CHECK(worst_unit < 1e-10);
    CHECK(worst_det < 1e-10);
    CHECK(worst_comp < 1e-9);
}

TEST_CASE("tensor products follow the high-order-first index convention") {
    ComplexMatrix id4 = kronecker(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
    CHECK(diff_to_identity(id4) < 1e-15);

    PureState zero = PureState::basis(1, 0);
    PureState one = PureState::basis(1, 1);
    PureState zo = tensor_product(zero, one);
    REQUIRE(zo.dim() == 4);
    CHECK(std::abs(zo.amp(1) - Complex(1.0, 0.0)) < 1e-15);  // binary 01
    CHECK(std::abs(zo.amp(0)) + std::abs(zo.amp(2)) + std::abs(zo.amp(3)) < 1e-15);

    // sigma_z x sigma_z flips the sign of |01>.
    UnitaryOperator zz = tensor_product(paulis().sigma_z, paulis().sigma_z);
    PureState flipped = apply_unitary(zo, zz);
    CHECK(std::abs(flipped.amp(1) - Complex(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("apply_single_qubit matches the equivalent full-space operator") {
    RandomStream rng(5150);
    for (int i = 0; i < 50; ++i) {
        PureState s = random_state(2, rng);
        std::array<double, 3> c{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        UnitaryOperator u = pauli_exponential(c, rng.uniform01() * 3.0);
        PureState via_target1 = apply_single_qubit(s, u, 1);
        PureState via_kron1 = apply_unitary(s, tensor_product(u, UnitaryOperator::identity(1)));
        CHECK(fidelity(via_target1, via_kron1) > 1.0 - 1e-12);
        PureState via_target2 = apply_single_qubit(s, u, 2);
        PureState via_kron2 = apply_unitary(s, tensor_product(UnitaryOperator::identity(1), u));
        CHECK(fidelity(via_target2, via_kron2) > 1.0 - 1e-12);
    }
}

TEST_CASE("apply_single_qubit on the singlet: known 4-vector expansions") {
    std::vector<Complex> singlet_amps{Complex(0, 0), Complex(1 / std::sqrt(2.0), 0),
                                      Complex(-1 / std::sqrt(2.0), 0), Complex(0, 0)};
    PureState singlet(singlet_amps, 2);

    PureState identity_applied = apply_single_qubit(singlet, UnitaryOperator::identity(1), 1);
    CHECK(fidelity(identity_applied, singlet) > 1.0 - 1e-12);

    // sigma_x on qubit 2: (|00> - |11>)/sqrt2 up to global phase.
    PureState sx2 = apply_single_qubit(singlet, paulis().sigma_x, 2);
    CHECK(fidelity(sx2, bell_state(BellOutcome::PhiMinus)) > 1.0 - 1e-12);

    // sigma_z on qubit 2: -(|01> + |10>)/sqrt2, same ray as PsiPlus.
    PureState sz2 = apply_single_qubit(singlet, paulis().sigma_z, 2);
    CHECK(fidelity(sz2, bell_state(BellOutcome::PsiPlus)) > 1.0 - 1e-12);
    CHECK(std::abs(sz2.amp(1) - Complex(-1 / std::sqrt(2.0), 0.0)) < 1e-12);
}

TEST_CASE("partial trace: entangled, product and mixed inputs") {
    PureState singlet({0.0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0.0}, 2);
    for (int keep = 1; keep <= 2; ++keep) {
        DensityOperator marginal = partial_trace(DensityOperator::from_pure(singlet), keep);
        CHECK(marginal.matrix().max_abs_diff(
                  DensityOperator::maximally_mixed(1).matrix()) < 1e-12);
    }

    PureState zero_one = tensor_product(PureState::basis(1, 0), PureState::basis(1, 1));
    DensityOperator left = partial_trace(DensityOperator::from_pure(zero_one), 1);
    CHECK(left.matrix().max_abs_diff(
              DensityOperator::from_pure(PureState::basis(1, 0)).matrix()) < 1e-12);
    DensityOperator right = partial_trace(DensityOperator::from_pure(zero_one), 2);
    CHECK(right.matrix().max_abs_diff(
              DensityOperator::from_pure(PureState::basis(1, 1)).matrix()) < 1e-12);

    DensityOperator mixed = partial_trace(DensityOperator::maximally_mixed(2), 2);
    CHECK(mixed.matrix().max_abs_diff(DensityOperator::maximally_mixed(1).matrix()) < 1e-12);
}

TEST_CASE("partial trace is linear") {
    RandomStream rng(8675309);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        DensityOperator r1 = DensityOperator::from_pure(random_state(2, rng));
        DensityOperator r2 = DensityOperator::from_pure(random_state(2, rng));
        double w = rng.uniform01();
        for (int keep = 1; keep <= 2; ++keep) {
            ComplexMatrix lhs = partial_trace(r1.mixed_with(r2, w), keep).matrix();
            ComplexMatrix rhs = partial_trace(r1, keep).matrix().scaled(Complex(w, 0)) +
                                partial_trace(r2, keep).matrix().scaled(Complex(1.0 - w, 0));
            worst = std::max(worst, lhs.max_abs_diff(rhs));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("bell measurement: deterministic and balanced cases") {
    RandomStream rng(31337);

    auto [o1, p1] = measure_bell_basis(bell_state(BellOutcome::PsiMinus), rng);
    CHECK(o1 == BellOutcome::PsiMinus);
    CHECK(p1 == doctest::Approx(1.0).epsilon(1e-12));

    auto [o2, p2] = measure_bell_basis(bell_state(BellOutcome::PhiPlus), rng);
    CHECK(o2 == BellOutcome::PhiPlus);
    CHECK(p2 == doctest::Approx(1.0).epsilon(1e-12));

    // |00> overlaps PhiPlus and PhiMinus equally.
    PureState zz = tensor_product(PureState::basis(1, 0), PureState::basis(1, 0));
    std::array<double, 4> probs = bell_probabilities(zz);
    CHECK(probs[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(probs[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(probs[2] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(probs[3] == doctest::Approx(0.0).epsilon(1e-12));
    int seen_phi_plus = 0, seen_phi_minus = 0, n = 10000;
    for (int i = 0; i < n; ++i) {
        auto [o, p] = measure_bell_basis(zz, rng);
        CHECK(p == doctest::Approx(0.5).epsilon(1e-12));
        if (o == BellOutcome::PhiPlus) ++seen_phi_plus;
        if (o == BellOutcome::PhiMinus) ++seen_phi_minus;
    }
    CHECK(seen_phi_plus + seen_phi_minus == n);
    // 3-sigma band around n/2 for a fair coin.
    CHECK(std::abs(seen_phi_plus - n / 2) < 150);
}

TEST_CASE("bell probabilities sum to one on random states") {
    RandomStream rng(99);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        std::array<double, 4> p = bell_probabilities(random_state(2, rng));
        worst = std::max(worst, std::abs(p[0] + p[1] + p[2] + p[3] - 1.0));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("von Neumann entropy: pure, mixed and spectral cases") {
    CHECK(von_neumann_entropy(DensityOperator::from_pure(PureState::basis(1, 0))) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(von_neumann_entropy(DensityOperator::maximally_mixed(1)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // diag(3/4, 1/4): binary entropy of 1/4.
    ComplexMatrix d(2);
    d.at(0, 0) = Complex(0.75, 0.0);
    d.at(1, 1) = Complex(0.25, 0.0);
    CHECK(von_neumann_entropy(DensityOperator(d, 1)) ==
          doctest::Approx(oracle::kH2OfQuarter).epsilon(1e-12));
}

TEST_CASE("entropy is invariant under unitary conjugation") {
    RandomStream rng(424242);
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
        DensityOperator rho = DensityOperator::from_pure(random_state(2, rng))
                                  .mixed_with(DensityOperator::from_pure(random_state(2, rng)),
                                              rng.uniform01());
        std::array<double, 3> c1{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        std::array<double, 3> c2{rng.gaussian(), rng.gaussian(), rng.gaussian()};
        UnitaryOperator u = tensor_product(pauli_exponential(c1, rng.uniform01() * 2.0),
                                           pauli_exponential(c2, rng.uniform01() * 2.0));
        ComplexMatrix conj = u.matrix() * rho.matrix() * u.matrix().adjoint();
        double s0 = von_neumann_entropy(rho);
        double s1 = von_neumann_entropy(DensityOperator(conj, 2));
        worst = std::max(worst, std::abs(s0 - s1));
        CHECK(s0 >= 0.0);
        CHECK(s0 <= 2.0 + 1e-9);
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("jacobi eigenvalues agree with known spectra") {
    // Hand-built Hermitian 4x4 with spectrum {0.4, 0.3, 0.2, 0.1} rotated by
    // a random unitary; the solver must recover the spectrum.
    RandomStream rng(11);
    std::array<double, 3> c1{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    std::array<double, 3> c2{rng.gaussian(), rng.gaussian(), rng.gaussian()};
    UnitaryOperator u = tensor_product(pauli_exponential(c1, 1.3), pauli_exponential(c2, 0.7));
    ComplexMatrix d(4);
    d.at(0, 0) = Complex(0.4, 0);
    d.at(1, 1) = Complex(0.3, 0);
    d.at(2, 2) = Complex(0.2, 0);
    d.at(3, 3) = Complex(0.1, 0);
    ComplexMatrix rotated = u.matrix() * d * u.matrix().adjoint();
    std::vector<double> eig = hermitian_eigenvalues(rotated);
    std::sort(eig.begin(), eig.end());
    REQUIRE(eig.size() == 4);
    CHECK(eig[0] == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(eig[1] == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(eig[2] == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(eig[3] == doctest::Approx(0.4).epsilon(1e-10));
}

TEST_CASE("fidelity basics and global-phase invariance") {
    PureState zero = PureState::basis(1, 0);
    PureState one = PureState::basis(1, 1);
    CHECK(fidelity(zero, zero) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-15));

    PureState plus({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}, 1);
    CHECK(fidelity(zero, plus) == doctest::Approx(0.5).epsilon(1e-12));

    Complex phase = std::polar(1.0, 1.234);
    PureState rotated({phase / std::sqrt(2.0), phase / std::sqrt(2.0)}, 1);
    CHECK(fidelity(plus, rotated) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bloch vectors of the cardinal states") {
    auto near = [](const std::array<double, 3>& v, double x, double y, double z) {
        return std::abs(v[0] - x) < 1e-12 && std::abs(v[1] - y) < 1e-12 &&
               std::abs(v[2] - z) < 1e-12;
    };
    CHECK(near(bloch_vector(DensityOperator::from_pure(PureState::basis(1, 0))), 0, 0, 1));
    CHECK(near(bloch_vector(DensityOperator::maximally_mixed(1)), 0, 0, 0));
    PureState plus({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}, 1);
    CHECK(near(bloch_vector(DensityOperator::from_pure(plus)), 1, 0, 0));
}

TEST_CASE("invariant violations are rejected") {
    CHECK_THROWS_AS(PureState({1.0, 1.0}, 1), std::invalid_argument);          // not normalized
    CHECK_THROWS_AS(PureState({1.0, 0.0, 0.0}, 2), std::invalid_argument);     // wrong length
    CHECK_THROWS_AS(UnitaryOperator(ComplexMatrix(2), 1), std::invalid_argument);  // zero matrix

    ComplexMatrix not_density(2);
    not_density.at(0, 0) = Complex(0.9, 0.0);
    not_density.at(1, 1) = Complex(0.9, 0.0);
    CHECK_THROWS_AS(DensityOperator(not_density, 1), std::invalid_argument);  // trace 1.8

    ComplexMatrix non_hermitian(2);
    non_hermitian.at(0, 0) = Complex(0.5, 0.0);
    non_hermitian.at(1, 1) = Complex(0.5, 0.0);
    non_hermitian.at(0, 1) = Complex(0.3, 0.0);
    CHECK_THROWS_AS(DensityOperator(non_hermitian, 1), std::invalid_argument);

    PureState two = tensor_product(PureState::basis(1, 0), PureState::basis(1, 0));
    CHECK_THROWS_AS(apply_single_qubit(two, UnitaryOperator::identity(1), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(DensityOperator::maximally_mixed(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(tensor_product(two, PureState::basis(1, 0)), std::invalid_argument);
}

TEST_CASE("series oracle sanity: the plain unscaled series is insufficient") {
    // At rotation angle 10 a bare 30-term Taylor series is off by far more
    // than the comparison tolerance; the scaled oracle stays tight. This
    // guards the oracle itself against silent weakening.
    std::array<double, 3> c{0.0, 0.0, 1.0};
    ComplexMatrix x = oracle::pauli_generator(c, 10.0);
    ComplexMatrix bare = ComplexMatrix::identity(2);
    ComplexMatrix term = ComplexMatrix::identity(2);
    for (int k = 1; k <= 30; ++k) {
        term = term * x.scaled(Complex(1.0 / k, 0.0));
        bare = bare + term;
    }
    ComplexMatrix truth = pauli_exponential(c, 10.0).matrix();
    CHECK(bare.max_abs_diff(truth) > 1e-6);
    CHECK(oracle::expm(x).max_abs_diff(truth) < 1e-9);
}
