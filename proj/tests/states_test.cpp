#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "spinboost/entanglement.hpp"
#include "spinboost/kinematics.hpp"
#include "spinboost/linalg.hpp"
#include "spinboost/states.hpp"

using namespace spinboost;
using linalg::Complex;
using linalg::ComplexMatrix;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("bloch spinors") {
    auto [up0, down0] = states::bloch_spinors({0.0, 0.3});
    CHECK(up0(0, 0) == Complex(1.0, 0.0));
    CHECK(up0(1, 0) == Complex(0.0, 0.0));
    CHECK(std::abs(down0(0, 0)) == 0.0);
    CHECK(std::abs(down0(1, 0) + std::polar(1.0, 0.3)) < 1e-15);

    for (double xi : {0.4, 1.3, 2.9}) {
        for (double tau : {0.0, 0.5 * kPi, 2.1}) {
            auto [n, m] = states::bloch_spinors({xi, tau});
            CHECK(std::abs(linalg::inner(n, n) - 1.0) < 1e-15);
            CHECK(std::abs(linalg::inner(m, m) - 1.0) < 1e-15);
            CHECK(std::abs(linalg::inner(n, m)) < 1e-15);
        }
    }
}

TEST_CASE("Bell states at xi=0, tau=0 have the expected components") {
    auto psi = states::bell_states({0.0, 0.0});
    // n = (1, 0), -n = (0, -1)
    const double r = kInvSqrt2;
    CHECK(std::abs(psi[0](0, 0) - r) < 1e-15);
    CHECK(std::abs(psi[0](3, 0) + r) < 1e-15);
    CHECK(std::abs(psi[1](0, 0) - r) < 1e-15);
    CHECK(std::abs(psi[1](3, 0) - r) < 1e-15);
    CHECK(std::abs(psi[2](1, 0) + r) < 1e-15);
    CHECK(std::abs(psi[2](2, 0) - r) < 1e-15);
    CHECK(std::abs(psi[3](1, 0) - r) < 1e-15);
    CHECK(std::abs(psi[3](2, 0) - r) < 1e-15);
    CHECK(std::abs(psi[0](1, 0)) + std::abs(psi[0](2, 0)) == 0.0);
}

TEST_CASE("Bell states are orthonormal for generic orientations") {
    for (double xi : {0.0, 0.9, 1.7, 3.0}) {
        auto psi = states::bell_states({xi, 0.5 * kPi});
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const double expected = (a == b) ? 1.0 : 0.0;
                CHECK(std::abs(linalg::inner(psi[a], psi[b]) - expected) < 1e-14);
            }
    }
}

TEST_CASE("BellMixture validates its weights") {
    CHECK_THROWS_AS(states::BellMixture({0.5, 0.5, 0.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(states::BellMixture({0.5, 0.2, 0.2, 0.2}), std::invalid_argument);
    states::BellMixture m({0.1, 0.7, 0.05, 0.15});
    auto q = m.sorted_descending().weights();
    CHECK(q[0] == 0.7);
    CHECK(q[3] == 0.05);
    CHECK(m[1] == 0.7);
}

TEST_CASE("Bell-diagonal density has the mixture as spectrum") {
    states::BellMixture mix({0.6, 0.25, 0.1, 0.05});
    ComplexMatrix rho = states::bd_density(mix, {1.1, 0.5 * kPi});
    CHECK(std::abs(rho.trace() - 1.0) < 1e-14);
    CHECK((rho - rho.adjoint()).max_abs() < 1e-15);
    auto sys = linalg::hermitian_eig(rho);
    CHECK(std::abs(sys.values[0] - 0.6) < 1e-13);
    CHECK(std::abs(sys.values[1] - 0.25) < 1e-13);
    CHECK(std::abs(sys.values[2] - 0.1) < 1e-13);
    CHECK(std::abs(sys.values[3] - 0.05) < 1e-13);
    CHECK_NOTHROW(linalg::make_density(rho));
}

TEST_CASE("Schmidt pure state") {
    auto geom = states::TwoMomentumGeometry::antiparallel(2.0, 0.3);
    ComplexMatrix psi = states::schmidt_pure_state(0.7, 0.3, {0.8, 0.5 * kPi}, geom);
    CHECK(std::abs(linalg::inner(psi, psi) - 1.0) < 1e-14);

    ComplexMatrix pure = states::schmidt_pure_state(1.0, 0.0, {0.0, 0.0}, geom);
    CHECK(std::abs(pure(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(pure(2, 0)) + std::abs(pure(3, 0)) == 0.0);

    CHECK_THROWS_AS(states::schmidt_pure_state(0.8, 0.3, {0.0, 0.0}, geom), std::invalid_argument);
    CHECK_THROWS_AS(states::schmidt_pure_state(-0.1, 1.1, {0.0, 0.0}, geom), std::invalid_argument);
}

TEST_CASE("boost operator is block-diagonal and unitary") {
    auto geom = states::TwoMomentumGeometry::antiparallel(3.0, 0.7);
    auto boost = kinematics::BoostParameters::x_boost(0.8);
    ComplexMatrix u = states::boost_operator(boost, geom);

    CHECK((u.adjoint() * u - ComplexMatrix::identity(4)).max_abs() < 1e-14);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            CHECK(std::abs(u(i, 2 + j)) == 0.0);
            CHECK(std::abs(u(2 + i, j)) == 0.0);
        }

    ComplexMatrix rest = states::boost_operator(kinematics::BoostParameters::x_boost(0.0), geom);
    CHECK((rest - ComplexMatrix::identity(4)).max_abs() < 1e-14);
}

TEST_CASE("boost preserves orthonormality and the Bell-diagonal spectrum") {
    auto geom = states::TwoMomentumGeometry::in_yz_plane(2.0, 0.4, 5.0, 2.8);
    auto boost = kinematics::BoostParameters::x_boost(0.9);
    auto psi = states::bell_states({1.2, 0.5 * kPi});
    for (int a = 0; a < 4; ++a) {
        ComplexMatrix ba = states::boost_state(psi[a], boost, geom);
        for (int b = 0; b < 4; ++b) {
            ComplexMatrix bb = states::boost_state(psi[b], boost, geom);
            const double expected = (a == b) ? 1.0 : 0.0;
            CHECK(std::abs(linalg::inner(ba, bb) - expected) < 1e-14);
        }
    }

    states::BellMixture mix({0.55, 0.25, 0.15, 0.05});
    ComplexMatrix rho = states::bd_density(mix, {1.2, 0.5 * kPi});
    ComplexMatrix moved = states::boost_density(rho, boost, geom);
    auto sys = linalg::hermitian_eig(moved);
    CHECK(std::abs(sys.values[0] - 0.55) < 1e-12);
    CHECK(std::abs(sys.values[3] - 0.05) < 1e-12);
    CHECK(std::abs(moved.trace() - 1.0) < 1e-13);
}

// The boosted first and third Bell states have component-by-component closed
// forms in zeta = xi - 2 theta and the two Wigner half-angles. In the third
// component of the first state the transform law produces sin(W2/2); the
// easy-to-make sin(W1/2) variant is off by exactly |s1 - s2| cos(zeta/2)/sqrt2,
// so both the correct form and the size of that slip are pinned here.
TEST_CASE("boosted Bell component closed forms") {
    const double xi = 0.9, th = 0.4, tau = 0.5 * kPi;
    const double beta = 0.7, r1 = 3.0, r2 = 5.0;
    auto geom = states::TwoMomentumGeometry::in_yz_plane(r1, th, r2, th + kPi);
    auto boost = kinematics::BoostParameters::x_boost(beta);

    auto w1 = kinematics::wigner_rotation(boost, geom.k1);
    auto w2 = kinematics::wigner_rotation(boost, geom.k2);
    const double c1 = w1.cos_half, s1 = w1.sin_half;
    const double c2 = w2.cos_half, s2 = w2.sin_half;
    CHECK(std::abs(s1 - s2) > 1e-3);  // unequal energies so the slip is visible

    const double z = xi - 2.0 * th;
    const double cz = std::cos(0.5 * z), sz = std::sin(0.5 * z);
    const double cx = std::cos(0.5 * xi), sx = std::sin(0.5 * xi);
    const double r = kInvSqrt2;

    auto psi = states::bell_states({xi, tau});
    ComplexMatrix b1 = states::boost_state(psi[0], boost, geom);
    ComplexMatrix b3 = states::boost_state(psi[2], boost, geom);

    ComplexMatrix disp1_s1_variant = ComplexMatrix::column(
        {r * Complex(cx * c1, -s1 * sz), r * Complex(s1 * cz, sx * c1),
         r * Complex(sx * c2, -s1 * cz), r * Complex(-s2 * sz, -cx * c2)});
    ComplexMatrix disp1 = disp1_s1_variant;
    disp1(2, 0) = r * Complex(sx * c2, -s2 * cz);

    CHECK((b1 - disp1).max_abs() < 1e-12);
    for (std::size_t k : {0u, 1u, 3u})
        CHECK(std::abs(b1(k, 0) - disp1_s1_variant(k, 0)) < 1e-12);
    const double slip = std::abs(b1(2, 0) - disp1_s1_variant(2, 0));
    CHECK(slip > 1e-3);
    CHECK(std::abs(slip - r * std::abs(s1 - s2) * std::abs(cz)) < 1e-12);

    ComplexMatrix disp3 = ComplexMatrix::column(
        {r * Complex(sx * c1, s1 * cz), r * Complex(s1 * sz, -cx * c1),
         r * Complex(cx * c2, s2 * sz), r * Complex(-s2 * cz, sx * c2)});
    CHECK((b3 - disp3).max_abs() < 1e-12);
}

TEST_CASE("normalized_ket") {
    ComplexMatrix v = ComplexMatrix::column({3.0, 4.0});
    ComplexMatrix n = states::normalized_ket(v);
    CHECK(std::abs(n(0, 0) - 0.6) < 1e-15);
    CHECK(std::abs(n(1, 0) - 0.8) < 1e-15);
    CHECK_THROWS_AS(states::normalized_ket(ComplexMatrix::column({0.0, 0.0})), std::invalid_argument);
    CHECK_THROWS_AS(states::normalized_ket(ComplexMatrix(2, 2)), std::invalid_argument);
}
