#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "spinboost/kinematics.hpp"

using namespace spinboost;
using kinematics::BoostParameters;
using kinematics::ParticleKinematics;
using kinematics::Vec3;
using linalg::Complex;
using linalg::ComplexMatrix;

TEST_CASE("vector helpers") {
    Vec3 x{1.0, 0.0, 0.0}, y{0.0, 1.0, 0.0}, z{0.0, 0.0, 1.0};
    CHECK(kinematics::dot(x, y) == 0.0);
    Vec3 c = kinematics::cross(x, y);
    CHECK(c[0] == z[0]);
    CHECK(c[1] == z[1]);
    CHECK(c[2] == z[2]);
    CHECK(kinematics::norm(Vec3{3.0, 4.0, 0.0}) == 5.0);
    Vec3 n = kinematics::normalized(Vec3{0.0, 0.0, 2.5});
    CHECK(n[2] == 1.0);
    CHECK_THROWS_AS(kinematics::normalized(Vec3{0.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("rapidity from speed") {
    CHECK(kinematics::rapidity_from_beta(0.0) == 0.0);
    CHECK(std::abs(kinematics::rapidity_from_beta(0.6) - oracles::kAtanh06) < 1e-15);
    CHECK_THROWS_AS(kinematics::rapidity_from_beta(-0.1), std::domain_error);
    CHECK_THROWS_AS(kinematics::rapidity_from_beta(1.0), std::domain_error);
    CHECK_THROWS_AS(kinematics::rapidity_from_beta(1.5), std::domain_error);
    CHECK_THROWS_AS(kinematics::rapidity_from_beta(std::nan("")), std::domain_error);
}

TEST_CASE("rapidity from energy ratio") {
    CHECK(kinematics::rapidity_from_energy_ratio(1.0) == 0.0);
    CHECK(std::abs(kinematics::rapidity_from_energy_ratio(2.0) - oracles::kAcosh2) < 1e-15);
    CHECK_THROWS_AS(kinematics::rapidity_from_energy_ratio(0.99), std::domain_error);

    // near threshold acosh(1 + eps) ~ sqrt(2 eps); the subtraction below is
    // exact in doubles, so the reference itself carries no cancellation error
    const double r = 1.0 + 1e-12;
    const double expected = std::sqrt(2.0 * (r - 1.0));
    CHECK(std::abs(kinematics::rapidity_from_energy_ratio(r) / expected - 1.0) < 1e-6);
}

TEST_CASE("wigner rotation frozen perpendicular value") {
    auto boost = BoostParameters::x_boost(0.6);
    auto particle = ParticleKinematics::in_yz_plane(2.0, 0.0);  // p along z, boost along x
    auto w = kinematics::wigner_rotation(boost, particle);
    CHECK(std::abs(w.omega - oracles::kOmegaBeta06Ratio2Perp) < 1e-14);
    CHECK(std::abs(w.cos_half * w.cos_half + w.sin_half * w.sin_half - 1.0) < 1e-14);
    // axis = e x p / |..| = x-hat cross z-hat = -y-hat
    CHECK(std::abs(w.axis[0]) < 1e-15);
    CHECK(std::abs(w.axis[1] + 1.0) < 1e-15);
    CHECK(std::abs(w.axis[2]) < 1e-15);
}

TEST_CASE("degenerate geometries give zero rotation") {
    auto particle = ParticleKinematics::along(Vec3{0.0, 0.0, 1.0}, 3.0);

    auto w0 = kinematics::wigner_rotation(BoostParameters::along(Vec3{0.0, 1.0, 1.0}, 0.0), particle);
    CHECK(w0.omega == 0.0);
    CHECK(std::abs(w0.cos_half - 1.0) < 1e-15);

    auto wpar = kinematics::wigner_rotation(BoostParameters::along(Vec3{0.0, 0.0, 1.0}, 0.8), particle);
    CHECK(std::abs(wpar.omega) < 1e-12);
    CHECK(wpar.axis[2] == 1.0);

    auto wanti = kinematics::wigner_rotation(BoostParameters::along(Vec3{0.0, 0.0, -1.0}, 0.8), particle);
    CHECK(std::abs(wanti.omega) < 1e-12);

    auto wrest = kinematics::wigner_rotation(BoostParameters::x_boost(0.7),
                                             ParticleKinematics::along(Vec3{0.0, 0.0, 1.0}, 1.0));
    CHECK(std::abs(wrest.omega) < 1e-12);
}

TEST_CASE("rotation angle grows with boost speed") {
    auto particle = ParticleKinematics::in_yz_plane(2.0, 0.0);
    double prev = 0.0;
    for (double beta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        auto w = kinematics::wigner_rotation(BoostParameters::x_boost(beta), particle);
        CHECK(w.omega > prev);
        prev = w.omega;
    }
}

TEST_CASE("half-angle normalization across a parameter grid") {
    double worst = 0.0;
    for (double beta : {0.0, 0.2, 0.5, 0.9, 0.99, 0.9999}) {
        for (double ratio : {1.0, 1.5, 4.0, 50.0}) {
            for (double d : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
                auto boost = BoostParameters::x_boost(beta);
                Vec3 p{d, std::sqrt(std::max(0.0, 1.0 - d * d)), 0.0};
                if (kinematics::norm(p) < 1e-14) continue;
                auto w = kinematics::wigner_rotation(boost, ParticleKinematics::along(p, ratio));
                worst = std::max(worst,
                                 std::abs(w.cos_half * w.cos_half + w.sin_half * w.sin_half - 1.0));
            }
        }
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("ultra-relativistic perpendicular limit tan(omega/2) -> 1") {
    // For a perpendicular boost, 1 - tan(omega/2) falls off like
    // 2 exp(-alpha) + 2 exp(-delta) ~ sqrt(2(1-beta)) + 2m/E, so reaching
    // 1e-6 requires beta within ~5e-13 of 1 even at huge E/m.
    auto particle = ParticleKinematics::in_yz_plane(1e9, 0.0);

    auto w = kinematics::wigner_rotation(BoostParameters::x_boost(1.0 - 1e-13), particle);
    CHECK(std::abs(w.sin_half / w.cos_half - 1.0) < 1e-6);

    auto w9 = kinematics::wigner_rotation(BoostParameters::x_boost(1.0 - 1e-9), particle);
    const double residual = 1.0 - w9.sin_half / w9.cos_half;
    const double predicted = std::sqrt(2.0 * 1e-9);
    CHECK(std::abs(residual / predicted - 1.0) < 0.02);
}

TEST_CASE("wigner unitary is unitary and matches the axis-angle form") {
    auto boost = BoostParameters::along(Vec3{1.0, 2.0, -0.5}, 0.85);
    auto particle = ParticleKinematics::along(Vec3{-0.3, 1.0, 0.7}, 3.5);
    auto w = kinematics::wigner_rotation(boost, particle);

    ComplexMatrix u = kinematics::wigner_unitary(w);
    CHECK((u.adjoint() * u - ComplexMatrix::identity(2)).max_abs() < 1e-14);
    CHECK(std::abs(u.trace().real() - 2.0 * w.cos_half) < 1e-14);

    ComplexMatrix v = kinematics::wigner_unitary(w.omega, w.axis);
    CHECK((u - v).max_abs() < 1e-13);
}

TEST_CASE("unitary blocks for in-plane momenta are real rotations") {
    // boost along x, momentum along +z: axis -y, so U = [[c, -s], [s, c]]
    auto w = kinematics::wigner_rotation(BoostParameters::x_boost(0.7),
                                         ParticleKinematics::in_yz_plane(2.0, 0.0));
    ComplexMatrix u = kinematics::wigner_unitary(w);
    CHECK(std::abs(u(0, 0).real() - w.cos_half) < 1e-15);
    CHECK(std::abs(u(0, 1).real() + w.sin_half) < 1e-15);
    CHECK(std::abs(u(1, 0).real() - w.sin_half) < 1e-15);
    CHECK(std::abs(u(0, 0).imag()) == 0.0);
    CHECK(std::abs(u(0, 1).imag()) == 0.0);

    // momentum along -z flips the axis, transposing the block
    auto wd = kinematics::wigner_rotation(BoostParameters::x_boost(0.7),
                                          ParticleKinematics::in_yz_plane(2.0, std::numbers::pi));
    ComplexMatrix ud = kinematics::wigner_unitary(wd);
    CHECK(std::abs(ud(0, 1).real() - wd.sin_half) < 1e-15);
    CHECK(std::abs(ud(1, 0).real() + wd.sin_half) < 1e-15);
    CHECK(std::abs(w.omega - wd.omega) < 1e-13);
}

TEST_CASE("rotation_about round trip") {
    Vec3 axis{0.0, -1.0, 0.0};
    auto w = kinematics::rotation_about(0.8, axis);
    CHECK(w.omega == 0.8);
    CHECK(std::abs(w.cos_half - std::cos(0.4)) == 0.0);
    CHECK(std::abs(w.sin_half - std::sin(0.4)) == 0.0);
}
