#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "spinboost/entanglement.hpp"
#include "spinboost/gates.hpp"
#include "spinboost/kinematics.hpp"
#include "spinboost/states.hpp"

using namespace spinboost;
using linalg::Complex;
using linalg::ComplexMatrix;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("lorentz gate blocks") {
    auto g = gates::lorentz_gate(0.0, 0.0);
    CHECK((g.matrix - ComplexMatrix::identity(4)).max_abs() == 0.0);

    auto h = gates::lorentz_gate(kPi / 3.0, kPi / 5.0);
    CHECK((h.matrix.adjoint() * h.matrix - ComplexMatrix::identity(4)).max_abs() < 1e-15);
    CHECK(std::abs(h.matrix(0, 0).real() - std::cos(kPi / 6.0)) < 1e-15);
    CHECK(std::abs(h.matrix(0, 1).real() - std::sin(kPi / 6.0)) < 1e-15);
    CHECK(std::abs(h.matrix(1, 0).real() + std::sin(kPi / 6.0)) < 1e-15);
    CHECK(std::abs(h.matrix(2, 2).real() - std::cos(kPi / 10.0)) < 1e-15);
    CHECK(std::abs(h.matrix(0, 2)) + std::abs(h.matrix(2, 0)) == 0.0);
}

TEST_CASE("cnot-like limit gate") {
    auto g = gates::cnot_limit_gate();
    const double expected[4][4] = {
        {1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, -1.0, 0.0}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(g.matrix(i, j) == Complex(expected[i][j], 0.0));

    // the continuous family reaches it in the (0, pi) corner
    auto near = gates::lorentz_gate(1e-9, kPi - 1e-9);
    CHECK((near.matrix - g.matrix).max_abs() < 1e-8);

    // order four, not two: the square flips the second block's sign
    ComplexMatrix sq = g.matrix * g.matrix;
    ComplexMatrix expected_sq = ComplexMatrix::identity(4);
    expected_sq(2, 2) = -1.0;
    expected_sq(3, 3) = -1.0;
    CHECK((sq - expected_sq).max_abs() == 0.0);

    ComplexMatrix p2up = ComplexMatrix::column({0.0, 0.0, 1.0, 0.0});
    ComplexMatrix twice = sq * p2up;
    CHECK(twice(2, 0) == Complex(-1.0, 0.0));

    ComplexMatrix fourth = sq * sq;
    CHECK((fourth - ComplexMatrix::identity(4)).max_abs() == 0.0);
}

TEST_CASE("gate blocks are realized by a boost on momenta along -z") {
    const double beta = 0.7, r1 = 3.0, r2 = 5.0;
    auto geom = states::TwoMomentumGeometry::parallel(r1, r2, kPi);
    auto boost = kinematics::BoostParameters::x_boost(beta);
    ComplexMatrix u = states::boost_operator(boost, geom);

    auto w1 = kinematics::wigner_rotation(boost, geom.k1);
    auto w2 = kinematics::wigner_rotation(boost, geom.k2);
    auto g = gates::lorentz_gate(w1.omega, w2.omega);
    CHECK((u - g.matrix).max_abs() < 1e-12);
}

TEST_CASE("entangling demo") {
    auto demo = gates::demo_entangle();
    CHECK(demo.concurrence_before < 1e-10);
    CHECK(std::abs(demo.concurrence_after - 1.0) < 1e-10);

    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(demo.output(0, 0) - r) < 1e-15);
    CHECK(std::abs(demo.output(3, 0) + r) < 1e-15);
    CHECK(std::abs(demo.output(1, 0)) + std::abs(demo.output(2, 0)) == 0.0);
    CHECK(std::abs(oracles::pure_concurrence(demo.output) - 1.0) < 1e-14);
}

TEST_CASE("disentangling demo") {
    auto demo = gates::demo_disentangle();
    CHECK(std::abs(demo.concurrence_before - 1.0) < 1e-10);
    CHECK(demo.concurrence_after < 1e-10);

    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(demo.output(0, 0) - r) < 1e-15);
    CHECK(std::abs(demo.output(2, 0) - r) < 1e-15);

    // the output is momentum superposed but spin pure: reduced spin |up><up|
    ComplexMatrix reduced = linalg::partial_trace_first(linalg::projector(demo.output));
    ComplexMatrix up_proj(2, 2);
    up_proj(0, 0) = 1.0;
    CHECK((reduced - up_proj).max_abs() < 1e-14);
}

TEST_CASE("product input with a single momentum stays product") {
    ComplexMatrix p1_up = ComplexMatrix::column({1.0, 0.0, 0.0, 0.0});
    auto demo = gates::demo_entangle(p1_up);
    CHECK(demo.concurrence_before < 1e-12);
    CHECK(demo.concurrence_after < 1e-12);
    CHECK(std::abs(demo.output(0, 0) - 1.0) < 1e-15);
}

TEST_CASE("identity gate preserves concurrence") {
    auto demo = gates::run_gate_demo(gates::lorentz_gate(0.0, 0.0), gates::disentangle_demo_input());
    CHECK(std::abs(demo.concurrence_before - demo.concurrence_after) < 1e-12);
    CHECK(std::abs(demo.concurrence_after - 1.0) < 1e-10);
}
