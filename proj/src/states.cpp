#include "spinboost/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinboost::states {

using linalg::Complex;
using linalg::ComplexMatrix;

BellMixture::BellMixture(const std::array<double, 4>& weights) : p_(weights) {
    double sum = 0.0;
    for (double w : p_) {
        if (!(w >= 0.0)) throw std::invalid_argument("Bell weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::invalid_argument("Bell weights must sum to 1");
}

BellMixture BellMixture::sorted_descending() const {
    std::array<double, 4> q = p_;
    std::sort(q.begin(), q.end(), std::greater<>());
    return BellMixture(q);
}

TwoMomentumGeometry TwoMomentumGeometry::antiparallel(double energy_ratio, double theta) {
    return {kinematics::ParticleKinematics::in_yz_plane(energy_ratio, theta),
            kinematics::ParticleKinematics::in_yz_plane(energy_ratio, theta + std::numbers::pi)};
}

TwoMomentumGeometry TwoMomentumGeometry::parallel(double energy_ratio1, double energy_ratio2,
                                                  double theta) {
    return {kinematics::ParticleKinematics::in_yz_plane(energy_ratio1, theta),
            kinematics::ParticleKinematics::in_yz_plane(energy_ratio2, theta)};
}

TwoMomentumGeometry TwoMomentumGeometry::in_yz_plane(double energy_ratio1, double theta1,
                                                     double energy_ratio2, double theta2) {
    return {kinematics::ParticleKinematics::in_yz_plane(energy_ratio1, theta1),
            kinematics::ParticleKinematics::in_yz_plane(energy_ratio2, theta2)};
}

std::pair<ComplexMatrix, ComplexMatrix> bloch_spinors(const SpinOrientation& s) {
    const double c = std::cos(0.5 * s.xi);
    const double n = std::sin(0.5 * s.xi);
    const Complex phase = std::polar(1.0, s.tau);
    ComplexMatrix up = ComplexMatrix::column({c, phase * n});
    ComplexMatrix down = ComplexMatrix::column({n, -phase * c});
    return {up, down};
}

std::array<ComplexMatrix, 4> bell_states(const SpinOrientation& s) {
    auto [n, m] = bloch_spinors(s);
    const double r = 1.0 / std::sqrt(2.0);
    auto build = [&](Complex a, const ComplexMatrix& p1_spinor, Complex b,
                     const ComplexMatrix& p2_spinor) {
        return ComplexMatrix::column({a * r * p1_spinor(0, 0), a * r * p1_spinor(1, 0),
                                      b * r * p2_spinor(0, 0), b * r * p2_spinor(1, 0)});
    };
    return {build(1.0, n, 1.0, m),     // (|p1>|n>  + |p2>|-n>)/sqrt2
            build(1.0, n, -1.0, m),    // (|p1>|n>  - |p2>|-n>)/sqrt2
            build(1.0, m, 1.0, n),     // (|p2>|n>  + |p1>|-n>)/sqrt2
            build(-1.0, m, 1.0, n)};   // (|p2>|n>  - |p1>|-n>)/sqrt2
}

linalg::ComplexMatrix bd_density(const BellMixture& mixture, const SpinOrientation& s) {
    auto psi = bell_states(s);
    ComplexMatrix rho(4, 4);
    for (std::size_t i = 0; i < 4; ++i) rho += mixture[i] * linalg::projector(psi[i]);
    return rho;
}

ComplexMatrix schmidt_pure_state(double lambda1, double lambda2, const SpinOrientation& s,
                                 const TwoMomentumGeometry&) {
    if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0) || std::abs(lambda1 + lambda2 - 1.0) > 1e-12)
        throw std::invalid_argument("Schmidt weights must be non-negative and sum to 1");
    auto [n, m] = bloch_spinors(s);
    const double a = std::sqrt(lambda1);
    const double b = std::sqrt(lambda2);
    return ComplexMatrix::column({a * n(0, 0), a * n(1, 0), b * m(0, 0), b * m(1, 0)});
}

ComplexMatrix boost_operator(const kinematics::BoostParameters& boost,
                             const TwoMomentumGeometry& geometry) {
    const ComplexMatrix u1 = kinematics::wigner_unitary(kinematics::wigner_rotation(boost, geometry.k1));
    const ComplexMatrix u2 = kinematics::wigner_unitary(kinematics::wigner_rotation(boost, geometry.k2));
    ComplexMatrix u(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            u(i, j) = u1(i, j);
            u(2 + i, 2 + j) = u2(i, j);
        }
    return u;
}

ComplexMatrix boost_state(const ComplexMatrix& ket, const kinematics::BoostParameters& boost,
                          const TwoMomentumGeometry& geometry) {
    return boost_operator(boost, geometry) * ket;
}

ComplexMatrix boost_density(const ComplexMatrix& rho, const kinematics::BoostParameters& boost,
                            const TwoMomentumGeometry& geometry) {
    const ComplexMatrix u = boost_operator(boost, geometry);
    return u * rho * u.adjoint();
}

ComplexMatrix normalized_ket(const ComplexMatrix& ket) {
    if (ket.cols() != 1) throw std::invalid_argument("expected a column vector");
    const double n = ket.frobenius_norm();
    if (n < 1e-14) throw std::invalid_argument("cannot normalize a zero state");
    return (1.0 / n) * ket;
}

}  // namespace spinboost::states
