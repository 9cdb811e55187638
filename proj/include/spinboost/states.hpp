#pragma once

#include <array>
#include <numbers>
#include <utility>

#include "spinboost/kinematics.hpp"
#include "spinboost/linalg.hpp"

namespace spinboost::states {

// Bloch direction of the spin quantization axis: polar angle xi, azimuth tau.
struct SpinOrientation {
    double xi = 0.0;
    double tau = 0.5 * std::numbers::pi;
};

// Weights of the four Bell projectors; validated on construction.
class BellMixture {
public:
    explicit BellMixture(const std::array<double, 4>& weights);
    const std::array<double, 4>& weights() const { return p_; }
    double operator[](std::size_t i) const { return p_[i]; }
    BellMixture sorted_descending() const;

private:
    std::array<double, 4> p_{};
};

// The two momentum branches entering a single-particle spin-momentum state.
struct TwoMomentumGeometry {
    kinematics::ParticleKinematics k1;
    kinematics::ParticleKinematics k2;

    // opposite momenta in the yz plane, equal energies
    static TwoMomentumGeometry antiparallel(double energy_ratio, double theta);
    // same direction, independently chosen energies
    static TwoMomentumGeometry parallel(double energy_ratio1, double energy_ratio2, double theta);
    static TwoMomentumGeometry in_yz_plane(double energy_ratio1, double theta1,
                                           double energy_ratio2, double theta2);
};

// |n> = (cos xi/2, e^{i tau} sin xi/2), |-n> = (sin xi/2, -e^{i tau} cos xi/2)
std::pair<linalg::ComplexMatrix, linalg::ComplexMatrix> bloch_spinors(const SpinOrientation& s);

// Basis order throughout: {|p1,up>, |p1,down>, |p2,up>, |p2,down>},
// momentum in the slow (first) tensor slot.
//   psi1 = (|p1>|n>  + |p2>|-n>)/sqrt2     psi2 = (|p1>|n>  - |p2>|-n>)/sqrt2
//   psi3 = (|p2>|n>  + |p1>|-n>)/sqrt2     psi4 = (|p2>|n>  - |p1>|-n>)/sqrt2
std::array<linalg::ComplexMatrix, 4> bell_states(const SpinOrientation& s);

// sum_i P_i |psi_i><psi_i|
linalg::ComplexMatrix bd_density(const BellMixture& mixture, const SpinOrientation& s);

// sqrt(l1) |p1>|n> + sqrt(l2) |p2>|-n>, with l1 + l2 = 1. The geometry argument
// fixes which momenta the branches refer to; it only matters once the state is
// boosted.
linalg::ComplexMatrix schmidt_pure_state(double lambda1, double lambda2,
                                         const SpinOrientation& s,
                                         const TwoMomentumGeometry&);

// Block-diagonal spin rotation diag(U1, U2) induced by the boost, where U_i is
// the Wigner unitary of momentum branch i. Boosted momentum labels are
// identified with the unboosted slots, so this is exactly unitary.
linalg::ComplexMatrix boost_operator(const kinematics::BoostParameters& boost,
                                     const TwoMomentumGeometry& geometry);

linalg::ComplexMatrix boost_state(const linalg::ComplexMatrix& ket,
                                  const kinematics::BoostParameters& boost,
                                  const TwoMomentumGeometry& geometry);

linalg::ComplexMatrix boost_density(const linalg::ComplexMatrix& rho,
                                    const kinematics::BoostParameters& boost,
                                    const TwoMomentumGeometry& geometry);

linalg::ComplexMatrix normalized_ket(const linalg::ComplexMatrix& ket);

}  // namespace spinboost::states
