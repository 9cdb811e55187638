#pragma once

#include <array>

#include "spinboost/linalg.hpp"

namespace spinboost::kinematics {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 normalized(const Vec3& v);  // throws on (near-)zero input

// rapidity alpha with tanh(alpha) = beta, beta in [0, 1)
double rapidity_from_beta(double beta);
// rapidity delta with cosh(delta) = E/m, ratio >= 1
double rapidity_from_energy_ratio(double ratio);

struct BoostParameters {
    double beta = 0.0;
    double alpha = 0.0;   // atanh(beta)
    Vec3 e_hat{1.0, 0.0, 0.0};

    static BoostParameters along(const Vec3& direction, double beta);
    static BoostParameters x_boost(double beta) { return along({1.0, 0.0, 0.0}, beta); }
};

struct ParticleKinematics {
    double energy_ratio = 1.0;  // E/m
    double delta = 0.0;         // acosh(E/m)
    Vec3 p_hat{0.0, 0.0, 1.0};
    double theta = 0.0;         // polar angle in the yz plane, p_hat = (0, sin, cos)

    static ParticleKinematics in_yz_plane(double energy_ratio, double theta);
    static ParticleKinematics along(const Vec3& direction, double energy_ratio);
};

struct WignerRotation {
    double cos_half = 1.0;  // cos(omega/2), always > 0 here
    double sin_half = 0.0;  // sin(omega/2) >= 0
    Vec3 axis{0.0, 0.0, 1.0};
    double omega = 0.0;     // in [0, pi)
};

// Spin-1/2 rotation induced on a massive particle's spin when the frame is
// boosted: half-angle form
//   cos(omega/2)         = (ch ch' + sh sh' e.p) / sqrt(Q)
//   sin(omega/2) * axis  = sh sh' (e x p) / sqrt(Q)
// with ch = cosh(alpha/2), sh = sinh(alpha/2) for the boost rapidity and
// ch', sh' the same at half the particle rapidity, and
//   Q = 1/2 + 1/2 cosh(alpha) cosh(delta) + 1/2 sinh(alpha) sinh(delta) e.p .
// For e_hat parallel to p_hat the rotation degenerates to omega = 0 and the
// axis is fixed to +z.
WignerRotation wigner_rotation(const BoostParameters& boost, const ParticleKinematics& particle);

// cos(omega/2) I + i sin(omega/2) (axis . sigma)
linalg::ComplexMatrix wigner_unitary(const WignerRotation& rotation);
linalg::ComplexMatrix wigner_unitary(double omega, const Vec3& axis);

WignerRotation rotation_about(double omega, const Vec3& axis);

}  // namespace spinboost::kinematics
