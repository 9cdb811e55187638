#include "spinboost/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace spinboost::kinematics {

double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 normalized(const Vec3& v) {
    const double n = norm(v);
    if (n < 1e-14) throw std::domain_error("cannot normalize a zero direction");
    return {v[0] / n, v[1] / n, v[2] / n};
}

double rapidity_from_beta(double beta) {
    if (!(beta >= 0.0) || beta >= 1.0)
        throw std::domain_error("boost speed must satisfy 0 <= beta < 1");
    return std::atanh(beta);
}

double rapidity_from_energy_ratio(double ratio) {
    if (!(ratio >= 1.0))
        throw std::domain_error("energy ratio E/m must be >= 1");
    return std::acosh(ratio);
}

BoostParameters BoostParameters::along(const Vec3& direction, double beta) {
    BoostParameters b;
    b.e_hat = normalized(direction);
    b.alpha = rapidity_from_beta(beta);
    b.beta = beta;
    return b;
}

ParticleKinematics ParticleKinematics::in_yz_plane(double energy_ratio, double theta) {
    ParticleKinematics k;
    k.delta = rapidity_from_energy_ratio(energy_ratio);
    k.energy_ratio = energy_ratio;
    k.theta = theta;
    k.p_hat = {0.0, std::sin(theta), std::cos(theta)};
    return k;
}

ParticleKinematics ParticleKinematics::along(const Vec3& direction, double energy_ratio) {
    ParticleKinematics k;
    k.delta = rapidity_from_energy_ratio(energy_ratio);
    k.energy_ratio = energy_ratio;
    k.p_hat = normalized(direction);
    k.theta = std::atan2(k.p_hat[1], k.p_hat[2]);
    return k;
}

WignerRotation wigner_rotation(const BoostParameters& boost, const ParticleKinematics& particle) {
    // gamma = cosh(alpha); the half-rapidity functions come from the
    // half-argument identities, which stay accurate for beta -> 1.
    const double gamma = 1.0 / std::sqrt((1.0 - boost.beta) * (1.0 + boost.beta));
    const double ch_a = gamma;
    const double sh_a = gamma * boost.beta;
    const double ch_a2 = std::sqrt(0.5 * (gamma + 1.0));
    const double sh_a2 = std::sqrt(0.5 * (gamma - 1.0));

    const double r = particle.energy_ratio;
    const double ch_d = r;
    const double sh_d = std::sqrt((r - 1.0) * (r + 1.0));
    const double ch_d2 = std::sqrt(0.5 * (r + 1.0));
    const double sh_d2 = std::sqrt(0.5 * (r - 1.0));

    const double ep = dot(boost.e_hat, particle.p_hat);
    const Vec3 exp_vec = cross(boost.e_hat, particle.p_hat);

    const double q = 0.5 + 0.5 * ch_a * ch_d + 0.5 * sh_a * sh_d * ep;
    const double inv_sqrt_q = 1.0 / std::sqrt(q);

    WignerRotation w;
    w.cos_half = (ch_a2 * ch_d2 + sh_a2 * sh_d2 * ep) * inv_sqrt_q;
    const double coeff = sh_a2 * sh_d2 * inv_sqrt_q;
    const Vec3 sin_vec{coeff * exp_vec[0], coeff * exp_vec[1], coeff * exp_vec[2]};
    w.sin_half = norm(sin_vec);
    if (w.sin_half > 1e-300) {
        w.axis = {sin_vec[0] / w.sin_half, sin_vec[1] / w.sin_half, sin_vec[2] / w.sin_half};
    } else {
        w.sin_half = 0.0;
        w.axis = {0.0, 0.0, 1.0};
    }
    w.omega = 2.0 * std::atan2(w.sin_half, w.cos_half);
    return w;
}

linalg::ComplexMatrix wigner_unitary(const WignerRotation& rotation) {
    using linalg::Complex;
    const double c = rotation.cos_half;
    const double s = rotation.sin_half;
    const Vec3& n = rotation.axis;
    return linalg::ComplexMatrix(2, 2,
        {Complex(c, s * n[2]), Complex(s * n[1], s * n[0]),
         Complex(-s * n[1], s * n[0]), Complex(c, -s * n[2])});
}

linalg::ComplexMatrix wigner_unitary(double omega, const Vec3& axis) {
    return wigner_unitary(rotation_about(omega, axis));
}

WignerRotation rotation_about(double omega, const Vec3& axis) {
    WignerRotation w;
    w.axis = normalized(axis);
    w.omega = omega;
    w.cos_half = std::cos(0.5 * omega);
    w.sin_half = std::sin(0.5 * omega);
    return w;
}

}  // namespace spinboost::kinematics
