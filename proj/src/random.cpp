#include "spinboost/random.hpp"

#include <cmath>
#include <numbers>

namespace spinboost::rng {

using linalg::Complex;
using linalg::ComplexMatrix;

double Sampler::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Sampler::gaussian() {
    // Box-Muller, written out so the draw sequence is fixed by this source
    // rather than by a library distribution.
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::array<double, 4> Sampler::simplex4() {
    std::array<double, 4> w{};
    double sum = 0.0;
    for (double& x : w) {
        x = -std::log(1.0 - uniform());
        sum += x;
    }
    for (double& x : w) x /= sum;
    return w;
}

states::BellMixture Sampler::bell_mixture() { return states::BellMixture(simplex4()); }

ComplexMatrix Sampler::ket(std::size_t dim) {
    ComplexMatrix v(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) v(i, 0) = Complex(gaussian(), gaussian());
    return states::normalized_ket(v);
}

ComplexMatrix Sampler::density(std::size_t dim) {
    ComplexMatrix g(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) g(r, c) = Complex(gaussian(), gaussian());
    ComplexMatrix rho = g * g.adjoint();
    return (1.0 / rho.trace().real()) * rho;
}

ComplexMatrix Sampler::two_qubit_density() { return density(4); }

}  // namespace spinboost::rng
