#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "spinboost/linalg.hpp"
#include "spinboost/states.hpp"

namespace spinboost::rng {

// Deterministic sampler built on std::mt19937_64, whose integer sequence is
// pinned by the standard. Doubles are produced with the plain 53-bit mapping
// (x >> 11) * 2^-53 rather than std::uniform_real_distribution, which is
// implementation-defined; this keeps seeded reports byte-identical across
// toolchains.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double uniform();  // [0, 1)
    double uniform(double lo, double hi);

    // uniform point on the probability simplex (Dirichlet(1,1,1,1))
    std::array<double, 4> simplex4();

    states::BellMixture bell_mixture();

    linalg::ComplexMatrix ket(std::size_t dim);          // Haar-ish unit vector
    linalg::ComplexMatrix density(std::size_t dim);      // full-rank PSD, unit trace
    linalg::ComplexMatrix two_qubit_density();

private:
    double gaussian();
    std::mt19937_64 gen_;
};

}  // namespace spinboost::rng
