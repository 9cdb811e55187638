#include "spinboost/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>

#include "spinboost/entanglement.hpp"
#include "spinboost/gates.hpp"
#include "spinboost/kinematics.hpp"
#include "spinboost/linalg.hpp"
#include "spinboost/random.hpp"
#include "spinboost/states.hpp"

namespace spinboost::verify {

namespace {

using linalg::Complex;
using linalg::ComplexMatrix;
using kinematics::BoostParameters;
using kinematics::ParticleKinematics;
using states::BellMixture;
using states::SpinOrientation;
using states::TwoMomentumGeometry;

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

class SuiteRun {
public:
    SuiteRun(std::string name, double tolerance)
        : tolerance_(tolerance) {
        result_.name = std::move(name);
        result_.worst = -std::numeric_limits<double>::infinity();
    }

    template <class Describe>
    void check(double residual, Describe&& describe) {
        ++result_.checks;
        if (!(residual <= tolerance_)) ++result_.failures;
        if (std::isnan(residual) || residual > result_.worst) {
            result_.worst = residual;
            result_.worst_case = describe();
        }
    }

    SuiteResult take() && { return std::move(result_); }

private:
    double tolerance_;
    SuiteResult result_;
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i)
        xs[i] = (n == 1) ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return xs;
}

double tanh_half_from_cosh(double c) {
    // tanh(x/2) = sinh x / (1 + cosh x), fed with cosh x directly
    return std::sqrt((c - 1.0) * (c + 1.0)) / (1.0 + c);
}

// --- linalg ---------------------------------------------------------------

SuiteResult suite_partial_trace_product(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("linalg.partial_trace_product", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        ComplexMatrix a = s.density(2), b = s.density(2);
        a *= Complex(s.uniform(0.2, 3.0));
        b *= Complex(s.uniform(0.2, 3.0));
        const ComplexMatrix traced = linalg::partial_trace_first(linalg::tensor_product(a, b));
        const double res = (traced - a.trace() * b).max_abs();
        run.check(res, [&] { return fmt("draw=%zu", i); });
    }
    return std::move(run).take();
}

SuiteResult suite_eig_trace(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("linalg.eig_trace", 1e-10);
    for (std::size_t i = 0; i < trials; ++i) {
        ComplexMatrix g = s.density(4);
        g *= Complex(s.uniform(0.5, 4.0));
        const auto sys = linalg::hermitian_eig(g);
        double sum = 0.0;
        for (double v : sys.values) sum += v;
        run.check(std::abs(sum - g.trace().real()), [&] { return fmt("draw=%zu", i); });
    }
    return std::move(run).take();
}

SuiteResult suite_psd_sqrt_roundtrip(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("linalg.psd_sqrt_roundtrip", 1e-9);
    const std::size_t n = std::min<std::size_t>(trials, 100);
    for (std::size_t i = 0; i < n; ++i) {
        const ComplexMatrix m = s.density(4);
        const ComplexMatrix r = linalg::psd_sqrt(m);
        run.check((r * r - m).max_abs(), [&] { return fmt("draw=%zu", i); });
    }
    return std::move(run).take();
}

// --- kinematics -----------------------------------------------------------

ParticleKinematics particle_with_dot(double energy_ratio, double dot) {
    // boost is along x, so p_hat = (dot, sqrt(1-dot^2), 0) realizes e.p = dot
    const double c = std::clamp(dot, -1.0, 1.0);
    return ParticleKinematics::along({c, std::sqrt(std::max(0.0, 1.0 - c * c)), 0.0},
                                     energy_ratio);
}

SuiteResult suite_normalization_identity(rng::Sampler&, std::size_t) {
    SuiteRun run("kinematics.normalization_identity", 1e-10);
    const auto betas = linspace(0.0, 0.9999, 40);
    const auto dots = linspace(-1.0, 1.0, 21);
    std::vector<double> ratios;
    for (double e : linspace(0.0, 3.0, 25)) ratios.push_back(std::pow(10.0, e));
    for (double beta : betas) {
        const BoostParameters boost = BoostParameters::x_boost(beta);
        for (double r : ratios)
            for (double d : dots) {
                const auto w = kinematics::wigner_rotation(boost, particle_with_dot(r, d));
                const double res =
                    std::abs(w.cos_half * w.cos_half + w.sin_half * w.sin_half - 1.0);
                run.check(res, [&] { return fmt("beta=%.17g r=%.17g dot=%.17g", beta, r, d); });
            }
    }
    return std::move(run).take();
}

SuiteResult suite_perpendicular_tangent(rng::Sampler&, std::size_t) {
    SuiteRun run("kinematics.perpendicular_tangent", 1e-10);
    for (double beta : linspace(0.0, 0.9999, 60)) {
        const BoostParameters boost = BoostParameters::x_boost(beta);
        const double gamma = 1.0 / std::sqrt((1.0 - beta) * (1.0 + beta));
        for (double r : linspace(1.0, 1000.0, 60)) {
            const auto w = kinematics::wigner_rotation(boost, particle_with_dot(r, 0.0));
            const double expected = tanh_half_from_cosh(gamma) * tanh_half_from_cosh(r);
            const double res = std::abs(w.sin_half / w.cos_half - expected);
            run.check(res, [&] { return fmt("beta=%.17g r=%.17g", beta, r); });
        }
    }
    return std::move(run).take();
}

SuiteResult suite_axis_orthogonality(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("kinematics.axis_orthogonality", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        const double beta = s.uniform(1e-3, 0.999);
        const double r = s.uniform(1.001, 100.0);
        kinematics::Vec3 dir{s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0)};
        if (kinematics::norm(dir) < 1e-3) dir = {0.0, 1.0, 0.0};
        const BoostParameters boost = BoostParameters::x_boost(beta);
        const ParticleKinematics part = ParticleKinematics::along(dir, r);
        const auto w = kinematics::wigner_rotation(boost, part);
        double res = 0.0;
        if (w.sin_half > 1e-12)
            res = std::max(std::abs(kinematics::dot(w.axis, boost.e_hat)),
                           std::abs(kinematics::dot(w.axis, part.p_hat)));
        run.check(res, [&] {
            return fmt("draw=%zu beta=%.17g r=%.17g dir=(%.17g,%.17g,%.17g)", i, beta, r, dir[0],
                       dir[1], dir[2]);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_beta_monotonic(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("kinematics.beta_monotonic", 0.0);
    const auto betas = linspace(0.0, 0.999, 50);
    for (std::size_t i = 0; i < trials; ++i) {
        const double r = s.uniform(1.001, 100.0);
        const ParticleKinematics part = particle_with_dot(r, 0.0);
        double prev = 0.0;
        double res = -1.0;  // omega strictly increasing: prev - current < 0
        for (std::size_t k = 0; k < betas.size(); ++k) {
            const auto w = kinematics::wigner_rotation(BoostParameters::x_boost(betas[k]), part);
            if (k > 0) res = std::max(res, prev - w.omega);
            prev = w.omega;
        }
        run.check(res, [&] { return fmt("draw=%zu r=%.17g", i, r); });
    }
    return std::move(run).take();
}

// --- states ---------------------------------------------------------------

TwoMomentumGeometry random_geometry(rng::Sampler& s) {
    return TwoMomentumGeometry::in_yz_plane(s.uniform(1.0, 50.0), s.uniform(0.0, 2.0 * kPi),
                                            s.uniform(1.0, 50.0), s.uniform(0.0, 2.0 * kPi));
}

SuiteResult suite_boost_unitary(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("states.boost_unitary", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        const double beta = s.uniform(0.0, 0.999);
        const ComplexMatrix u =
            states::boost_operator(BoostParameters::x_boost(beta), random_geometry(s));
        run.check((u.adjoint() * u - ComplexMatrix::identity(4)).max_abs(),
                  [&] { return fmt("draw=%zu beta=%.17g", i, beta); });
    }
    return std::move(run).take();
}

SuiteResult suite_boost_roundtrip(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("states.boost_roundtrip", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        const double beta = s.uniform(0.0, 0.999);
        const ComplexMatrix u =
            states::boost_operator(BoostParameters::x_boost(beta), random_geometry(s));
        const ComplexMatrix psi = s.ket(4);
        run.check((u.adjoint() * (u * psi) - psi).max_abs(),
                  [&] { return fmt("draw=%zu beta=%.17g", i, beta); });
    }
    return std::move(run).take();
}

SuiteResult suite_bell_orthonormal_boosted(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("states.bell_orthonormal_boosted", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        const SpinOrientation spin{s.uniform(0.0, kPi), s.uniform(0.0, 2.0 * kPi)};
        const BoostParameters boost = BoostParameters::x_boost(s.uniform(0.0, 0.999));
        const TwoMomentumGeometry geom = random_geometry(s);
        const auto bells = states::bell_states(spin);
        std::array<ComplexMatrix, 4> boosted;
        for (std::size_t k = 0; k < 4; ++k) boosted[k] = states::boost_state(bells[k], boost, geom);
        double res = 0.0;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b) {
                const Complex ip = linalg::inner(boosted[a], boosted[b]);
                res = std::max(res, std::abs(ip - (a == b ? Complex(1.0) : Complex(0.0))));
            }
        run.check(res, [&] { return fmt("draw=%zu xi=%.17g tau=%.17g", i, spin.xi, spin.tau); });
    }
    return std::move(run).take();
}

SuiteResult suite_bd_spectrum_preserved(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("states.bd_spectrum_preserved", 1e-10);
    for (std::size_t i = 0; i < trials; ++i) {
        const BellMixture mix = s.bell_mixture();
        const SpinOrientation spin{s.uniform(0.0, kPi), s.uniform(0.0, 2.0 * kPi)};
        const BoostParameters boost = BoostParameters::x_boost(s.uniform(0.0, 0.999));
        const ComplexMatrix rho_out =
            states::boost_density(states::bd_density(mix, spin), boost, random_geometry(s));
        const auto sys = linalg::hermitian_eig(rho_out);
        auto expected = mix.sorted_descending().weights();
        double res = 0.0;
        for (std::size_t k = 0; k < 4; ++k) res = std::max(res, std::abs(sys.values[k] - expected[k]));
        run.check(res, [&] {
            return fmt("draw=%zu p=(%.17g,%.17g,%.17g,%.17g)", i, mix[0], mix[1], mix[2], mix[3]);
        });
    }
    return std::move(run).take();
}

// --- entanglement ---------------------------------------------------------

struct MixedDraw {
    BellMixture mix;
    double xi, theta, beta, energy_ratio;
    double phi, omega;
    ComplexMatrix rho_boosted;
};

MixedDraw draw_boosted_bd(rng::Sampler& s, bool sort_weights) {
    BellMixture mix = s.bell_mixture();
    if (sort_weights) mix = mix.sorted_descending();
    const double xi = s.uniform(0.0, kPi);
    const double theta = s.uniform(0.0, 2.0 * kPi);
    const double beta = s.uniform(0.0, 0.999);
    const double r = s.uniform(1.0, 50.0);

    const SpinOrientation spin{xi, kHalfPi};
    const TwoMomentumGeometry geom = TwoMomentumGeometry::antiparallel(r, theta);
    const BoostParameters boost = BoostParameters::x_boost(beta);
    const auto w1 = kinematics::wigner_rotation(boost, geom.k1);
    const auto w2 = kinematics::wigner_rotation(boost, geom.k2);

    MixedDraw d{mix, xi, theta, beta, r, xi - theta, w1.omega + w2.omega, {}};
    d.rho_boosted = states::boost_density(states::bd_density(mix, spin), boost, geom);
    return d;
}

SuiteResult suite_pure_closed_form(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.pure_closed_form", 1e-10);
    for (std::size_t i = 0; i < trials; ++i) {
        const double l1 = s.uniform(0.0, 1.0);
        const double xi = s.uniform(0.0, kPi);
        const double theta = s.uniform(0.0, 2.0 * kPi);
        const double beta = s.uniform(0.0, 0.999);
        const TwoMomentumGeometry geom =
            TwoMomentumGeometry::parallel(s.uniform(1.0, 50.0), s.uniform(1.0, 50.0), theta);
        const SpinOrientation spin{xi, kHalfPi};
        const BoostParameters boost = BoostParameters::x_boost(beta);

        const ComplexMatrix psi = states::schmidt_pure_state(l1, 1.0 - l1, spin, geom);
        const ComplexMatrix reduced =
            linalg::partial_trace_first(linalg::projector(states::boost_state(psi, boost, geom)));
        const auto sys = linalg::hermitian_eig(reduced);

        const auto w1 = kinematics::wigner_rotation(boost, geom.k1);
        const auto w2 = kinematics::wigner_rotation(boost, geom.k2);
        const auto [lo, hi] = entanglement::pure_reduced_spin_eigs_closed_form(
            l1, 1.0 - l1, xi - theta, w1.omega, w2.omega);
        const double res =
            std::max(std::abs(lo - sys.values[1]), std::abs(hi - sys.values[0]));
        run.check(res, [&] {
            return fmt("draw=%zu l1=%.17g xi=%.17g theta=%.17g beta=%.17g", i, l1, xi, theta, beta);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_mixed_closed_form(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.mixed_closed_form", 1e-8);
    for (std::size_t i = 0; i < trials; ++i) {
        const MixedDraw d = draw_boosted_bd(s, false);
        const auto numeric = entanglement::concurrence_numeric(d.rho_boosted);
        const auto closed = entanglement::bd_boosted_concurrence_closed_form(d.mix, d.phi, d.omega);
        double res = std::abs(numeric.concurrence - closed.concurrence);
        for (std::size_t k = 0; k < 4; ++k)
            res = std::max(res, std::abs(numeric.lambdas[k] - closed.lambdas[k]));
        run.check(res, [&] {
            return fmt("draw=%zu p=(%.17g,%.17g,%.17g,%.17g) xi=%.17g theta=%.17g beta=%.17g r=%.17g",
                       i, d.mix[0], d.mix[1], d.mix[2], d.mix[3], d.xi, d.theta, d.beta,
                       d.energy_ratio);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_sum_difference_identities(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.sum_difference_identities", 1e-9);
    for (std::size_t i = 0; i < trials; ++i) {
        const BellMixture mix = s.bell_mixture();
        const double phi = s.uniform(-kPi, kPi);
        const double omega = s.uniform(0.0, 2.0 * kPi);
        const auto ids = entanglement::difference_identities(mix, phi, omega);
        const auto [lo1, hi1] = entanglement::bd_boosted_lambda_pair(mix[1], mix[2], phi, omega);
        const auto [lo2, hi2] = entanglement::bd_boosted_lambda_pair(mix[0], mix[3], phi, omega);
        double res = std::abs((hi1 - lo1) * (hi1 - lo1) - ids.pair1_diff_sq);
        res = std::max(res, std::abs((hi1 + lo1) * (hi1 + lo1) - ids.pair1_sum_sq));
        res = std::max(res, std::abs((hi2 - lo2) * (hi2 - lo2) - ids.pair2_diff_sq));
        res = std::max(res, std::abs((hi2 + lo2) * (hi2 + lo2) - ids.pair2_sum_sq));
        run.check(res, [&] {
            return fmt("draw=%zu p=(%.17g,%.17g,%.17g,%.17g) phi=%.17g omega=%.17g", i, mix[0],
                       mix[1], mix[2], mix[3], phi, omega);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_rest_concurrence(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.rest_concurrence", 1e-10);
    for (std::size_t i = 0; i < trials; ++i) {
        const BellMixture mix = s.bell_mixture();
        const SpinOrientation spin{s.uniform(0.0, kPi), s.uniform(0.0, 2.0 * kPi)};
        const double numeric =
            entanglement::concurrence_numeric(states::bd_density(mix, spin)).concurrence;
        const double res = std::abs(numeric - entanglement::bd_rest_concurrence(mix));
        run.check(res, [&] {
            return fmt("draw=%zu p=(%.17g,%.17g,%.17g,%.17g)", i, mix[0], mix[1], mix[2], mix[3]);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_concurrence_monotonic(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.concurrence_monotonic", 1e-12);
    const auto betas = linspace(0.0, 0.999, 200);
    for (std::size_t i = 0; i < trials; ++i) {
        const BellMixture mix = s.bell_mixture().sorted_descending();
        const double xi = s.uniform(0.0, kPi);
        const double theta = s.uniform(0.0, 2.0 * kPi);
        const double r = s.uniform(1.0, 50.0);
        const TwoMomentumGeometry geom = TwoMomentumGeometry::antiparallel(r, theta);
        double prev = 0.0;
        double res = -1.0;  // non-increasing: current - prev <= 0
        for (std::size_t k = 0; k < betas.size(); ++k) {
            const BoostParameters boost = BoostParameters::x_boost(betas[k]);
            const double omega = kinematics::wigner_rotation(boost, geom.k1).omega +
                                 kinematics::wigner_rotation(boost, geom.k2).omega;
            const double c =
                entanglement::bd_boosted_concurrence_closed_form(mix, xi - theta, omega)
                    .concurrence;
            if (k > 0) res = std::max(res, c - prev);
            prev = c;
        }
        run.check(res, [&] {
            return fmt("draw=%zu p=(%.17g,%.17g,%.17g,%.17g) xi=%.17g theta=%.17g r=%.17g", i,
                       mix[0], mix[1], mix[2], mix[3], xi, theta, r);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_entropy_bound_pure(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.entropy_bound_pure", 1e-12);
    const auto betas = linspace(0.0, 0.999, 200);
    for (std::size_t i = 0; i < trials; ++i) {
        const double l1 = s.uniform(0.5, 1.0);
        const double xi = s.uniform(0.0, kPi);
        const double theta = s.uniform(0.0, 2.0 * kPi);
        const TwoMomentumGeometry geom =
            TwoMomentumGeometry::parallel(s.uniform(1.0, 50.0), s.uniform(1.0, 50.0), theta);
        const double rest = entanglement::binary_entropy(l1);
        double res = -1.0;
        for (double beta : betas) {
            const BoostParameters boost = BoostParameters::x_boost(beta);
            const auto [lo, hi] = entanglement::pure_reduced_spin_eigs_closed_form(
                l1, 1.0 - l1, xi - theta,
                kinematics::wigner_rotation(boost, geom.k1).omega,
                kinematics::wigner_rotation(boost, geom.k2).omega);
            res = std::max(res, entanglement::binary_entropy(lo) - rest);
        }
        run.check(res, [&] {
            return fmt("draw=%zu l1=%.17g xi=%.17g theta=%.17g", i, l1, xi, theta);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_perpendicular_invariance(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.perpendicular_invariance", 1e-10);
    const auto betas = linspace(0.0, 0.999, 10);
    for (std::size_t i = 0; i < trials; ++i) {
        const BellMixture mix = s.bell_mixture();
        const double theta = s.uniform(0.0, 2.0 * kPi);
        const double r = s.uniform(1.0, 50.0);
        const SpinOrientation spin{theta + kHalfPi, kHalfPi};  // phi = pi/2
        const TwoMomentumGeometry geom = TwoMomentumGeometry::antiparallel(r, theta);
        const ComplexMatrix rho = states::bd_density(mix, spin);
        const double c_rest = entanglement::bd_rest_concurrence(mix);

        const double l1 = s.uniform(0.0, 1.0);
        const ComplexMatrix psi = states::schmidt_pure_state(l1, 1.0 - l1, spin, geom);
        const double e_rest = entanglement::binary_entropy(l1);

        double res = 0.0;
        for (double beta : betas) {
            const BoostParameters boost = BoostParameters::x_boost(beta);
            const double c_boosted =
                entanglement::concurrence_numeric(states::boost_density(rho, boost, geom))
                    .concurrence;
            res = std::max(res, std::abs(c_boosted - c_rest));
            const ComplexMatrix reduced = linalg::partial_trace_first(
                linalg::projector(states::boost_state(psi, boost, geom)));
            res = std::max(res, std::abs(entanglement::von_neumann_entropy(reduced) - e_rest));
        }
        run.check(res, [&] {
            return fmt("draw=%zu p=(%.17g,%.17g,%.17g,%.17g) theta=%.17g r=%.17g l1=%.17g", i,
                       mix[0], mix[1], mix[2], mix[3], theta, r, l1);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_chain_inequality(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.chain_inequality", 1e-10);
    for (std::size_t i = 0; i < trials; ++i) {
        const BellMixture mix = s.bell_mixture().sorted_descending();
        const double phi = s.uniform(-kPi, kPi);
        const double omega = s.uniform(0.0, 2.0 * kPi);
        const auto [lo1, hi1] = entanglement::bd_boosted_lambda_pair(mix[1], mix[2], phi, omega);
        const auto [lo2, hi2] = entanglement::bd_boosted_lambda_pair(mix[0], mix[3], phi, omega);
        const double lhs = (hi2 - lo2) - (lo1 + hi1);
        const double rhs = mix[0] - mix[3] - mix[1] - mix[2];
        run.check(lhs - rhs, [&] {
            return fmt("draw=%zu p=(%.17g,%.17g,%.17g,%.17g) phi=%.17g omega=%.17g", i, mix[0],
                       mix[1], mix[2], mix[3], phi, omega);
        });
    }
    return std::move(run).take();
}

SuiteResult suite_full_entropy_invariant(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("entanglement.full_entropy_invariant", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        const BellMixture mix = s.bell_mixture();
        const SpinOrientation spin{s.uniform(0.0, kPi), s.uniform(0.0, 2.0 * kPi)};
        const BoostParameters boost = BoostParameters::x_boost(s.uniform(0.0, 0.999));
        const ComplexMatrix rho = states::bd_density(mix, spin);
        const ComplexMatrix rho_out = states::boost_density(rho, boost, random_geometry(s));
        const double res = std::abs(entanglement::von_neumann_entropy(rho_out) -
                                    entanglement::von_neumann_entropy(rho));
        run.check(res, [&] {
            return fmt("draw=%zu p=(%.17g,%.17g,%.17g,%.17g)", i, mix[0], mix[1], mix[2], mix[3]);
        });
    }
    return std::move(run).take();
}

// --- gates ------------------------------------------------------------

SuiteResult suite_gate_kinematic_consistency(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("gates.kinematic_consistency", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        // spin and momenta along -z (theta = pi, xi = pi): phi = 0 geometry
        const double beta = s.uniform(0.0, 0.999);
        const TwoMomentumGeometry geom =
            TwoMomentumGeometry::parallel(s.uniform(1.0, 50.0), s.uniform(1.0, 50.0), kPi);
        const BoostParameters boost = BoostParameters::x_boost(beta);
        const double o1 = kinematics::wigner_rotation(boost, geom.k1).omega;
        const double o2 = kinematics::wigner_rotation(boost, geom.k2).omega;
        const ComplexMatrix u = states::boost_operator(boost, geom);
        const double res = (u - gates::lorentz_gate(o1, o2).matrix).max_abs();
        run.check(res, [&] { return fmt("draw=%zu beta=%.17g", i, beta); });
    }
    return std::move(run).take();
}

SuiteResult suite_gate_composition(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("gates.composition", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        const double a = s.uniform(0.0, 2.0 * kPi), b = s.uniform(0.0, 2.0 * kPi);
        const double c = s.uniform(0.0, 2.0 * kPi), d = s.uniform(0.0, 2.0 * kPi);
        const ComplexMatrix lhs = gates::lorentz_gate(a, b).matrix * gates::lorentz_gate(c, d).matrix;
        const double res = (lhs - gates::lorentz_gate(a + c, b + d).matrix).max_abs();
        run.check(res, [&] { return fmt("draw=%zu a=%.17g b=%.17g c=%.17g d=%.17g", i, a, b, c, d); });
    }
    return std::move(run).take();
}

SuiteResult suite_gate_concurrence_bounds(rng::Sampler& s, std::size_t trials) {
    SuiteRun run("gates.concurrence_bounds", 1e-12);
    for (std::size_t i = 0; i < trials; ++i) {
        const auto gate = gates::lorentz_gate(s.uniform(0.0, 2.0 * kPi), s.uniform(0.0, 2.0 * kPi));
        const auto demo = gates::run_gate_demo(gate, s.ket(4));
        const double res = std::max(-demo.concurrence_after, demo.concurrence_after - 1.0);
        run.check(res, [&] { return fmt("draw=%zu o1=%.17g o2=%.17g", i, gate.omega1, gate.omega2); });
    }
    return std::move(run).take();
}

}  // namespace

std::vector<SuiteResult> run_all_suites(const Options& options) {
    using SuiteFn = SuiteResult (*)(rng::Sampler&, std::size_t);
    const SuiteFn suites[] = {
        suite_partial_trace_product,
        suite_eig_trace,
        suite_psd_sqrt_roundtrip,
        suite_normalization_identity,
        suite_perpendicular_tangent,
        suite_axis_orthogonality,
        suite_beta_monotonic,
        suite_boost_unitary,
        suite_boost_roundtrip,
        suite_bell_orthonormal_boosted,
        suite_bd_spectrum_preserved,
        suite_pure_closed_form,
        suite_mixed_closed_form,
        suite_sum_difference_identities,
        suite_rest_concurrence,
        suite_concurrence_monotonic,
        suite_entropy_bound_pure,
        suite_perpendicular_invariance,
        suite_chain_inequality,
        suite_full_entropy_invariant,
        suite_gate_kinematic_consistency,
        suite_gate_composition,
        suite_gate_concurrence_bounds,
    };

    std::vector<SuiteResult> results;
    results.reserve(std::size(suites));
    std::uint64_t stream = 0;
    for (SuiteFn fn : suites) {
        rng::Sampler sampler(options.seed + 1000003ULL * ++stream);
        results.push_back(fn(sampler, options.trials));
    }
    return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
    for (const auto& r : results)
        if (r.failures != 0) return false;
    return true;
}

void write_report(const std::vector<SuiteResult>& results, const Options& options,
                  std::ostream& out) {
    out << "verification report\n";
    out << "seed   " << options.seed << "\n";
    out << "trials " << options.trials << "\n\n";

    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());

    std::size_t failed = 0;
    for (const auto& r : results) {
        const bool ok = r.failures == 0;
        if (!ok) ++failed;
        out << (ok ? "PASS " : "FAIL ") << r.name
            << std::string(width - r.name.size() + 2, ' ')
            << fmt("checks=%zu failures=%zu worst=%.6g", r.checks, r.failures, r.worst);
        if (!ok) out << "\n     at " << r.worst_case;
        out << "\n";
    }

    out << "\nsummary: " << (results.size() - failed) << "/" << results.size()
        << " suites passed\n";
}

}  // namespace spinboost::verify
