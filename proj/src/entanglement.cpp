#include "spinboost/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace spinboost::entanglement {

using linalg::ComplexMatrix;

double binary_entropy(double x) {
    if (x < -1e-12 || x > 1.0 + 1e-12)
        throw std::domain_error("binary_entropy argument must lie in [0, 1]");
    x = std::clamp(x, 0.0, 1.0);
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double von_neumann_entropy(const ComplexMatrix& rho) {
    const auto sys = linalg::hermitian_eig(rho);
    double s = 0.0;
    for (double lam : sys.values) {
        if (lam < -1e-8) throw std::runtime_error("von_neumann_entropy: matrix is not PSD");
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return s;
}

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
    if (rho.rows() != 4 || rho.cols() != 4)
        throw std::invalid_argument("spin_flip expects a two-qubit (4x4) matrix");
    const ComplexMatrix yy = linalg::tensor_product(linalg::pauli_y(), linalg::pauli_y());
    return yy * rho.conjugate() * yy;
}

namespace {

std::array<double, 4> sqrt_spectrum_descending(const ComplexMatrix& hermitian_product) {
    const auto sys = linalg::hermitian_eig(hermitian_product);
    std::array<double, 4> lams{};
    for (std::size_t i = 0; i < 4; ++i) lams[i] = std::sqrt(std::max(0.0, sys.values[i]));
    std::sort(lams.begin(), lams.end(), std::greater<>());
    return lams;
}

double concurrence_from(const std::array<double, 4>& lams) {
    return std::max(0.0, lams[0] - lams[1] - lams[2] - lams[3]);
}

}  // namespace

ConcurrenceBreakdown concurrence_via_product_spectrum(const ComplexMatrix& rho) {
    const ComplexMatrix flipped = spin_flip(rho);
    const ComplexMatrix root_flipped = linalg::psd_sqrt(flipped);
    ConcurrenceBreakdown out;
    out.lambdas = sqrt_spectrum_descending(root_flipped * rho * root_flipped);
    out.concurrence = concurrence_from(out.lambdas);
    out.method = ConcurrenceMethod::product_spectrum;
    return out;
}

ConcurrenceBreakdown concurrence_numeric(const ComplexMatrix& rho) {
    const ComplexMatrix flipped = spin_flip(rho);
    const ComplexMatrix root = linalg::psd_sqrt(rho);
    ConcurrenceBreakdown out;
    out.lambdas = sqrt_spectrum_descending(root * flipped * root);
    out.concurrence = concurrence_from(out.lambdas);
    out.method = ConcurrenceMethod::r_matrix;

    const ConcurrenceBreakdown cross = concurrence_via_product_spectrum(rho);
    for (std::size_t i = 0; i < 4; ++i)
        if (std::abs(out.lambdas[i] - cross.lambdas[i]) > 1e-6)
            throw std::runtime_error("concurrence routes disagree beyond 1e-6");
    return out;
}

std::pair<double, double> pure_reduced_spin_eigs_closed_form(double lambda1, double lambda2,
                                                             double phi, double omega1,
                                                             double omega2) {
    if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0) || std::abs(lambda1 + lambda2 - 1.0) > 1e-12)
        throw std::invalid_argument("Schmidt weights must be non-negative and sum to 1");
    const double cphi = std::cos(phi);
    const double shalf = std::sin(0.5 * (omega1 - omega2));
    const double radicand = (lambda1 - lambda2) * (lambda1 - lambda2) +
                            4.0 * lambda1 * lambda2 * cphi * cphi * shalf * shalf;
    const double root = std::sqrt(std::max(0.0, radicand));
    return {0.5 * (1.0 - root), 0.5 * (1.0 + root)};
}

double bd_rest_concurrence(const states::BellMixture& mixture) {
    const auto q = mixture.sorted_descending().weights();
    return std::max(0.0, q[0] - q[1] - q[2] - q[3]);
}

namespace {

// lambda pair for weights (x, y): sqrt(A + B -+ sqrt(C D)) / (2 sqrt2)
std::pair<double, double> closed_form_pair(double x, double y, double cos2phi, double cos2_phi,
                                           double cos_w) {
    const double a = 3.0 * x * x + 3.0 * y * y - (x * x + y * y) * cos2phi;
    const double b = 2.0 * cos2_phi * (2.0 * x * y + (x - y) * (x - y) * cos_w);
    const double c = (x - y) * (x - y) * (-3.0 + cos2phi - 2.0 * cos2_phi * cos_w);
    const double d = -(3.0 * x + y) * (x + 3.0 * y) +
                     (x - y) * (x - y) * (cos2phi - 2.0 * cos2_phi * cos_w);
    const double cd_root = std::sqrt(std::max(0.0, c * d));
    const double scale = 1.0 / (2.0 * std::sqrt(2.0));
    const double lo = scale * std::sqrt(std::max(0.0, a + b - cd_root));
    const double hi = scale * std::sqrt(std::max(0.0, a + b + cd_root));
    return {lo, hi};
}

}  // namespace

std::pair<double, double> bd_boosted_lambda_pair(double px, double py, double phi, double omega) {
    const double cos_phi = std::cos(phi);
    return closed_form_pair(px, py, std::cos(2.0 * phi), cos_phi * cos_phi, std::cos(omega));
}

ConcurrenceBreakdown bd_boosted_concurrence_closed_form(const states::BellMixture& mixture,
                                                        double phi, double omega) {
    const auto& p = mixture.weights();
    const double cos2phi = std::cos(2.0 * phi);
    const double cos_phi = std::cos(phi);
    const double cos2_phi = cos_phi * cos_phi;
    const double cos_w = std::cos(omega);

    const auto [l1, l2] = closed_form_pair(p[1], p[2], cos2phi, cos2_phi, cos_w);
    const auto [l3, l4] = closed_form_pair(p[0], p[3], cos2phi, cos2_phi, cos_w);

    ConcurrenceBreakdown out;
    out.lambdas = {l1, l2, l3, l4};
    std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
    out.concurrence = concurrence_from(out.lambdas);
    out.method = ConcurrenceMethod::closed_form;
    return out;
}

DifferenceIdentities difference_identities(const states::BellMixture& mixture, double phi,
                                           double omega) {
    const auto& p = mixture.weights();
    const double cphi = std::cos(phi);
    const double shalf = std::sin(0.5 * omega);
    const double t = cphi * cphi * shalf * shalf;
    auto diff_sq = [&](double x, double y) { return (x - y) * (x - y) * (1.0 - t); };
    auto sum_sq = [&](double x, double y) {
        return (x + y) * (x + y) - (x - y) * (x - y) * t;
    };
    DifferenceIdentities out;
    out.pair1_diff_sq = diff_sq(p[1], p[2]);
    out.pair1_sum_sq = sum_sq(p[1], p[2]);
    out.pair2_diff_sq = diff_sq(p[0], p[3]);
    out.pair2_sum_sq = sum_sq(p[0], p[3]);
    return out;
}

double entanglement_of_formation(double concurrence) {
    if (concurrence < -1e-12 || concurrence > 1.0 + 1e-12)
        throw std::domain_error("concurrence must lie in [0, 1]");
    const double c = std::clamp(concurrence, 0.0, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

}  // namespace spinboost::entanglement
