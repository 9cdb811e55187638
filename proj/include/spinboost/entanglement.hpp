#pragma once

#include <array>
#include <utility>

#include "spinboost/linalg.hpp"
#include "spinboost/states.hpp"

namespace spinboost::entanglement {

// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0. Bits throughout.
double binary_entropy(double x);

// -Tr rho log2 rho for a PSD unit-trace matrix.
double von_neumann_entropy(const linalg::ComplexMatrix& rho);

// (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y)
linalg::ComplexMatrix spin_flip(const linalg::ComplexMatrix& rho);

enum class ConcurrenceMethod { r_matrix, product_spectrum, closed_form };

struct ConcurrenceBreakdown {
    std::array<double, 4> lambdas{};  // descending
    double concurrence = 0.0;
    ConcurrenceMethod method = ConcurrenceMethod::r_matrix;
};

// Two-qubit mixed-state concurrence: lambdas are the descending eigenvalues of
// R = sqrt(sqrt(rho) rho~ sqrt(rho)) and C = max(0, l1 - l2 - l3 - l4).
// The same spectrum is recomputed through sqrt(rho~) rho sqrt(rho~) (similar
// to rho rho~) and the two routes must agree to 1e-6 or this throws.
ConcurrenceBreakdown concurrence_numeric(const linalg::ComplexMatrix& rho);

// The rho rho~ spectrum route alone.
ConcurrenceBreakdown concurrence_via_product_spectrum(const linalg::ComplexMatrix& rho);

// Eigenvalues (min, max) of the reduced spin matrix of the boosted state
// sqrt(l1)|p1>|n> + sqrt(l2)|p2>|-n>:
//   1/2 { 1 -+ sqrt(l1^2 + l2^2 + l1 l2 (cos 2phi - 2 cos^2 phi cos(W1 - W2) - 1)) }
// where phi = xi - theta and W1, W2 are the two Wigner angles. The radicand is
// evaluated as (l1-l2)^2 + 4 l1 l2 cos^2 phi sin^2((W1-W2)/2), which is the
// same polynomial but immune to cancellation when l1 is close to l2.
std::pair<double, double> pure_reduced_spin_eigs_closed_form(double lambda1, double lambda2,
                                                             double phi, double omega1,
                                                             double omega2);

// max(0, P(1) - P(2) - P(3) - P(4)) with weights sorted descending.
double bd_rest_concurrence(const states::BellMixture& mixture);

// Closed-form Wootters lambdas of the boosted Bell-diagonal state under
// opposite momenta, omega = W1 + W2:
//   lambda = sqrt(A + B -+ sqrt(C D)) / (2 sqrt2),
// the first pair built from (P2, P3), the second from (P1, P4).
ConcurrenceBreakdown bd_boosted_concurrence_closed_form(const states::BellMixture& mixture,
                                                        double phi, double omega);

// One (minus, plus) lambda pair for Bell weights (px, py).
std::pair<double, double> bd_boosted_lambda_pair(double px, double py, double phi, double omega);

// The sum/difference combinations the lambda pairs satisfy:
//   (la - lb)^2 = (Px - Py)^2 (1 - cos^2 phi sin^2 w/2)
//   (la + lb)^2 = (Px + Py)^2 - (Px - Py)^2 cos^2 phi sin^2 w/2
struct DifferenceIdentities {
    double pair1_diff_sq = 0.0;  // from (P2, P3)
    double pair1_sum_sq = 0.0;
    double pair2_diff_sq = 0.0;  // from (P1, P4)
    double pair2_sum_sq = 0.0;
};
DifferenceIdentities difference_identities(const states::BellMixture& mixture, double phi,
                                           double omega);

// H((1 + sqrt(1 - C^2))/2)
double entanglement_of_formation(double concurrence);

}  // namespace spinboost::entanglement
