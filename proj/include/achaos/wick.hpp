// Wick calculus on Q-basis sequences. The Wick product multiplies S-series,
// so on kernels it is the Cauchy product under the symmetrized tensor product.

#ifndef ACHAOS_WICK_HPP
#define ACHAOS_WICK_HPP

#include <achaos/sequence.hpp>

#include <span>

namespace achaos
{

inline constexpr int default_wick_degree = 16;

// Truncated at min(N_Phi + N_Psi, max_degree); degree_cap records a binding cap.
KernelSequence wick_product(const KernelSequence &Phi, const KernelSequence &Psi,
                            int max_degree = default_wick_degree);
KernelSequence wick_power(const KernelSequence &Phi, int m, int max_degree = default_wick_degree);

// sum_k a_k (Phi - z0)^{<>k} with z0 = Phi^(0), truncated at N_Phi. The
// coefficients a are the Taylor coefficients of F about z0 and must cover
// degrees 0..N_Phi.
KernelSequence wick_apply_series(std::span<const complex> a, const KernelSequence &Phi);

// Needs |Phi^(0)| > tol; the result has the truncation of Phi.
KernelSequence wick_inverse(const KernelSequence &Phi, double tol = 1e-12);
// X with Phi <> X = Psi through min(N_Phi, N_Psi).
KernelSequence wick_solve(const KernelSequence &Phi, const KernelSequence &Psi, double tol = 1e-12);

struct WickNormReport {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
};
// lhs = dist_norm(Phi<>Psi, max(p1,p2), q1+q2+1, 1), rhs = the product of the
// factor norms; ok iff lhs <= rhs (1 + 1e-12).
WickNormReport wick_norm_check(const KernelSequence &Phi, const KernelSequence &Psi, int p1, int q1, int p2, int q2,
                               const WeightModel &w);

} // namespace achaos

#endif
