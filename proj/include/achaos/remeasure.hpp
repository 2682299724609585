// Change of measure between two Appell systems on the same weighted space.
//
// The Appell polynomials of mu expand in those of mu_hat as
//   P_n(x) = sum_{k+l+m=n} n!/(k! l! m!) P^_k(x) (x)^ B_l (x)^ M^_m,
// where B belongs to mu and M^ to mu_hat. Test functions and distributions
// are re-expanded accordingly, keeping the dual pairing invariant.

#ifndef ACHAOS_REMEASURE_HPP
#define ACHAOS_REMEASURE_HPP

#include <achaos/appell.hpp>
#include <achaos/sequence.hpp>

#include <span>
#include <vector>

namespace achaos
{

struct CrossTerm {
    int k = 0;
    int l = 0;
    int m = 0;
    double coefficient = 0.0; // n!/(k! l! m!)
    SymKernel kernel;         // B_l (x)^ M^_m, degree l+m
};

struct CrossExpansion {
    int n = 0;
    std::vector<CrossTerm> terms;
};

// sys belongs to mu, sys_hat to mu_hat; both must reach degree n.
CrossExpansion p_cross_expand(const AppellSystem &sys, const AppellSystem &sys_hat, int n);
// Right-hand side of the expansion evaluated at x.
SymKernel cross_expand_eval(const CrossExpansion &e, const AppellSystem &sys_hat, std::span<const complex> x);
// max-norm of P_n(x) minus the expansion at x.
double cross_expand_residual(const AppellSystem &sys, const AppellSystem &sys_hat, int n,
                             std::span<const complex> x);

// P-coefficients under mu  ->  P-coefficients under mu_hat of the same function.
KernelSequence retarget_test(const KernelSequence &phi, const AppellSystem &sys, const AppellSystem &sys_hat);
// Q-coefficients under mu_hat  ->  Q-coefficients under mu of the same distribution.
KernelSequence retarget_dist(const KernelSequence &Phi_hat, const AppellSystem &sys, const AppellSystem &sys_hat);

} // namespace achaos

#endif
