// Integral transforms and the named distributions delta_z and rho(z, .).

#ifndef ACHAOS_TRANSFORMS_HPP
#define ACHAOS_TRANSFORMS_HPP

#include <achaos/appell.hpp>
#include <achaos/sequence.hpp>

#include <span>

namespace achaos
{

// S(Phi)(theta) = sum_n <Phi^(n), theta^{(x)n}>   (Q-basis)
complex s_transform(const KernelSequence &Phi, std::span<const complex> theta);

// Advisory convergence region of the S-series. A truncated sequence has every
// order finite, so the tightest order is (p, q) = (0, 0) and the region is
// 2^q |theta|_p^2 < 1.
struct SGuard {
    int p = 0;
    int q = 0;
    bool inside = true;
};
SGuard s_guard(std::span<const complex> theta, const WeightModel &w);

// C(phi)(z) = sum_n <z^{(x)n}, phi^(n)>   (P-basis)
complex c_transform(const KernelSequence &phi, std::span<const complex> z);

// Formal S-series of a test function, i.e. the coefficients of
// theta -> int phi(x) e^{<x,theta>} dmu(x) / l(theta) through degree sys.N().
// Needs moments through degree N(phi) + sys.N().
std::vector<SymKernel> s_series_of_test(const AppellSystem &sys, const KernelSequence &phi);

// L(phi)(theta) = S(phi)(theta) l(theta). Needs a closed-form Laplace
// transform, |l(theta)| >= 1e-6 and |theta|_0 <= radius.
complex l_transform(const AppellSystem &sys, const KernelSequence &phi, std::span<const complex> theta,
                    double radius = 1.0);

// delta_z: Phi^(n) = P_n(z)/n!, n <= sys.N().
KernelSequence delta(const AppellSystem &sys, std::span<const complex> z);
KernelSequence delta(const AppellSystem &sys, std::span<const complex> z, int N);

// rho(z, .): Phi^(n) = (-1)^n z^{(x)n}/n!, n <= N.
KernelSequence radon_nikodym(const AppellSystem &sys, std::span<const complex> z, int N);

} // namespace achaos

#endif
