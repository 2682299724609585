// Test functions and distributions as kernel sequences: the dual pairing,
// the norm families and the change between monomial and Appell coefficients.

#ifndef ACHAOS_CALCULUS_HPP
#define ACHAOS_CALCULUS_HPP

#include <achaos/appell.hpp>
#include <achaos/sequence.hpp>

#include <span>

namespace achaos
{

// sum_{n <= min N} n! <Phi^(n), phi^(n)> for Phi in the Q-basis, phi in the P-basis.
complex pair(const KernelSequence &Phi, const KernelSequence &phi);

// (-1)^n rho^(n)(x) / rho(x) for a one-dimensional density measure.
double q_density_eval(const MeasureModel &mu, int n, double x);

// The same pairing realized as an integral over the density grid:
// int sum_n Phi^(n) (-1)^n rho^(n)(x) phi(x) dx, with phi evaluated through the
// Appell polynomials of sys. Only for one-dimensional density measures.
complex pair_oracle(const KernelSequence &Phi, const KernelSequence &phi, const AppellSystem &sys);

// ||phi||_{p,q}^2 = sum (n!)^2 2^{nq} |phi^(n)|_p^2   (P-basis)
double test_norm(const KernelSequence &phi, int p, int q, const WeightModel &w);
// sum (n!)^{1-beta} 2^{-qn} |Phi^(n)|_{-p}^2, beta in [0,1]   (Q-basis)
double dist_norm(const KernelSequence &Phi, int p, int q, double beta, const WeightModel &w);
// sum (n!)^{1+beta} 2^{nq} |f^(n)|_p^2, beta in [-1,1]   (monomial basis)
double e_norm(const KernelSequence &f, int p, int q, double beta, const WeightModel &w);

// Monomial coefficients of sum_n <P_n(x), phi^(n)>.
KernelSequence reorder_p_to_monomial(const AppellSystem &sys, const KernelSequence &phi);
// Appell coefficients of sum_n <x^{(x)n}, f^(n)>.
KernelSequence reorder_monomial_to_p(const AppellSystem &sys, const KernelSequence &f);

// sum_n <P_n(z), phi^(n)>
complex eval_test(const AppellSystem &sys, const KernelSequence &phi, std::span<const complex> z);
// sum_n <z^{(x)n}, f^(n)>
complex eval_monomial(const KernelSequence &f, std::span<const complex> z);

// P-coefficients theta^{(x)n}/n! of e^{<x,theta>}/l(theta), n <= N.
KernelSequence mu_exponential(const AppellSystem &sys, std::span<const complex> theta, int N);

} // namespace achaos

#endif
