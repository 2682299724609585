// Orthogonal polynomials of the one-dimensional Poisson distribution.
//
// Two independent constructions: Gram-Schmidt on monomials under a
// quadrature rule, and the generating function e^{x log(1+theta) - lambda theta}
// expanded through the Appell polynomials of the Poisson measure.

#ifndef ACHAOS_CHARLIER_HPP
#define ACHAOS_CHARLIER_HPP

#include <achaos/appell.hpp>
#include <achaos/measure.hpp>

#include <vector>

namespace achaos
{

// Coefficients in ascending powers of x.
using Poly = std::vector<double>;

double poly_eval(const Poly &p, double x);

// Monic orthogonal polynomials of degree 0..nmax under the rule.
std::vector<Poly> gram_schmidt_monic(const QuadratureRule &rule, int nmax);

// The Appell polynomial P_n as an ordinary polynomial (one-dimensional systems).
Poly appell_poly(const AppellSystem &sys, int n);

// C_n(x) = n! [theta^n] sum_k P_k(x) log(1+theta)^k / k!, n <= nmax.
std::vector<Poly> charlier_from_appell(const AppellSystem &sys, int nmax);

// G_{nm} = sum_i w_i p_n(x_i) p_m(x_i)
std::vector<std::vector<double>> gram_matrix(const std::vector<Poly> &polys, const QuadratureRule &rule);

} // namespace achaos

#endif
