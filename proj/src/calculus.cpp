#include <achaos/calculus.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace achaos
{

namespace
{

void require_measure(const AppellSystem &sys, const KernelSequence &s, const char *op)
{
    if (s.measure_id != sys.measure_id()) {
        throw std::invalid_argument(std::string(op) + ": sequence belongs to measure '" + s.measure_id
                                    + "', system to '" + sys.measure_id() + "'");
    }
    if (s.d != sys.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
    }
}

void require_truncation(const AppellSystem &sys, int N, const char *op)
{
    if (N > sys.N()) {
        throw std::out_of_range(std::string(op) + ": sequence has degree " + std::to_string(N)
                                + " but the Appell system stops at " + std::to_string(sys.N()));
    }
}

} // namespace

complex pair(const KernelSequence &Phi, const KernelSequence &phi)
{
    require_basis(Phi, Basis::appell_q, "pair");
    require_basis(phi, Basis::appell_p, "pair");
    if (Phi.d != phi.d) {
        throw std::invalid_argument("pair: dimension mismatch");
    }
    if (Phi.measure_id != phi.measure_id) {
        throw std::invalid_argument("pair: measure mismatch ('" + Phi.measure_id + "' vs '" + phi.measure_id
                                    + "')");
    }
    complex acc{};
    for (int n = 0; n <= std::min(Phi.N(), phi.N()); ++n) {
        acc += factorial(n) * pairing(Phi[n], phi[n]);
    }
    return acc;
}

double q_density_eval(const MeasureModel &mu, int n, double x)
{
    const auto *rho = mu.density();
    if (rho == nullptr) {
        throw std::invalid_argument("q_density_eval: measure '" + mu.id() + "' has no pointwise density");
    }
    const auto dn = rho->derivative(n, x);
    if (!dn) {
        throw std::domain_error("q_density_eval: density derivative of order " + std::to_string(n)
                                + " unavailable");
    }
    const double r = rho->value(x);
    if (r <= 0.0) {
        throw std::domain_error("q_density_eval: density vanishes at x");
    }
    return (n % 2 == 0 ? 1.0 : -1.0) * *dn / r;
}

complex pair_oracle(const KernelSequence &Phi, const KernelSequence &phi, const AppellSystem &sys)
{
    require_basis(Phi, Basis::appell_q, "pair_oracle");
    require_basis(phi, Basis::appell_p, "pair_oracle");
    require_measure(sys, Phi, "pair_oracle");
    require_measure(sys, phi, "pair_oracle");
    const auto &mu = sys.measure();
    const auto *rho = mu.density();
    if (rho == nullptr || mu.dim() != 1) {
        throw std::invalid_argument("pair_oracle: needs a one-dimensional density measure");
    }
    const auto &spec = mu.marginals()[0].spec;
    const int nodes = spec.nodes;
    const double h = (spec.hi - spec.lo) / (nodes - 1);
    // The integrand avoids dividing by rho: Q_n(x) rho(x) = (-1)^n rho^(n)(x).
    complex acc{};
    for (int i = 0; i < nodes; ++i) {
        const double x = spec.lo + i * h;
        const complex xc(x);
        complex q{};
        for (int n = 0; n <= Phi.N(); ++n) {
            const auto dn = rho->derivative(n, x);
            if (!dn) {
                throw std::domain_error("pair_oracle: density derivative of order " + std::to_string(n)
                                        + " unavailable at x = " + std::to_string(x));
            }
            q += Phi[n].coeffs()[0] * ((n % 2 == 0 ? 1.0 : -1.0) * *dn);
        }
        if (q == complex{}) {
            continue;
        }
        const double w = (i == 0 || i == nodes - 1) ? 0.5 * h : h;
        acc += w * q * eval_test(sys, phi, std::span<const complex>(&xc, 1));
    }
    return acc;
}

double test_norm(const KernelSequence &phi, int p, int q, const WeightModel &w)
{
    require_basis(phi, Basis::appell_p, "test_norm");
    double s = 0.0;
    for (int n = 0; n <= phi.N(); ++n) {
        const double f = factorial(n);
        const double v = weighted_norm(phi[n], p, w);
        s += f * f * std::exp2(n * q) * v * v;
    }
    return std::sqrt(s);
}

double dist_norm(const KernelSequence &Phi, int p, int q, double beta, const WeightModel &w)
{
    require_basis(Phi, Basis::appell_q, "dist_norm");
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("dist_norm: beta must lie in [0,1]");
    }
    double s = 0.0;
    for (int n = 0; n <= Phi.N(); ++n) {
        const double v = weighted_norm(Phi[n], -p, w);
        s += std::pow(factorial(n), 1.0 - beta) * std::exp2(-q * n) * v * v;
    }
    return std::sqrt(s);
}

double e_norm(const KernelSequence &f, int p, int q, double beta, const WeightModel &w)
{
    require_basis(f, Basis::monomial, "e_norm");
    if (!(beta >= -1.0 && beta <= 1.0)) {
        throw std::invalid_argument("e_norm: beta must lie in [-1,1]");
    }
    double s = 0.0;
    for (int n = 0; n <= f.N(); ++n) {
        const double v = weighted_norm(f[n], p, w);
        s += std::pow(factorial(n), 1.0 + beta) * std::exp2(n * q) * v * v;
    }
    return std::sqrt(s);
}

KernelSequence reorder_p_to_monomial(const AppellSystem &sys, const KernelSequence &phi)
{
    require_basis(phi, Basis::appell_p, "reorder_p_to_monomial");
    require_measure(sys, phi, "reorder_p_to_monomial");
    require_truncation(sys, phi.N(), "reorder_p_to_monomial");
    const int N = phi.N();
    auto out = KernelSequence::zero(phi.d, N, Basis::monomial);
    for (int k = 0; k <= N; ++k) {
        for (int n = 0; n + k <= N; ++n) {
            out[k] += binomial(n + k, k) * contract(sys.B(n), phi[n + k]);
        }
    }
    return out;
}

KernelSequence reorder_monomial_to_p(const AppellSystem &sys, const KernelSequence &f)
{
    require_basis(f, Basis::monomial, "reorder_monomial_to_p");
    if (f.d != sys.dim()) {
        throw std::invalid_argument("reorder_monomial_to_p: dimension mismatch");
    }
    require_truncation(sys, f.N(), "reorder_monomial_to_p");
    const int N = f.N();
    auto out = KernelSequence::zero(f.d, N, Basis::appell_p, sys.measure_id());
    for (int k = 0; k <= N; ++k) {
        for (int n = 0; n + k <= N; ++n) {
            out[k] += binomial(n + k, k) * contract(sys.M(n), f[n + k]);
        }
    }
    return out;
}

complex eval_test(const AppellSystem &sys, const KernelSequence &phi, std::span<const complex> z)
{
    require_basis(phi, Basis::appell_p, "eval_test");
    require_measure(sys, phi, "eval_test");
    require_truncation(sys, phi.N(), "eval_test");
    complex acc{};
    for (int n = 0; n <= phi.N(); ++n) {
        if (!phi[n].is_zero()) {
            acc += pairing(p_kernel(sys, n, z), phi[n]);
        }
    }
    return acc;
}

complex eval_monomial(const KernelSequence &f, std::span<const complex> z)
{
    require_basis(f, Basis::monomial, "eval_monomial");
    return evaluate_series(f.kernels, z);
}

KernelSequence mu_exponential(const AppellSystem &sys, std::span<const complex> theta, int N)
{
    if (static_cast<int>(theta.size()) != sys.dim()) {
        throw std::invalid_argument("mu_exponential: theta dimension mismatch");
    }
    auto out = KernelSequence::zero(sys.dim(), N, Basis::appell_p, sys.measure_id());
    for (int n = 0; n <= N; ++n) {
        out[n] = SymKernel::tensor_power(theta, n) * (1.0 / factorial(n));
    }
    return out;
}

} // namespace achaos
