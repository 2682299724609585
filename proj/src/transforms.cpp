#include <achaos/transforms.hpp>

#include <achaos/calculus.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace achaos
{

complex s_transform(const KernelSequence &Phi, std::span<const complex> theta)
{
    require_basis(Phi, Basis::appell_q, "s_transform");
    if (static_cast<int>(theta.size()) != Phi.d) {
        throw std::invalid_argument("s_transform: theta dimension mismatch");
    }
    return evaluate_series(Phi.kernels, theta);
}

SGuard s_guard(std::span<const complex> theta, const WeightModel &w)
{
    SGuard g;
    const double t = weighted_norm(SymKernel::vector(theta), g.p, w);
    g.inside = std::exp2(g.q) * t * t < 1.0;
    return g;
}

complex c_transform(const KernelSequence &phi, std::span<const complex> z)
{
    require_basis(phi, Basis::appell_p, "c_transform");
    if (static_cast<int>(z.size()) != phi.d) {
        throw std::invalid_argument("c_transform: point dimension mismatch");
    }
    return evaluate_series(phi.kernels, z);
}

std::vector<SymKernel> s_series_of_test(const AppellSystem &sys, const KernelSequence &phi)
{
    const auto f = reorder_p_to_monomial(sys, phi);
    // the series runs as far as the normalized exponential of sys is expanded
    const int N = sys.N();
    const int K = phi.N();
    const int d = phi.d;
    const int top = sys.measure().max_degree();
    // int <x^{(x)k}, f_k> e^{<x,theta>} dmu = sum_i <contract(f_k, M_{k+i}), theta^{(x)i}> / i!
    std::vector<SymKernel> L;
    for (int i = 0; i <= N; ++i) {
        SymKernel acc(d, i);
        for (int k = 0; k <= K; ++k) {
            if (k + i > top) {
                throw std::out_of_range("s_series_of_test: needs moments through degree " + std::to_string(k + i)
                                        + ", measure stores " + std::to_string(top));
            }
            if (!f[k].is_zero()) {
                acc += contract(f[k], sys.measure().moment(k + i));
            }
        }
        L.push_back(acc * (1.0 / factorial(i)));
    }
    std::vector<SymKernel> inv;
    for (int l = 0; l <= N; ++l) {
        inv.push_back(sys.B(l) * (1.0 / factorial(l)));
    }
    return series_product(L, inv, N);
}

complex l_transform(const AppellSystem &sys, const KernelSequence &phi, std::span<const complex> theta,
                    double radius)
{
    require_basis(phi, Basis::appell_p, "l_transform");
    if (static_cast<int>(theta.size()) != sys.dim()) {
        throw std::invalid_argument("l_transform: theta dimension mismatch");
    }
    const auto l = sys.measure().closed_form_laplace(theta);
    if (!l) {
        throw std::invalid_argument("l_transform: measure '" + sys.measure_id()
                                    + "' has no closed-form Laplace transform");
    }
    double t = 0.0;
    for (const auto &c : theta) {
        t += std::norm(c);
    }
    if (std::sqrt(t) > radius) {
        throw std::domain_error("l_transform: |theta| exceeds the guard radius");
    }
    if (std::abs(*l) < 1e-6) {
        throw std::domain_error("l_transform: Laplace transform vanishes at theta");
    }
    return evaluate_series(s_series_of_test(sys, phi), theta) * *l;
}

KernelSequence delta(const AppellSystem &sys, std::span<const complex> z)
{
    return delta(sys, z, sys.N());
}

KernelSequence delta(const AppellSystem &sys, std::span<const complex> z, int N)
{
    auto out = KernelSequence::zero(sys.dim(), N, Basis::appell_q, sys.measure_id());
    for (int n = 0; n <= N; ++n) {
        out[n] = p_kernel(sys, n, z) * (1.0 / factorial(n));
    }
    return out;
}

KernelSequence radon_nikodym(const AppellSystem &sys, std::span<const complex> z, int N)
{
    if (static_cast<int>(z.size()) != sys.dim()) {
        throw std::invalid_argument("radon_nikodym: point dimension mismatch");
    }
    auto out = KernelSequence::zero(sys.dim(), N, Basis::appell_q, sys.measure_id());
    for (int n = 0; n <= N; ++n) {
        out[n] = SymKernel::tensor_power(z, n) * ((n % 2 == 0 ? 1.0 : -1.0) / factorial(n));
    }
    return out;
}

} // namespace achaos
