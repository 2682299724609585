#include <achaos/wick.hpp>

#include <achaos/calculus.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace achaos
{

KernelSequence wick_product(const KernelSequence &Phi, const KernelSequence &Psi, int max_degree)
{
    require_basis(Phi, Basis::appell_q, "wick_product");
    require_compatible(Phi, Psi, "wick_product");
    if (max_degree < 0) {
        throw std::invalid_argument("wick_product: negative degree cap");
    }
    const int full = Phi.N() + Psi.N();
    const int N = std::min(full, max_degree);
    KernelSequence out;
    out.d = Phi.d;
    out.basis = Basis::appell_q;
    out.measure_id = Phi.measure_id;
    out.kernels = series_product(Phi.kernels, Psi.kernels, N);
    if (N < full) {
        out.degree_cap = max_degree;
    }
    return out;
}

KernelSequence wick_power(const KernelSequence &Phi, int m, int max_degree)
{
    require_basis(Phi, Basis::appell_q, "wick_power");
    if (m < 0) {
        throw std::invalid_argument("wick_power: negative exponent (use wick_inverse)");
    }
    auto acc = KernelSequence::constant(Phi.d, 0, Basis::appell_q, Phi.measure_id, 1.0);
    for (int i = 0; i < m; ++i) {
        auto next = wick_product(acc, Phi, max_degree);
        if (acc.degree_cap) {
            next.degree_cap = acc.degree_cap;
        }
        acc = std::move(next);
    }
    return acc;
}

KernelSequence wick_apply_series(std::span<const complex> a, const KernelSequence &Phi)
{
    require_basis(Phi, Basis::appell_q, "wick_apply_series");
    const int N = Phi.N();
    if (static_cast<int>(a.size()) < N + 1) {
        throw std::invalid_argument("wick_apply_series: series coefficients given through degree "
                                    + std::to_string(static_cast<int>(a.size()) - 1) + ", need "
                                    + std::to_string(N));
    }
    auto centered = Phi;
    centered[0] = SymKernel(Phi.d, 0);
    auto out = KernelSequence::constant(Phi.d, N, Basis::appell_q, Phi.measure_id, a[0]);
    auto power = KernelSequence::constant(Phi.d, N, Basis::appell_q, Phi.measure_id, 1.0);
    for (int k = 1; k <= N; ++k) {
        power = resized(wick_product(power, centered, 2 * N), N);
        for (int n = 0; n <= N; ++n) {
            out[n] += a[static_cast<std::size_t>(k)] * power[n];
        }
    }
    return out;
}

KernelSequence wick_inverse(const KernelSequence &Phi, double tol)
{
    require_basis(Phi, Basis::appell_q, "wick_inverse");
    const complex e = Phi[0].coeffs()[0];
    if (std::abs(e) <= tol) {
        throw std::domain_error("wick_inverse: expectation Phi^(0) vanishes, not Wick invertible");
    }
    auto out = KernelSequence::zero(Phi.d, Phi.N(), Basis::appell_q, Phi.measure_id);
    out[0].coeffs()[0] = 1.0 / e;
    for (int n = 1; n <= Phi.N(); ++n) {
        SymKernel acc(Phi.d, n);
        for (int k = 1; k <= n; ++k) {
            acc += sym_product(Phi[k], out[n - k]);
        }
        out[n] = acc * (-1.0 / e);
    }
    return out;
}

KernelSequence wick_solve(const KernelSequence &Phi, const KernelSequence &Psi, double tol)
{
    require_compatible(Phi, Psi, "wick_solve");
    const int N = std::min(Phi.N(), Psi.N());
    return resized(wick_product(wick_inverse(resized(Phi, N), tol), resized(Psi, N), 2 * N), N);
}

WickNormReport wick_norm_check(const KernelSequence &Phi, const KernelSequence &Psi, int p1, int q1, int p2, int q2,
                               const WeightModel &w)
{
    WickNormReport r;
    const auto prod = wick_product(Phi, Psi, Phi.N() + Psi.N());
    r.lhs = dist_norm(prod, std::max(p1, p2), q1 + q2 + 1, 1.0, w);
    r.rhs = dist_norm(Phi, p1, q1, 1.0, w) * dist_norm(Psi, p2, q2, 1.0, w);
    r.ok = r.lhs <= r.rhs * (1.0 + 1e-12);
    return r;
}

} // namespace achaos
