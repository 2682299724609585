#include <achaos/remeasure.hpp>

#include <stdexcept>

namespace achaos
{

namespace
{

void require_same_space(const AppellSystem &sys, const AppellSystem &sys_hat, const char *op)
{
    if (sys.dim() != sys_hat.dim()) {
        throw std::invalid_argument(std::string(op) + ": measures live in different dimensions");
    }
    if (!(sys.measure().weights() == sys_hat.measure().weights())) {
        throw std::invalid_argument(std::string(op) + ": measures carry different weight models");
    }
}

void require_reach(const AppellSystem &sys, int N, const char *op)
{
    if (N > sys.N()) {
        throw std::out_of_range(std::string(op) + ": truncation insufficient, system for '" + sys.measure_id()
                                + "' stops at " + std::to_string(sys.N()) + ", need " + std::to_string(N));
    }
}

// C_j = sum_{l+m=j} j!/(l! m!) B_l (x)^ M^_m, j <= N. The l < j terms are
// summed in the order the B recursion uses, so for mu_hat = mu every C_j with
// j > 0 cancels to zero exactly.
std::vector<SymKernel> combined_table(const AppellSystem &sys, const AppellSystem &sys_hat, int N)
{
    std::vector<SymKernel> c;
    c.push_back(sym_product(sys.B(0), sys_hat.M(0)));
    for (int j = 1; j <= N; ++j) {
        SymKernel acc(sys.dim(), j);
        for (int l = 0; l < j; ++l) {
            acc += binomial(j, l) * sym_product(sys.B(l), sys_hat.M(j - l));
        }
        acc += sym_product(sys.B(j), sys_hat.M(0));
        c.push_back(std::move(acc));
    }
    return c;
}

} // namespace

CrossExpansion p_cross_expand(const AppellSystem &sys, const AppellSystem &sys_hat, int n)
{
    require_same_space(sys, sys_hat, "p_cross_expand");
    require_reach(sys, n, "p_cross_expand");
    require_reach(sys_hat, n, "p_cross_expand");
    CrossExpansion e;
    e.n = n;
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; k + l <= n; ++l) {
            const int m = n - k - l;
            const int idx[3] = {k, l, m};
            e.terms.push_back({k, l, m, multinomial(idx), sym_product(sys.B(l), sys_hat.M(m))});
        }
    }
    return e;
}

SymKernel cross_expand_eval(const CrossExpansion &e, const AppellSystem &sys_hat, std::span<const complex> x)
{
    SymKernel acc(sys_hat.dim(), e.n);
    for (const auto &t : e.terms) {
        acc += t.coefficient * sym_product(p_kernel(sys_hat, t.k, x), t.kernel);
    }
    return acc;
}

double cross_expand_residual(const AppellSystem &sys, const AppellSystem &sys_hat, int n,
                             std::span<const complex> x)
{
    const auto e = p_cross_expand(sys, sys_hat, n);
    return (p_kernel(sys, n, x) - cross_expand_eval(e, sys_hat, x)).max_abs();
}

KernelSequence retarget_test(const KernelSequence &phi, const AppellSystem &sys, const AppellSystem &sys_hat)
{
    require_basis(phi, Basis::appell_p, "retarget_test");
    require_same_space(sys, sys_hat, "retarget_test");
    if (phi.measure_id != sys.measure_id()) {
        throw std::invalid_argument("retarget_test: test function is not expanded under '" + sys.measure_id()
                                    + "'");
    }
    const int N = phi.N();
    require_reach(sys, N, "retarget_test");
    require_reach(sys_hat, N, "retarget_test");
    // multinomial(n, l, m) = binomial(n + j, n) j!/(l! m!) with j = l + m
    const auto C = combined_table(sys, sys_hat, N);
    auto out = KernelSequence::zero(phi.d, N, Basis::appell_p, sys_hat.measure_id());
    for (int n = 0; n <= N; ++n) {
        for (int j = 0; n + j <= N; ++j) {
            const auto &src = phi[n + j];
            if (src.is_zero()) {
                continue;
            }
            out[n] += binomial(n + j, n) * contract(C[static_cast<std::size_t>(j)], src);
        }
    }
    return out;
}

KernelSequence retarget_dist(const KernelSequence &Phi_hat, const AppellSystem &sys, const AppellSystem &sys_hat)
{
    require_basis(Phi_hat, Basis::appell_q, "retarget_dist");
    require_same_space(sys, sys_hat, "retarget_dist");
    if (Phi_hat.measure_id != sys_hat.measure_id()) {
        throw std::invalid_argument("retarget_dist: distribution is not expanded under '" + sys_hat.measure_id()
                                    + "'");
    }
    const int N = Phi_hat.N();
    require_reach(sys, N, "retarget_dist");
    require_reach(sys_hat, N, "retarget_dist");
    const auto C = combined_table(sys, sys_hat, N);
    auto out = KernelSequence::zero(Phi_hat.d, N, Basis::appell_q, sys.measure_id());
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (Phi_hat[k].is_zero()) {
                continue;
            }
            out[n] += (1.0 / factorial(n - k)) * sym_product(Phi_hat[k], C[static_cast<std::size_t>(n - k)]);
        }
    }
    return out;
}

} // namespace achaos
