#include <achaos/appell.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace achaos
{

namespace
{

constexpr double l_guard = 1e-6;

void require_dim(const AppellSystem &sys, std::span<const complex> x, const char *op)
{
    if (static_cast<int>(x.size()) != sys.dim()) {
        throw std::invalid_argument(std::string(op) + ": point dimension " + std::to_string(x.size())
                                    + " does not match measure dimension " + std::to_string(sys.dim()));
    }
}

void require_degree(const AppellSystem &sys, int n, const char *op)
{
    if (n < 0 || n > sys.N()) {
        throw std::out_of_range(std::string(op) + ": degree " + std::to_string(n) + " outside 0.."
                                + std::to_string(sys.N()));
    }
}

} // namespace

AppellSystem::AppellSystem(MeasurePtr mu, int N) : mu_(std::move(mu)), N_(N)
{
    if (!mu_) {
        throw std::invalid_argument("build_appell: no measure");
    }
    if (N < 0) {
        throw std::invalid_argument("build_appell: negative truncation");
    }
    if (N > mu_->max_degree()) {
        throw std::out_of_range("build_appell: measure '" + mu_->id() + "' has moments only through degree "
                                + std::to_string(mu_->max_degree()) + ", requested " + std::to_string(N));
    }
    const int d = mu_->dim();
    B_.push_back(SymKernel::scalar(d, 1.0));
    for (int n = 1; n <= N; ++n) {
        SymKernel acc(d, n);
        for (int k = 0; k < n; ++k) {
            acc += binomial(n, k) * sym_product(B_[static_cast<std::size_t>(k)], mu_->moment(n - k));
        }
        B_.push_back(-acc);
    }
}

const SymKernel &AppellSystem::M(int n) const
{
    require_degree(*this, n, "AppellSystem::M");
    return mu_->moment(n);
}

const SymKernel &AppellSystem::B(int n) const
{
    require_degree(*this, n, "AppellSystem::B");
    return B_[static_cast<std::size_t>(n)];
}

AppellSystem build_appell(MeasurePtr mu, int N)
{
    return AppellSystem(std::move(mu), N);
}

SymKernel p_kernel(const AppellSystem &sys, int n, std::span<const complex> x)
{
    require_degree(sys, n, "p_kernel");
    require_dim(sys, x, "p_kernel");
    SymKernel acc(sys.dim(), n);
    for (int k = 0; k <= n; ++k) {
        acc += binomial(n, k) * sym_product(SymKernel::tensor_power(x, k), sys.B(n - k));
    }
    return acc;
}

double recursion_residual(const AppellSystem &sys)
{
    double r = 0.0;
    for (int n = 1; n <= sys.N(); ++n) {
        SymKernel acc(sys.dim(), n);
        for (int k = 0; k <= n; ++k) {
            acc += binomial(n, k) * sym_product(sys.B(k), sys.M(n - k));
        }
        r = std::max(r, weighted_norm(acc, 0, sys.measure().weights()));
    }
    return r;
}

EmuValue emu_eval(const AppellSystem &sys, std::span<const complex> theta, std::span<const complex> x)
{
    require_dim(sys, theta, "emu_eval");
    require_dim(sys, x, "emu_eval");
    EmuValue out;
    complex l;
    if (auto closed = sys.measure().closed_form_laplace(theta)) {
        l = *closed;
    } else {
        l = laplace_eval(sys.measure(), theta, sys.N()).series;
    }
    if (std::abs(l) < l_guard) {
        throw std::domain_error("emu_eval: Laplace transform vanishes at theta (|l| < 1e-6)");
    }
    for (int n = 0; n <= sys.N(); ++n) {
        out.series += apply_to_point(p_kernel(sys, n, x), theta) / factorial(n);
    }
    if (sys.measure().has_closed_form_laplace()) {
        complex xt{};
        for (std::size_t i = 0; i < x.size(); ++i) {
            xt += x[i] * theta[i];
        }
        out.closed = std::exp(xt) / l;
    }
    return out;
}

double check_addition(const AppellSystem &sys, int n, std::span<const complex> x, std::span<const complex> y)
{
    require_degree(sys, n, "check_addition");
    require_dim(sys, x, "check_addition");
    require_dim(sys, y, "check_addition");
    cvector xy(x.begin(), x.end());
    for (std::size_t i = 0; i < xy.size(); ++i) {
        xy[i] += y[i];
    }
    SymKernel rhs(sys.dim(), n);
    for (int k = 0; k <= n; ++k) {
        rhs += binomial(n, k) * sym_product(p_kernel(sys, k, x), SymKernel::tensor_power(y, n - k));
    }
    return (p_kernel(sys, n, xy) - rhs).max_abs();
}

double check_monomial(const AppellSystem &sys, int n, std::span<const complex> x)
{
    require_degree(sys, n, "check_monomial");
    require_dim(sys, x, "check_monomial");
    SymKernel rhs(sys.dim(), n);
    for (int k = 0; k <= n; ++k) {
        rhs += binomial(n, k) * sym_product(p_kernel(sys, k, x), sys.M(n - k));
    }
    return (SymKernel::tensor_power(x, n) - rhs).max_abs();
}

GrowthReport growth_bound_check(const AppellSystem &sys, int p, double eps, std::span<const cvector> samples)
{
    if (!(eps > 0.0)) {
        throw std::invalid_argument("growth_bound_check: eps must be positive");
    }
    GrowthReport rep;
    rep.p = p;
    rep.eps = eps;
    rep.per_n.assign(static_cast<std::size_t>(sys.N()) + 1, 0.0);
    const auto &w = sys.measure().weights();
    for (const auto &z : samples) {
        require_dim(sys, z, "growth_bound_check");
        const double zn = weighted_norm(SymKernel::vector(z), -p, w);
        for (int n = 0; n <= sys.N(); ++n) {
            const double lhs = weighted_norm(p_kernel(sys, n, z), -p, w);
            // log-space keeps eps^{-n} n! from overflowing for small eps
            const double c = std::exp(std::log(std::max(lhs, 1e-300)) + n * std::log(eps) - std::lgamma(n + 1.0)
                                      - eps * zn);
            auto &slot = rep.per_n[static_cast<std::size_t>(n)];
            slot = std::max(slot, lhs == 0.0 ? 0.0 : c);
        }
    }
    rep.C_emp = *std::max_element(rep.per_n.begin(), rep.per_n.end());
    const auto half = rep.per_n.begin() + static_cast<std::ptrdiff_t>(rep.per_n.size() / 2);
    const double lower = *std::max_element(rep.per_n.begin(), half);
    const double upper = half == rep.per_n.end() ? 0.0 : *std::max_element(half, rep.per_n.end());
    rep.bounded = upper <= lower;
    return rep;
}

KernelSequence derivative_op(const SymKernel &Phi, const KernelSequence &f)
{
    require_basis(f, Basis::monomial, "derivative_op");
    if (Phi.dim() != f.d) {
        throw std::invalid_argument("derivative_op: dimension mismatch");
    }
    const int k = Phi.degree();
    auto out = KernelSequence::zero(f.d, f.N(), Basis::monomial);
    for (int m = k; m <= f.N(); ++m) {
        out[m - k] = (factorial(m) / factorial(m - k)) * contract(Phi, f[m]);
    }
    return out;
}

} // namespace achaos
