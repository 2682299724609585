// Appell polynomial system of a measure.
//
// The polynomials P_n(x) are generated by e^{<x,theta>}/l(theta). Their
// constant terms B_n = P_n(0) are the coefficients of 1/l and satisfy
// B_0 = 1, sum_k binom(n,k) B_k (x)^ M_{n-k} = 0 for n >= 1.

#ifndef ACHAOS_APPELL_HPP
#define ACHAOS_APPELL_HPP

#include <achaos/measure.hpp>
#include <achaos/sequence.hpp>

#include <optional>
#include <span>
#include <vector>

namespace achaos
{

class AppellSystem
{
public:
    AppellSystem(MeasurePtr mu, int N);

    const MeasureModel &measure() const noexcept
    {
        return *mu_;
    }
    const MeasurePtr &measure_ptr() const noexcept
    {
        return mu_;
    }
    const std::string &measure_id() const noexcept
    {
        return mu_->id();
    }
    int dim() const noexcept
    {
        return mu_->dim();
    }
    int N() const noexcept
    {
        return N_;
    }
    const SymKernel &M(int n) const;
    const SymKernel &B(int n) const;
    const std::vector<SymKernel> &B_table() const noexcept
    {
        return B_;
    }

private:
    MeasurePtr mu_;
    int N_;
    std::vector<SymKernel> B_;
};

AppellSystem build_appell(MeasurePtr mu, int N);

// P_n(x) = sum_k binom(n,k) x^{(x)k} (x)^ B_{n-k}
SymKernel p_kernel(const AppellSystem &sys, int n, std::span<const complex> x);

// max_n |sum_k binom(n,k) B_k (x)^ M_{n-k}|_0 over 1 <= n <= N.
double recursion_residual(const AppellSystem &sys);

struct EmuValue {
    complex series;
    std::optional<complex> closed; // e^{<x,theta>}/l(theta) when l has a closed form
};
// Truncated sum_n <P_n(x), theta^{(x)n}>/n!.
EmuValue emu_eval(const AppellSystem &sys, std::span<const complex> theta, std::span<const complex> x);

// Max-norm residuals of the binomial identities; all vanish in exact arithmetic.
//   addition: P_n(x+y) = sum_k binom(n,k) P_k(x) (x)^ y^{(x)(n-k)}
//   monomial: x^{(x)n} = sum_k binom(n,k) P_k(x) (x)^ M_{n-k}
double check_addition(const AppellSystem &sys, int n, std::span<const complex> x, std::span<const complex> y);
double check_monomial(const AppellSystem &sys, int n, std::span<const complex> x);

struct GrowthReport {
    int p = 0;
    double eps = 0.0;
    double C_emp = 0.0;
    std::vector<double> per_n; // index n = 0..N
    bool bounded = true;       // no growth in the upper half of the range
};
// Empirical C with |P_n(z)|_{-p} <= C n! eps^{-n} e^{eps |z|_{-p}} over the samples.
GrowthReport growth_bound_check(const AppellSystem &sys, int p, double eps, std::span<const cvector> samples);

// Derivative operator D(Phi) on a monomial-basis sequence: slot m maps to
// m!/(m-k)! contract(Phi, f^(m)) at slot m-k.
KernelSequence derivative_op(const SymKernel &Phi, const KernelSequence &f);

} // namespace achaos

#endif
