#include <achaos/sequence.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace achaos
{

std::string to_string(Basis b)
{
    switch (b) {
        case Basis::appell_p:
            return "P";
        case Basis::appell_q:
            return "Q";
        case Basis::monomial:
            return "monomial";
    }
    return "unknown";
}

Basis basis_from_string(const std::string &s)
{
    if (s == "P" || s == "p" || s == "test") {
        return Basis::appell_p;
    }
    if (s == "Q" || s == "q" || s == "distribution") {
        return Basis::appell_q;
    }
    if (s == "monomial") {
        return Basis::monomial;
    }
    throw std::invalid_argument("unknown basis tag '" + s + "' (expected P, Q or monomial)");
}

void KernelSequence::validate() const
{
    if (kernels.empty()) {
        throw std::invalid_argument("KernelSequence: no slots");
    }
    for (std::size_t n = 0; n < kernels.size(); ++n) {
        if (kernels[n].degree() != static_cast<int>(n) || kernels[n].dim() != d) {
            throw std::invalid_argument("KernelSequence: slot " + std::to_string(n) + " holds a kernel of degree "
                                        + std::to_string(kernels[n].degree()) + " and dimension "
                                        + std::to_string(kernels[n].dim()));
        }
    }
    if (basis == Basis::monomial && !measure_id.empty()) {
        throw std::invalid_argument("KernelSequence: monomial sequences carry no measure");
    }
}

KernelSequence KernelSequence::zero(int d, int N, Basis basis, std::string measure_id)
{
    if (N < 0) {
        throw std::invalid_argument("KernelSequence: negative truncation");
    }
    KernelSequence s;
    s.d = d;
    s.basis = basis;
    s.measure_id = basis == Basis::monomial ? std::string{} : std::move(measure_id);
    for (int n = 0; n <= N; ++n) {
        s.kernels.emplace_back(d, n);
    }
    return s;
}

KernelSequence KernelSequence::constant(int d, int N, Basis basis, std::string measure_id, complex c)
{
    auto s = zero(d, N, basis, std::move(measure_id));
    s.kernels[0].coeffs()[0] = c;
    return s;
}

KernelSequence KernelSequence::single(const SymKernel &k, int N, Basis basis, std::string measure_id)
{
    if (N < k.degree()) {
        throw std::invalid_argument("KernelSequence::single: truncation below kernel degree");
    }
    auto s = zero(k.dim(), N, basis, std::move(measure_id));
    s.kernels[static_cast<std::size_t>(k.degree())] = k;
    return s;
}

void require_compatible(const KernelSequence &a, const KernelSequence &b, const char *op)
{
    if (a.d != b.d) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
    }
    if (a.basis != b.basis) {
        throw std::invalid_argument(std::string(op) + ": basis mismatch (" + to_string(a.basis) + " vs "
                                    + to_string(b.basis) + ")");
    }
    if (a.measure_id != b.measure_id) {
        throw std::invalid_argument(std::string(op) + ": measure mismatch ('" + a.measure_id + "' vs '"
                                    + b.measure_id + "')");
    }
}

void require_basis(const KernelSequence &a, Basis b, const char *op)
{
    if (a.basis != b) {
        throw std::invalid_argument(std::string(op) + ": expected a " + to_string(b) + "-basis sequence, got "
                                    + to_string(a.basis));
    }
}

KernelSequence resized(KernelSequence s, int N)
{
    if (N < 0) {
        throw std::invalid_argument("resized: negative truncation");
    }
    const int old = s.N();
    s.kernels.resize(static_cast<std::size_t>(std::min(old, N)) + 1);
    for (int n = old + 1; n <= N; ++n) {
        s.kernels.emplace_back(s.d, n);
    }
    return s;
}

double max_abs_diff(const KernelSequence &a, const KernelSequence &b)
{
    if (a.d != b.d) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    const int N = std::max(a.N(), b.N());
    double r = 0.0;
    for (int n = 0; n <= N; ++n) {
        if (n <= a.N() && n <= b.N()) {
            r = std::max(r, (a[n] - b[n]).max_abs());
        } else if (n <= a.N()) {
            r = std::max(r, a[n].max_abs());
        } else {
            r = std::max(r, b[n].max_abs());
        }
    }
    return r;
}

std::vector<SymKernel> series_product(const std::vector<SymKernel> &a, const std::vector<SymKernel> &b, int N)
{
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("series_product: empty series");
    }
    const int d = a[0].dim();
    std::vector<SymKernel> c;
    c.reserve(static_cast<std::size_t>(N) + 1);
    const int Na = static_cast<int>(a.size()) - 1;
    const int Nb = static_cast<int>(b.size()) - 1;
    for (int n = 0; n <= N; ++n) {
        SymKernel acc(d, n);
        for (int k = std::max(0, n - Nb); k <= std::min(n, Na); ++k) {
            acc += sym_product(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(n - k)]);
        }
        c.push_back(std::move(acc));
    }
    return c;
}

complex evaluate_series(const std::vector<SymKernel> &s, std::span<const complex> z)
{
    complex acc{};
    for (const auto &k : s) {
        acc += apply_to_point(k, z);
    }
    return acc;
}

} // namespace achaos
