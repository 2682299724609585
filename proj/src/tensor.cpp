#include <achaos/tensor.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace achaos
{

namespace
{
__extension__ typedef unsigned __int128 u128;
}

cvector to_complex(std::span<const double> x)
{
    return cvector(x.begin(), x.end());
}

std::uint64_t binomial_u64(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) is divisible by i at every step.
        const auto num = static_cast<u128>(r) * static_cast<unsigned>(n - k + i);
        r = static_cast<std::uint64_t>(num / static_cast<unsigned>(i));
    }
    return r;
}

double binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0.0;
    }
    if (n <= 62) {
        return static_cast<double>(binomial_u64(n, k));
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

double factorial(int n)
{
    static const auto table = [] {
        std::array<double, 171> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i) {
            t[i] = t[i - 1] * static_cast<double>(i);
        }
        return t;
    }();
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    if (n >= static_cast<int>(table.size())) {
        return HUGE_VAL;
    }
    return table[static_cast<std::size_t>(n)];
}

double multinomial(std::span<const int> alpha)
{
    // Product of binomials keeps every intermediate value an exact integer.
    std::uint64_t r = 1;
    int total = 0;
    bool exact = true;
    double approx = 1.0;
    for (int a : alpha) {
        total += a;
        const auto b = binomial_u64(total, a);
        const auto prod = static_cast<u128>(r) * b;
        if (prod >> 64) {
            exact = false;
        }
        r = static_cast<std::uint64_t>(prod);
        approx *= binomial(total, a);
    }
    return exact ? static_cast<double>(r) : approx;
}

// MultiIndex ----------------------------------------------------------------

MultiIndex::MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents))
{
    for (int e : exps_) {
        if (e < 0) {
            throw std::invalid_argument("multi-index exponents must be nonnegative");
        }
        degree_ += e;
    }
}

MultiIndex MultiIndex::operator+(const MultiIndex &other) const
{
    if (other.dim() != dim()) {
        throw std::invalid_argument("multi-index dimension mismatch");
    }
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += other.exps_[i];
    }
    return MultiIndex(std::move(e));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex &other) const
{
    if (auto c = degree_ <=> other.degree_; c != 0) {
        return c;
    }
    if (auto c = dim() <=> other.dim(); c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != other.exps_[i]) {
            // larger leading exponent comes first
            return other.exps_[i] <=> exps_[i];
        }
    }
    return std::strong_ordering::equal;
}

namespace
{

void enumerate(int dim, int remaining, std::vector<int> &cur, std::vector<MultiIndex> &out)
{
    const auto pos = cur.size();
    if (static_cast<int>(pos) == dim - 1) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur.push_back(v);
        enumerate(dim, remaining - v, cur, out);
        cur.pop_back();
    }
}

} // namespace

const std::vector<MultiIndex> &multi_indices(int dim, int degree)
{
    if (dim < 1 || degree < 0) {
        throw std::invalid_argument("multi_indices: need dim >= 1 and degree >= 0");
    }
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::unique_ptr<const std::vector<MultiIndex>>> cache;
    std::lock_guard lock(mtx);
    auto &slot = cache[{dim, degree}];
    if (!slot) {
        std::vector<MultiIndex> out;
        out.reserve(multi_index_count(dim, degree));
        std::vector<int> cur;
        enumerate(dim, degree, cur, out);
        slot = std::make_unique<const std::vector<MultiIndex>>(std::move(out));
    }
    return *slot;
}

std::size_t multi_index_count(int dim, int degree)
{
    return static_cast<std::size_t>(binomial_u64(degree + dim - 1, dim - 1));
}

std::size_t multi_index_rank(const MultiIndex &alpha)
{
    // Count the indices that precede alpha: at coordinate i every larger
    // exponent v > alpha_i opens a block of compositions of the remainder.
    const int d = alpha.dim();
    int remaining = alpha.degree();
    std::size_t rank = 0;
    for (int i = 0; i + 1 < d; ++i) {
        const int parts = d - i - 1;
        for (int v = remaining; v > alpha[i]; --v) {
            rank += multi_index_count(parts, remaining - v);
        }
        remaining -= alpha[i];
    }
    return rank;
}

// WeightModel ----------------------------------------------------------------

WeightModel::WeightModel(std::vector<double> lambda) : lambda_(std::move(lambda))
{
    if (lambda_.empty()) {
        throw std::invalid_argument("WeightModel: dimension must be at least 1");
    }
    for (double l : lambda_) {
        if (!(l >= 1.0) || !std::isfinite(l)) {
            throw std::invalid_argument("WeightModel: weights must be finite and >= 1");
        }
    }
}

WeightModel WeightModel::uniform(int dim, double lambda)
{
    if (dim < 1) {
        throw std::invalid_argument("WeightModel: dimension must be at least 1");
    }
    return WeightModel(std::vector<double>(static_cast<std::size_t>(dim), lambda));
}

// SymKernel ------------------------------------------------------------------

SymKernel::SymKernel(int dim, int degree) : dim_(dim), degree_(degree)
{
    if (dim < 1 || degree < 0) {
        throw std::invalid_argument("SymKernel: need dim >= 1 and degree >= 0");
    }
    coeffs_.assign(multi_index_count(dim, degree), complex{});
}

SymKernel SymKernel::scalar(int dim, complex value)
{
    SymKernel k(dim, 0);
    k.coeffs_[0] = value;
    return k;
}

SymKernel SymKernel::vector(std::span<const complex> z)
{
    SymKernel k(static_cast<int>(z.size()), 1);
    // degree-1 indices are e_1, ..., e_d in order
    std::copy(z.begin(), z.end(), k.coeffs_.begin());
    return k;
}

SymKernel SymKernel::unit(int dim, int i)
{
    if (i < 0 || i >= dim) {
        throw std::out_of_range("SymKernel::unit: coordinate out of range");
    }
    SymKernel k(dim, 1);
    k.coeffs_[static_cast<std::size_t>(i)] = 1.0;
    return k;
}

SymKernel SymKernel::tensor_power(std::span<const complex> z, int n)
{
    const int d = static_cast<int>(z.size());
    SymKernel k(d, n);
    const auto &idx = k.indices();
    for (std::size_t j = 0; j < idx.size(); ++j) {
        complex v = 1.0;
        for (int i = 0; i < d; ++i) {
            for (int e = 0; e < idx[j][i]; ++e) {
                v *= z[static_cast<std::size_t>(i)];
            }
        }
        k.coeffs_[j] = v;
    }
    return k;
}

complex SymKernel::operator[](const MultiIndex &alpha) const
{
    if (alpha.dim() != dim_ || alpha.degree() != degree_) {
        throw std::invalid_argument("SymKernel: multi-index does not match kernel shape");
    }
    return coeffs_[multi_index_rank(alpha)];
}

complex &SymKernel::operator[](const MultiIndex &alpha)
{
    if (alpha.dim() != dim_ || alpha.degree() != degree_) {
        throw std::invalid_argument("SymKernel: multi-index does not match kernel shape");
    }
    return coeffs_[multi_index_rank(alpha)];
}

bool SymKernel::is_zero() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](complex c) { return c == complex{}; });
}

double SymKernel::max_abs() const noexcept
{
    double m = 0.0;
    for (auto c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

void SymKernel::check_compatible(const SymKernel &other) const
{
    if (other.dim_ != dim_ || other.degree_ != degree_) {
        throw std::invalid_argument("SymKernel: shape mismatch (dim " + std::to_string(dim_) + " deg "
                                    + std::to_string(degree_) + " vs dim " + std::to_string(other.dim_)
                                    + " deg " + std::to_string(other.degree_) + ")");
    }
}

SymKernel &SymKernel::operator+=(const SymKernel &other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

SymKernel &SymKernel::operator-=(const SymKernel &other)
{
    check_compatible(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

SymKernel &SymKernel::operator*=(complex c) noexcept
{
    for (auto &x : coeffs_) {
        x *= c;
    }
    return *this;
}

// Free operations ------------------------------------------------------------

namespace
{

void require_same_dim(const SymKernel &a, const SymKernel &b, const char *op)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs "
                                    + std::to_string(b.dim()) + ")");
    }
}

std::vector<double> multiplicities(const std::vector<MultiIndex> &idx)
{
    std::vector<double> m(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        m[i] = multinomial(idx[i].exponents());
    }
    return m;
}

} // namespace

SymKernel sym_product(const SymKernel &f, const SymKernel &g)
{
    require_same_dim(f, g, "sym_product");
    const int n = f.degree();
    const int m = g.degree();
    SymKernel out(f.dim(), n + m);
    const auto &fi = f.indices();
    const auto &gi = g.indices();
    const auto fm = multiplicities(fi);
    const auto gm = multiplicities(gi);
    auto oc = out.coeffs();
    for (std::size_t a = 0; a < fi.size(); ++a) {
        const complex fa = f.coeffs()[a];
        if (fa == complex{}) {
            continue;
        }
        for (std::size_t b = 0; b < gi.size(); ++b) {
            const complex gb = g.coeffs()[b];
            if (gb == complex{}) {
                continue;
            }
            const MultiIndex gamma = fi[a] + gi[b];
            const double w = fm[a] * gm[b] / multinomial(gamma.exponents());
            oc[multi_index_rank(gamma)] += w * fa * gb;
        }
    }
    return out;
}

SymKernel contract(const SymKernel &Phi, const SymKernel &phi)
{
    require_same_dim(Phi, phi, "contract");
    const int n = Phi.degree();
    const int m = phi.degree();
    if (m < n) {
        throw std::invalid_argument("contract: degree of phi (" + std::to_string(m) + ") below degree of Phi ("
                                    + std::to_string(n) + ")");
    }
    // r_beta = sum_alpha (n!/alpha!) Phi_alpha phi_{alpha+beta}
    SymKernel out(Phi.dim(), m - n);
    const auto &pi = Phi.indices();
    const auto pm = multiplicities(pi);
    const auto &ri = out.indices();
    auto oc = out.coeffs();
    for (std::size_t b = 0; b < ri.size(); ++b) {
        complex acc{};
        for (std::size_t a = 0; a < pi.size(); ++a) {
            const complex pa = Phi.coeffs()[a];
            if (pa == complex{}) {
                continue;
            }
            acc += pm[a] * pa * phi.coeffs()[multi_index_rank(pi[a] + ri[b])];
        }
        oc[b] = acc;
    }
    return out;
}

complex pairing(const SymKernel &f, const SymKernel &g)
{
    require_same_dim(f, g, "pairing");
    if (f.degree() != g.degree()) {
        throw std::invalid_argument("pairing: degree mismatch");
    }
    const auto &idx = f.indices();
    complex acc{};
    for (std::size_t i = 0; i < idx.size(); ++i) {
        acc += multinomial(idx[i].exponents()) * f.coeffs()[i] * g.coeffs()[i];
    }
    return acc;
}

double weighted_norm(const SymKernel &f, int p, const WeightModel &w)
{
    if (w.dim() != f.dim()) {
        throw std::invalid_argument("weighted_norm: weight model dimension mismatch");
    }
    const auto &idx = f.indices();
    double acc = 0.0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const double c = std::norm(f.coeffs()[j]);
        if (c == 0.0) {
            continue;
        }
        double scale = 1.0;
        for (int i = 0; i < f.dim(); ++i) {
            scale *= std::pow(w[i], 2.0 * p * idx[j][i]);
        }
        acc += multinomial(idx[j].exponents()) * c * scale;
    }
    return std::sqrt(acc);
}

double hs_norm(const WeightModel &w, int p_hi, int p_lo)
{
    if (p_hi <= p_lo) {
        throw std::invalid_argument("hs_norm: need p_hi > p_lo");
    }
    double acc = 0.0;
    for (double l : w.lambda()) {
        acc += std::pow(l, -2.0 * (p_hi - p_lo));
    }
    return std::sqrt(acc);
}

complex apply_to_point(const SymKernel &f, std::span<const complex> z)
{
    if (static_cast<int>(z.size()) != f.dim()) {
        throw std::invalid_argument("apply_to_point: point dimension mismatch");
    }
    const auto &idx = f.indices();
    complex acc{};
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const complex c = f.coeffs()[j];
        if (c == complex{}) {
            continue;
        }
        complex mono = 1.0;
        for (int i = 0; i < f.dim(); ++i) {
            for (int e = 0; e < idx[j][i]; ++e) {
                mono *= z[static_cast<std::size_t>(i)];
            }
        }
        acc += multinomial(idx[j].exponents()) * c * mono;
    }
    return acc;
}

} // namespace achaos
