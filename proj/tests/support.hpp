// Shared helpers for the test binaries: seeded generators and brute-force
// full-tensor oracles that do not go through the multi-index formulas.

#ifndef ACHAOS_TEST_SUPPORT_HPP
#define ACHAOS_TEST_SUPPORT_HPP

#include <achaos/sequence.hpp>
#include <achaos/tensor.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace achaos::testing
{

inline complex random_complex(std::mt19937_64 &rng, bool real = false)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return real ? complex(u(rng), 0.0) : complex(u(rng), u(rng));
}

inline cvector random_vector(std::mt19937_64 &rng, int d, double scale = 1.0, bool real = true)
{
    cvector z(static_cast<std::size_t>(d));
    for (auto &c : z) {
        c = scale * random_complex(rng, real);
    }
    return z;
}

inline SymKernel random_kernel(std::mt19937_64 &rng, int d, int n, bool real = false)
{
    SymKernel k(d, n);
    for (auto &c : k.coeffs()) {
        c = random_complex(rng, real);
    }
    return k;
}

inline KernelSequence random_sequence(std::mt19937_64 &rng, int d, int N, Basis basis, const std::string &id,
                                      bool real = true, double decay = 1.0)
{
    auto s = KernelSequence::zero(d, N, basis, id);
    double scale = 1.0;
    for (int n = 0; n <= N; ++n) {
        s[n] = random_kernel(rng, d, n, real) * scale;
        scale *= decay;
    }
    return s;
}

// Dense full tensor with d^n entries, row-major over index tuples.
struct FullTensor {
    int d = 1;
    int n = 0;
    std::vector<complex> data;

    static std::size_t count(int d, int n)
    {
        std::size_t c = 1;
        for (int i = 0; i < n; ++i) {
            c *= static_cast<std::size_t>(d);
        }
        return c;
    }
    // index tuple of flat position
    std::vector<int> tuple(std::size_t pos) const
    {
        std::vector<int> t(static_cast<std::size_t>(n));
        for (int i = n - 1; i >= 0; --i) {
            t[static_cast<std::size_t>(i)] = static_cast<int>(pos % static_cast<std::size_t>(d));
            pos /= static_cast<std::size_t>(d);
        }
        return t;
    }
    std::size_t flat(const std::vector<int> &t) const
    {
        std::size_t p = 0;
        for (int i : t) {
            p = p * static_cast<std::size_t>(d) + static_cast<std::size_t>(i);
        }
        return p;
    }
};

inline MultiIndex type_of(const std::vector<int> &tuple, int d)
{
    std::vector<int> a(static_cast<std::size_t>(d), 0);
    for (int i : tuple) {
        ++a[static_cast<std::size_t>(i)];
    }
    return MultiIndex(a);
}

inline FullTensor to_full(const SymKernel &k)
{
    FullTensor t{k.dim(), k.degree(), {}};
    t.data.resize(FullTensor::count(t.d, t.n));
    for (std::size_t p = 0; p < t.data.size(); ++p) {
        t.data[p] = k[type_of(t.tuple(p), t.d)];
    }
    return t;
}

// Plain tensor product followed by averaging over all permutations of slots.
inline FullTensor full_sym_product(const FullTensor &a, const FullTensor &b)
{
    FullTensor t{a.d, a.n + b.n, {}};
    t.data.assign(FullTensor::count(t.d, t.n), 0.0);
    std::vector<int> perm(static_cast<std::size_t>(t.n));
    for (int i = 0; i < t.n; ++i) {
        perm[static_cast<std::size_t>(i)] = i;
    }
    double count = 0.0;
    do {
        count += 1.0;
        for (std::size_t p = 0; p < t.data.size(); ++p) {
            const auto tup = t.tuple(p);
            std::vector<int> permuted(tup.size());
            for (std::size_t i = 0; i < tup.size(); ++i) {
                permuted[i] = tup[static_cast<std::size_t>(perm[i])];
            }
            const std::vector<int> ta(permuted.begin(), permuted.begin() + a.n);
            const std::vector<int> tb(permuted.begin() + a.n, permuted.end());
            t.data[p] += a.data[a.flat(ta)] * b.data[b.flat(tb)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto &c : t.data) {
        c /= count;
    }
    return t;
}

// r(i) = sum_j Phi(j) phi(j, i)
inline FullTensor full_contract(const FullTensor &Phi, const FullTensor &phi)
{
    FullTensor r{phi.d, phi.n - Phi.n, {}};
    r.data.assign(FullTensor::count(r.d, r.n), 0.0);
    for (std::size_t i = 0; i < r.data.size(); ++i) {
        const auto ti = r.tuple(i);
        for (std::size_t j = 0; j < Phi.data.size(); ++j) {
            auto tj = Phi.tuple(j);
            tj.insert(tj.end(), ti.begin(), ti.end());
            r.data[i] += Phi.data[j] * phi.data[phi.flat(tj)];
        }
    }
    return r;
}

// sum over all index tuples of f(t) z_{t_1} ... z_{t_n}
inline complex full_apply(const FullTensor &f, const cvector &z)
{
    complex acc{};
    for (std::size_t p = 0; p < f.data.size(); ++p) {
        complex term = f.data[p];
        for (int i : f.tuple(p)) {
            term *= z[static_cast<std::size_t>(i)];
        }
        acc += term;
    }
    return acc;
}

inline double max_diff(const FullTensor &a, const FullTensor &b)
{
    double r = 0.0;
    for (std::size_t p = 0; p < a.data.size(); ++p) {
        r = std::max(r, std::abs(a.data[p] - b.data[p]));
    }
    return r;
}

// Probabilists' Hermite polynomial by its three-term recurrence.
inline double hermite_he(int n, double x)
{
    double a = 1.0;
    double b = x;
    if (n == 0) {
        return a;
    }
    for (int k = 1; k < n; ++k) {
        const double c = x * b - k * a;
        a = b;
        b = c;
    }
    return b;
}

// Physicists' Hermite polynomial H_n by its own recurrence.
inline double hermite_h(int n, double x)
{
    double a = 1.0;
    double b = 2.0 * x;
    if (n == 0) {
        return a;
    }
    for (int k = 1; k < n; ++k) {
        const double c = 2.0 * x * b - 2.0 * k * a;
        a = b;
        b = c;
    }
    return b;
}

// Reciprocal of a one-dimensional power series with c[0] != 0.
inline std::vector<complex> series_reciprocal(const std::vector<complex> &c)
{
    std::vector<complex> r(c.size());
    r[0] = 1.0 / c[0];
    for (std::size_t n = 1; n < c.size(); ++n) {
        complex s{};
        for (std::size_t k = 1; k <= n; ++k) {
            s += c[k] * r[n - k];
        }
        r[n] = -s / c[0];
    }
    return r;
}

} // namespace achaos::testing

#endif
