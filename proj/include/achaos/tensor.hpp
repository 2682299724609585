// Symmetric tensor kernels over a weighted finite-dimensional complex space.
//
// A degree-n symmetric tensor over C^d is stored by multi-index: T_alpha is the
// value of the full symmetric tensor on any index tuple of type alpha. The
// multiplicity n!/alpha! enters only through pairings and norms, so that
//
//   <x^{(x)n}, f> = sum_alpha (n!/alpha!) T_alpha x^alpha.

#ifndef ACHAOS_TENSOR_HPP
#define ACHAOS_TENSOR_HPP

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace achaos
{

using complex = std::complex<double>;
using cvector = std::vector<complex>;

cvector to_complex(std::span<const double> x);

// Combinatorics. Exact integer paths are used where the result fits in 64 bits.
std::uint64_t binomial_u64(int n, int k);
double binomial(int n, int k);
double factorial(int n);
// n! / (alpha_1! ... alpha_d!)
double multinomial(std::span<const int> alpha);

class MultiIndex
{
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents);

    int dim() const noexcept
    {
        return static_cast<int>(exps_.size());
    }
    int degree() const noexcept
    {
        return degree_;
    }
    int operator[](int i) const
    {
        return exps_[static_cast<std::size_t>(i)];
    }
    std::span<const int> exponents() const noexcept
    {
        return exps_;
    }

    MultiIndex operator+(const MultiIndex &other) const;

    bool operator==(const MultiIndex &) const = default;
    // Graded-lex: lower degree first; within a degree x_1^n comes first.
    std::strong_ordering operator<=>(const MultiIndex &other) const;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

// All multi-indices of the given degree in graded-lex order. The returned
// reference stays valid for the lifetime of the program.
const std::vector<MultiIndex> &multi_indices(int dim, int degree);
// Position of alpha inside multi_indices(alpha.dim(), alpha.degree()).
std::size_t multi_index_rank(const MultiIndex &alpha);
// Number of multi-indices of the given degree.
std::size_t multi_index_count(int dim, int degree);

class WeightModel
{
public:
    // lambda_i >= 1 for all i.
    explicit WeightModel(std::vector<double> lambda);
    // d copies of the same weight.
    static WeightModel uniform(int dim, double lambda);

    int dim() const noexcept
    {
        return static_cast<int>(lambda_.size());
    }
    std::span<const double> lambda() const noexcept
    {
        return lambda_;
    }
    double operator[](int i) const
    {
        return lambda_[static_cast<std::size_t>(i)];
    }

    bool operator==(const WeightModel &) const = default;

private:
    std::vector<double> lambda_;
};

class SymKernel
{
public:
    SymKernel() : SymKernel(1, 0) {}
    // Zero kernel.
    SymKernel(int dim, int degree);

    static SymKernel scalar(int dim, complex value);
    // Degree-1 kernel with coordinate vector z.
    static SymKernel vector(std::span<const complex> z);
    static SymKernel unit(int dim, int i);
    // z^{(x)n}, i.e. T_alpha = z^alpha.
    static SymKernel tensor_power(std::span<const complex> z, int n);

    int dim() const noexcept
    {
        return dim_;
    }
    int degree() const noexcept
    {
        return degree_;
    }
    std::size_t size() const noexcept
    {
        return coeffs_.size();
    }

    const std::vector<MultiIndex> &indices() const
    {
        return multi_indices(dim_, degree_);
    }
    std::span<const complex> coeffs() const noexcept
    {
        return coeffs_;
    }
    std::span<complex> coeffs() noexcept
    {
        return coeffs_;
    }

    complex operator[](const MultiIndex &alpha) const;
    complex &operator[](const MultiIndex &alpha);

    bool is_zero() const noexcept;
    // max_alpha |T_alpha|
    double max_abs() const noexcept;

    SymKernel &operator+=(const SymKernel &other);
    SymKernel &operator-=(const SymKernel &other);
    SymKernel &operator*=(complex c) noexcept;

    friend SymKernel operator+(SymKernel a, const SymKernel &b)
    {
        return a += b;
    }
    friend SymKernel operator-(SymKernel a, const SymKernel &b)
    {
        return a -= b;
    }
    friend SymKernel operator*(complex c, SymKernel a)
    {
        return a *= c;
    }
    friend SymKernel operator*(SymKernel a, complex c)
    {
        return a *= c;
    }
    friend SymKernel operator-(SymKernel a)
    {
        return a *= -1.0;
    }

    bool operator==(const SymKernel &) const = default;

private:
    void check_compatible(const SymKernel &other) const;

    int dim_;
    int degree_;
    cvector coeffs_;
};

// Symmetrized tensor product f (x)^ g.
SymKernel sym_product(const SymKernel &f, const SymKernel &g);

// Partial pairing of phi (degree m) with Phi (degree n <= m); the result r is
// the degree m-n kernel with <x^{(x)(m-n)} (x)^ Phi, phi> = <x^{(x)(m-n)}, r>.
SymKernel contract(const SymKernel &Phi, const SymKernel &phi);

// Full-tensor bilinear pairing of two kernels of equal degree.
complex pairing(const SymKernel &f, const SymKernel &g);

// |f|_p with the diagonal weight lambda; negative p gives the dual norms.
double weighted_norm(const SymKernel &f, int p, const WeightModel &w);

// Hilbert-Schmidt norm of the embedding H_{p_hi} -> H_{p_lo}.
double hs_norm(const WeightModel &w, int p_hi, int p_lo);

// <z^{(x)n}, f>
complex apply_to_point(const SymKernel &f, std::span<const complex> z);

} // namespace achaos

#endif
