// Finite sequences of symmetric kernels with an explicit basis tag.
//
// Slot n holds a degree-n kernel. The tag decides what the sequence means:
// coefficients against the Appell polynomials P_n (a test function), against
// the dual system Q_n (a distribution), or against plain powers x^{(x)n}.

#ifndef ACHAOS_SEQUENCE_HPP
#define ACHAOS_SEQUENCE_HPP

#include <achaos/tensor.hpp>

#include <optional>
#include <string>
#include <vector>

namespace achaos
{

enum class Basis { appell_p, appell_q, monomial };

std::string to_string(Basis b);
Basis basis_from_string(const std::string &s);

struct KernelSequence {
    int d = 1;
    Basis basis = Basis::monomial;
    std::string measure_id; // empty for the monomial basis
    std::vector<SymKernel> kernels;
    // Set when a product was cut at a configured maximum degree.
    std::optional<int> degree_cap;

    int N() const noexcept
    {
        return static_cast<int>(kernels.size()) - 1;
    }
    const SymKernel &operator[](int n) const
    {
        return kernels.at(static_cast<std::size_t>(n));
    }
    SymKernel &operator[](int n)
    {
        return kernels.at(static_cast<std::size_t>(n));
    }

    // Throws unless every slot has the right degree and dimension.
    void validate() const;

    // All kernels zero, slots 0..N.
    static KernelSequence zero(int d, int N, Basis basis, std::string measure_id = {});
    // The constant c in slot 0 followed by N zero slots.
    static KernelSequence constant(int d, int N, Basis basis, std::string measure_id, complex c);
    // A single kernel placed at its own degree; slots up to N (N >= degree).
    static KernelSequence single(const SymKernel &k, int N, Basis basis, std::string measure_id = {});
};

// Throws std::invalid_argument unless a and b share dimension, tag and measure.
void require_compatible(const KernelSequence &a, const KernelSequence &b, const char *op);
void require_basis(const KernelSequence &a, Basis b, const char *op);

// Sequence truncated (or zero-padded) to slots 0..N.
KernelSequence resized(KernelSequence s, int N);

// max over slots and coefficients of |a - b|; the shorter one is zero-padded.
double max_abs_diff(const KernelSequence &a, const KernelSequence &b);

// Cauchy product of two kernel series: c_n = sum_k a_k (x)^ b_{n-k}, n <= N.
std::vector<SymKernel> series_product(const std::vector<SymKernel> &a, const std::vector<SymKernel> &b, int N);

// sum_n <z^{(x)n}, s_n>
complex evaluate_series(const std::vector<SymKernel> &s, std::span<const complex> z);

} // namespace achaos

#endif
