// Measures with analytic Laplace transform.
//
// A MeasureModel carries the moment kernels M_0..M_N (the Taylor coefficients
// of l(theta) = sum_n <M_n, theta^{(x)n}> / n!), the weight model of the space
// it lives on, and, when available, a closed-form Laplace transform and a
// quadrature backend built from one-dimensional marginals.

#ifndef ACHAOS_MEASURE_HPP
#define ACHAOS_MEASURE_HPP

#include <achaos/density.hpp>
#include <achaos/tensor.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace achaos
{

enum class MeasureKind { gaussian, poisson1d, density1d, custom, product };

enum class QuadratureScheme { gauss_hermite, trapezoid_grid, pmf_sum };

std::string to_string(MeasureKind k);
std::string to_string(QuadratureScheme s);

struct QuadratureSpec {
    QuadratureScheme scheme = QuadratureScheme::gauss_hermite;
    int nodes = 64;
    // Support bounds; for pmf_sum the nodes are lo, lo+1, ..., hi.
    double lo = 0.0;
    double hi = 0.0;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Hermite rule for the standard normal probability measure.
QuadratureRule gauss_hermite_rule(int n);

// One coordinate of a product measure.
struct Marginal {
    QuadratureSpec spec;
    QuadratureRule rule;
    std::function<complex(complex)> laplace; // may be empty
    std::shared_ptr<const Density1D> density; // may be null
    std::vector<double> moments;              // raw moments m_0..m_N
};

class MeasureModel
{
public:
    MeasureModel(std::string id, MeasureKind kind, std::vector<SymKernel> moments, WeightModel weights,
                 std::vector<Marginal> marginals = {});

    const std::string &id() const noexcept
    {
        return id_;
    }
    MeasureKind kind() const noexcept
    {
        return kind_;
    }
    int dim() const noexcept
    {
        return weights_.dim();
    }
    // Highest stored moment degree N.
    int max_degree() const noexcept
    {
        return static_cast<int>(moments_.size()) - 1;
    }
    const SymKernel &moment(int n) const;
    const std::vector<SymKernel> &moments() const noexcept
    {
        return moments_;
    }
    const WeightModel &weights() const noexcept
    {
        return weights_;
    }

    const std::vector<Marginal> &marginals() const noexcept
    {
        return marginals_;
    }
    bool has_quadrature() const noexcept
    {
        return !marginals_.empty();
    }
    bool has_closed_form_laplace() const noexcept;
    std::optional<complex> closed_form_laplace(std::span<const complex> theta) const;

    // The density of a one-dimensional density measure, else null.
    const Density1D *density() const noexcept;

    // Same measure on a different weight scale.
    MeasureModel with_weights(WeightModel w) const;
    MeasureModel with_id(std::string id) const;

private:
    std::string id_;
    MeasureKind kind_;
    std::vector<SymKernel> moments_;
    WeightModel weights_;
    std::vector<Marginal> marginals_;
};

using MeasurePtr = std::shared_ptr<const MeasureModel>;

inline constexpr int default_moment_degree = 24;

// Standard Gaussian on R^d (identity covariance).
MeasurePtr gaussian_measure(int d, int N = default_moment_degree, int gh_nodes = 0);

// Classical Poisson distribution with l(theta) = exp(intensity (e^theta - 1)).
MeasurePtr poisson_measure_1d(double intensity, int N = default_moment_degree);

// Moments by trapezoid quadrature of the density over the support.
MeasurePtr density_measure_1d(std::shared_ptr<const Density1D> rho, double lo, double hi,
                              int N = default_moment_degree, int nodes = 4001);

// Arbitrary moment kernels (M_0 must be 1); no quadrature backend.
MeasurePtr custom_measure(std::string id, std::vector<SymKernel> moments, std::optional<WeightModel> w = std::nullopt);

// Product of one-dimensional measures.
MeasurePtr product_measure(std::span<const MeasurePtr> factors);

// Partial sum sum_{n<=N} <M_n, theta^{(x)n}>/n!, and the closed form when known.
struct LaplaceValue {
    complex series;
    std::optional<complex> closed;
};
LaplaceValue laplace_eval(const MeasureModel &mu, std::span<const complex> theta, int N);

struct AnalyticityRow {
    int p = 0;
    double C = 0.0;               // smallest constant over n <= N and directions
    std::vector<double> ratios;   // per n (index n-1): max over directions of (|<M_n,theta^n>|/(n! |theta|_p^n))^(1/n)
    bool super_factorial = false; // ratios still growing at the end of the range
};
struct AnalyticityReport {
    int N = 0;
    std::vector<AnalyticityRow> rows; // p = 0, 1, 2
};
AnalyticityReport analyticity_check(const MeasureModel &mu, int N, std::span<const cvector> directions);

using Integrand = std::function<complex(std::span<const double>)>;
complex integrate(const MeasureModel &mu, const Integrand &f);

} // namespace achaos

#endif
