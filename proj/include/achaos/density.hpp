// Pointwise probability densities on the real line.

#ifndef ACHAOS_DENSITY_HPP
#define ACHAOS_DENSITY_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace achaos
{

class Density1D
{
public:
    virtual ~Density1D() = default;

    virtual double value(double x) const = 0;
    // n-th derivative, or nullopt when the representation cannot provide it.
    virtual std::optional<double> derivative(int n, double x) const
    {
        if (n == 0) {
            return value(x);
        }
        return std::nullopt;
    }
    virtual std::string describe() const = 0;
};

struct NormalComponent {
    double weight = 1.0;
    double mean = 0.0;
    double sd = 1.0;
};

// Finite mixture of normal densities; derivatives of every order are exact.
class NormalMixtureDensity final : public Density1D
{
public:
    explicit NormalMixtureDensity(std::vector<NormalComponent> components);

    double value(double x) const override;
    std::optional<double> derivative(int n, double x) const override;
    std::string describe() const override;

    const std::vector<NormalComponent> &components() const noexcept
    {
        return comps_;
    }

private:
    std::vector<NormalComponent> comps_;
};

// Tabulated density, linear interpolation, zero outside the table.
class GridDensity final : public Density1D
{
public:
    GridDensity(std::vector<double> x, std::vector<double> rho);

    double value(double x) const override;
    std::string describe() const override;

private:
    std::vector<double> x_;
    std::vector<double> rho_;
};

// Wraps an arbitrary callable; no derivatives.
class FunctionDensity final : public Density1D
{
public:
    FunctionDensity(std::function<double(double)> f, std::string name);

    double value(double x) const override;
    std::string describe() const override;

private:
    std::function<double(double)> f_;
    std::string name_;
};

// Density given by a formula in x, e.g. "exp(-(x-1)^2/2)/sqrt(2*pi)".
// Derivatives are computed exactly by truncated Taylor arithmetic.
//
// Grammar: + - * / ^, unary minus, numbers, x, pi, e, and the functions
// exp log sqrt sin cos tanh cosh sinh abs.
class ExprDensity final : public Density1D
{
public:
    explicit ExprDensity(std::string expr);
    ~ExprDensity() override;
    ExprDensity(ExprDensity &&) noexcept;
    ExprDensity &operator=(ExprDensity &&) noexcept;

    double value(double x) const override;
    std::optional<double> derivative(int n, double x) const override;
    std::string describe() const override;

    // Taylor coefficients f^(k)(x)/k!, k = 0..order.
    std::vector<double> taylor(double x, int order) const;

    struct Node;

private:
    std::string expr_;
    std::unique_ptr<Node> root_;
};

} // namespace achaos

#endif
