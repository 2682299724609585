#include <achaos/charlier.hpp>

#include <algorithm>
#include <stdexcept>

namespace achaos
{

double poly_eval(const Poly &p, double x)
{
    double acc = 0.0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

namespace
{

double inner(const Poly &a, const Poly &b, const QuadratureRule &rule)
{
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        s += rule.weights[i] * poly_eval(a, rule.nodes[i]) * poly_eval(b, rule.nodes[i]);
    }
    return s;
}

} // namespace

std::vector<Poly> gram_schmidt_monic(const QuadratureRule &rule, int nmax)
{
    if (nmax < 0) {
        throw std::invalid_argument("gram_schmidt_monic: negative degree");
    }
    std::vector<Poly> out;
    std::vector<double> norms;
    for (int n = 0; n <= nmax; ++n) {
        Poly p(static_cast<std::size_t>(n) + 1, 0.0);
        p[static_cast<std::size_t>(n)] = 1.0;
        // modified Gram-Schmidt; coefficients stay monic in the leading term
        for (std::size_t j = 0; j < out.size(); ++j) {
            const double c = inner(p, out[j], rule) / norms[j];
            for (std::size_t i = 0; i < out[j].size(); ++i) {
                p[i] -= c * out[j][i];
            }
        }
        const double nn = inner(p, p, rule);
        if (!(nn > 0.0)) {
            throw std::domain_error("gram_schmidt_monic: rule supports too few points for degree "
                                    + std::to_string(n));
        }
        norms.push_back(nn);
        out.push_back(std::move(p));
    }
    return out;
}

Poly appell_poly(const AppellSystem &sys, int n)
{
    if (sys.dim() != 1) {
        throw std::invalid_argument("appell_poly: one-dimensional systems only");
    }
    Poly p(static_cast<std::size_t>(n) + 1, 0.0);
    for (int j = 0; j <= n; ++j) {
        p[static_cast<std::size_t>(j)] = binomial(n, j) * sys.B(n - j).coeffs()[0].real();
    }
    return p;
}

std::vector<Poly> charlier_from_appell(const AppellSystem &sys, int nmax)
{
    if (nmax > sys.N()) {
        throw std::out_of_range("charlier_from_appell: Appell system too short");
    }
    const auto len = static_cast<std::size_t>(nmax) + 1;
    // a = log(1+theta) = theta - theta^2/2 + ...
    std::vector<double> a(len, 0.0);
    for (std::size_t j = 1; j < len; ++j) {
        a[j] = (j % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(j);
    }
    // powers[k] = a^k / k!
    std::vector<std::vector<double>> powers(len, std::vector<double>(len, 0.0));
    powers[0][0] = 1.0;
    for (std::size_t k = 1; k < len; ++k) {
        for (std::size_t i = 0; i < len; ++i) {
            for (std::size_t j = 0; i + j < len; ++j) {
                powers[k][i + j] += powers[k - 1][i] * a[j];
            }
        }
        for (auto &c : powers[k]) {
            c /= static_cast<double>(k);
        }
    }
    std::vector<Poly> out;
    for (int n = 0; n <= nmax; ++n) {
        Poly c(static_cast<std::size_t>(n) + 1, 0.0);
        for (int k = 0; k <= n; ++k) {
            const double f = factorial(n) * powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
            const auto pk = appell_poly(sys, k);
            for (std::size_t j = 0; j < pk.size(); ++j) {
                c[j] += f * pk[j];
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::vector<double>> gram_matrix(const std::vector<Poly> &polys, const QuadratureRule &rule)
{
    std::vector<std::vector<double>> g(polys.size(), std::vector<double>(polys.size(), 0.0));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            g[i][j] = g[j][i] = inner(polys[i], polys[j], rule);
        }
    }
    return g;
}

} // namespace achaos
