#include <achaos/measure.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace achaos
{

std::string to_string(MeasureKind k)
{
    switch (k) {
        case MeasureKind::gaussian:
            return "gaussian";
        case MeasureKind::poisson1d:
            return "poisson1d";
        case MeasureKind::density1d:
            return "density1d";
        case MeasureKind::custom:
            return "custom";
        case MeasureKind::product:
            return "product";
    }
    return "unknown";
}

std::string to_string(QuadratureScheme s)
{
    switch (s) {
        case QuadratureScheme::gauss_hermite:
            return "gauss-hermite";
        case QuadratureScheme::trapezoid_grid:
            return "trapezoid-grid";
        case QuadratureScheme::pmf_sum:
            return "pmf-sum";
    }
    return "unknown";
}

QuadratureRule gauss_hermite_rule(int n)
{
    if (n < 1) {
        throw std::invalid_argument("gauss_hermite_rule: need at least one node");
    }
    // Golub-Welsch on the Jacobi matrix of the probabilists' Hermite
    // recurrence, then Newton polish of every node on the orthonormal
    // polynomial p_n. Weights come from the Christoffel function.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        J(k, k - 1) = J(k - 1, k) = std::sqrt(static_cast<double>(k));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));

    auto orthonormal = [n](double x, double &pn, double &pn1, double &christoffel) {
        // p_{k+1} = (x p_k - sqrt(k) p_{k-1}) / sqrt(k+1), p_0 = 1
        double prev = 0.0;
        double cur = 1.0;
        christoffel = 0.0;
        for (int k = 0; k < n; ++k) {
            christoffel += cur * cur;
            const double next = (x * cur - std::sqrt(static_cast<double>(k)) * prev) / std::sqrt(k + 1.0);
            prev = cur;
            cur = next;
        }
        pn = cur;
        pn1 = prev;
    };

    for (int i = 0; i < n; ++i) {
        double x = es.eigenvalues()(i);
        double pn = 0.0;
        double pn1 = 0.0;
        double ch = 0.0;
        for (int it = 0; it < 4; ++it) {
            orthonormal(x, pn, pn1, ch);
            // p_n' = sqrt(n) p_{n-1}
            const double dx = pn / (std::sqrt(static_cast<double>(n)) * pn1);
            x -= dx;
            if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x))) {
                break;
            }
        }
        orthonormal(x, pn, pn1, ch);
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 1.0 / ch;
    }
    // Symmetrize to remove round-off asymmetry.
    for (int i = 0; i < n / 2; ++i) {
        auto a = static_cast<std::size_t>(i);
        auto b = static_cast<std::size_t>(n - 1 - i);
        const double x = 0.5 * (rule.nodes[b] - rule.nodes[a]);
        const double w = 0.5 * (rule.weights[a] + rule.weights[b]);
        rule.nodes[a] = -x;
        rule.nodes[b] = x;
        rule.weights[a] = rule.weights[b] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return rule;
}

// MeasureModel ---------------------------------------------------------------

MeasureModel::MeasureModel(std::string id, MeasureKind kind, std::vector<SymKernel> moments, WeightModel weights,
                           std::vector<Marginal> marginals)
    : id_(std::move(id)), kind_(kind), moments_(std::move(moments)), weights_(std::move(weights)),
      marginals_(std::move(marginals))
{
    if (moments_.empty()) {
        throw std::invalid_argument("MeasureModel: at least M_0 is required");
    }
    for (std::size_t n = 0; n < moments_.size(); ++n) {
        if (moments_[n].degree() != static_cast<int>(n) || moments_[n].dim() != weights_.dim()) {
            throw std::invalid_argument("MeasureModel: moment kernel " + std::to_string(n) + " has wrong shape");
        }
    }
    if (std::abs(moments_[0].coeffs()[0] - complex(1.0)) > 1e-12) {
        throw std::invalid_argument("MeasureModel: M_0 must equal 1 (l(0) = 1)");
    }
    if (!marginals_.empty() && static_cast<int>(marginals_.size()) != weights_.dim()) {
        throw std::invalid_argument("MeasureModel: one marginal per coordinate required");
    }
}

const SymKernel &MeasureModel::moment(int n) const
{
    if (n < 0 || n > max_degree()) {
        throw std::out_of_range("MeasureModel '" + id_ + "': moment " + std::to_string(n) + " not available (N = "
                                + std::to_string(max_degree()) + ")");
    }
    return moments_[static_cast<std::size_t>(n)];
}

bool MeasureModel::has_closed_form_laplace() const noexcept
{
    return !marginals_.empty()
           && std::all_of(marginals_.begin(), marginals_.end(), [](const Marginal &m) { return bool(m.laplace); });
}

std::optional<complex> MeasureModel::closed_form_laplace(std::span<const complex> theta) const
{
    if (static_cast<int>(theta.size()) != dim()) {
        throw std::invalid_argument("closed_form_laplace: theta dimension mismatch");
    }
    if (!has_closed_form_laplace()) {
        return std::nullopt;
    }
    complex v = 1.0;
    for (std::size_t i = 0; i < marginals_.size(); ++i) {
        v *= marginals_[i].laplace(theta[i]);
    }
    return v;
}

const Density1D *MeasureModel::density() const noexcept
{
    if (kind_ != MeasureKind::density1d || marginals_.size() != 1) {
        return nullptr;
    }
    return marginals_[0].density.get();
}

MeasureModel MeasureModel::with_weights(WeightModel w) const
{
    if (w.dim() != dim()) {
        throw std::invalid_argument("with_weights: dimension mismatch");
    }
    MeasureModel m = *this;
    m.weights_ = std::move(w);
    return m;
}

MeasureModel MeasureModel::with_id(std::string id) const
{
    MeasureModel m = *this;
    m.id_ = std::move(id);
    return m;
}

// Builders -------------------------------------------------------------------

namespace
{

std::string fmt_double(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::vector<SymKernel> product_moments(const std::vector<std::vector<double>> &marg, int N)
{
    const int d = static_cast<int>(marg.size());
    std::vector<SymKernel> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        SymKernel k(d, n);
        const auto &idx = k.indices();
        for (std::size_t j = 0; j < idx.size(); ++j) {
            double v = 1.0;
            for (int i = 0; i < d; ++i) {
                v *= marg[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[j][i])];
            }
            k.coeffs()[j] = v;
        }
        out.push_back(std::move(k));
    }
    return out;
}

Marginal standard_normal_marginal(int N, int nodes)
{
    Marginal m;
    m.spec = {QuadratureScheme::gauss_hermite, nodes, 0.0, 0.0};
    m.rule = gauss_hermite_rule(nodes);
    m.laplace = [](complex t) { return std::exp(0.5 * t * t); };
    m.moments.assign(static_cast<std::size_t>(N) + 1, 0.0);
    m.moments[0] = 1.0;
    for (int n = 2; n <= N; n += 2) {
        m.moments[static_cast<std::size_t>(n)] = m.moments[static_cast<std::size_t>(n - 2)] * (n - 1);
    }
    return m;
}

void require_degree(int N)
{
    if (N < 0) {
        throw std::invalid_argument("moment degree must be nonnegative");
    }
}

} // namespace

MeasurePtr gaussian_measure(int d, int N, int gh_nodes)
{
    if (d < 1) {
        throw std::invalid_argument("gaussian_measure: need d >= 1");
    }
    require_degree(N);
    if (gh_nodes <= 0) {
        gh_nodes = d == 1 ? 64 : (d == 2 ? 32 : 16);
    }
    std::vector<Marginal> marg;
    std::vector<std::vector<double>> mm;
    for (int i = 0; i < d; ++i) {
        marg.push_back(standard_normal_marginal(N, gh_nodes));
        mm.push_back(marg.back().moments);
    }
    return std::make_shared<const MeasureModel>("gaussian(d=" + std::to_string(d) + ")", MeasureKind::gaussian,
                                                product_moments(mm, N), WeightModel::uniform(d, 2.0),
                                                std::move(marg));
}

MeasurePtr poisson_measure_1d(double intensity, int N)
{
    if (!(intensity > 0.0) || !std::isfinite(intensity)) {
        throw std::invalid_argument("poisson_measure_1d: intensity must be positive");
    }
    require_degree(N);
    Marginal m;
    // raw moments: m_{n+1} = lambda sum_k binom(n,k) m_k
    m.moments.assign(static_cast<std::size_t>(N) + 1, 0.0);
    m.moments[0] = 1.0;
    for (int n = 0; n < N; ++n) {
        double s = 0.0;
        for (int k = 0; k <= n; ++k) {
            s += binomial(n, k) * m.moments[static_cast<std::size_t>(k)];
        }
        m.moments[static_cast<std::size_t>(n) + 1] = intensity * s;
    }
    const int kmax = std::max(60, static_cast<int>(std::ceil(intensity + 20.0 * std::sqrt(intensity))));
    m.spec = {QuadratureScheme::pmf_sum, kmax + 1, 0.0, static_cast<double>(kmax)};
    for (int k = 0; k <= kmax; ++k) {
        m.rule.nodes.push_back(k);
        m.rule.weights.push_back(std::exp(-intensity + k * std::log(intensity) - std::lgamma(k + 1.0)));
    }
    m.laplace = [intensity](complex t) { return std::exp(intensity * (std::exp(t) - 1.0)); };
    std::vector<std::vector<double>> mm{m.moments};
    return std::make_shared<const MeasureModel>("poisson(lambda=" + fmt_double(intensity) + ")",
                                                MeasureKind::poisson1d, product_moments(mm, N),
                                                WeightModel::uniform(1, 2.0), std::vector<Marginal>{std::move(m)});
}

MeasurePtr density_measure_1d(std::shared_ptr<const Density1D> rho, double lo, double hi, int N, int nodes)
{
    if (!rho) {
        throw std::invalid_argument("density_measure_1d: no density");
    }
    if (!(hi > lo)) {
        throw std::invalid_argument("density_measure_1d: empty support");
    }
    if (nodes < 3) {
        throw std::invalid_argument("density_measure_1d: need at least 3 grid nodes");
    }
    require_degree(N);
    Marginal m;
    m.spec = {QuadratureScheme::trapezoid_grid, nodes, lo, hi};
    m.density = rho;
    const double h = (hi - lo) / (nodes - 1);
    double mass = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double x = lo + i * h;
        const double r = rho->value(x);
        if (!(r >= 0.0) || !std::isfinite(r)) {
            throw std::invalid_argument("density_measure_1d: density is negative or not finite at x = "
                                        + fmt_double(x));
        }
        const double w = (i == 0 || i == nodes - 1 ? 0.5 : 1.0) * h * r;
        m.rule.nodes.push_back(x);
        m.rule.weights.push_back(w);
        mass += w;
    }
    if (std::abs(mass - 1.0) > 1e-8) {
        throw std::invalid_argument("density_measure_1d: density is not normalized (integral = " + fmt_double(mass)
                                    + ")");
    }
    m.moments.assign(static_cast<std::size_t>(N) + 1, 0.0);
    std::vector<double> abs_moments(static_cast<std::size_t>(N) + 1, 0.0);
    for (std::size_t i = 0; i < m.rule.nodes.size(); ++i) {
        double xn = 1.0;
        for (int n = 0; n <= N; ++n) {
            m.moments[static_cast<std::size_t>(n)] += m.rule.weights[i] * xn;
            abs_moments[static_cast<std::size_t>(n)] += m.rule.weights[i] * std::abs(xn);
            xn *= m.rule.nodes[i];
        }
    }
    // The support must capture the moment integrals. Where the density is
    // still positive past an endpoint, the neglected part of int |x|^n rho is
    // estimated on a band of the support's width beyond it and compared with
    // the absolute moment (odd moments of symmetric densities vanish by
    // cancellation, so the signed moment is no scale).
    for (double end : {lo, hi}) {
        const double dir = end == lo ? -1.0 : 1.0;
        if (rho->value(end + dir * h) <= 0.0) {
            continue;
        }
        std::vector<double> tail(static_cast<std::size_t>(N) + 1, 0.0);
        for (int i = 1; i < nodes; ++i) {
            const double x = end + dir * i * h;
            const double w = (i == nodes - 1 ? 0.5 : 1.0) * h * rho->value(x);
            double xn = 1.0;
            for (int n = 0; n <= N; ++n) {
                tail[static_cast<std::size_t>(n)] += w * xn;
                xn *= std::abs(x);
            }
        }
        for (int n = 0; n <= N; ++n) {
            if (tail[static_cast<std::size_t>(n)] > 1e-8 * std::max(1.0, abs_moments[static_cast<std::size_t>(n)])) {
                throw std::invalid_argument("density_measure_1d: moment integral of degree " + std::to_string(n)
                                            + " does not converge within the support [" + fmt_double(lo) + ", "
                                            + fmt_double(hi) + "]");
            }
        }
    }
    m.moments[0] = 1.0; // normalization was checked above
    std::vector<std::vector<double>> mm{m.moments};
    return std::make_shared<const MeasureModel>("density(" + rho->describe() + ")", MeasureKind::density1d,
                                                product_moments(mm, N), WeightModel::uniform(1, 2.0),
                                                std::vector<Marginal>{std::move(m)});
}

MeasurePtr custom_measure(std::string id, std::vector<SymKernel> moments, std::optional<WeightModel> w)
{
    if (moments.empty()) {
        throw std::invalid_argument("custom_measure: no moments");
    }
    const int d = moments[0].dim();
    WeightModel weights = w ? *w : WeightModel::uniform(d, 2.0);
    return std::make_shared<const MeasureModel>(std::move(id), MeasureKind::custom, std::move(moments),
                                                std::move(weights));
}

MeasurePtr product_measure(std::span<const MeasurePtr> factors)
{
    if (factors.empty()) {
        throw std::invalid_argument("product_measure: no factors");
    }
    int N = factors[0]->max_degree();
    bool all_gaussian = true;
    bool all_quadrature = true;
    std::string id = "product(";
    std::vector<double> lambda;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto &f = *factors[i];
        if (f.dim() != 1) {
            throw std::invalid_argument("product_measure: factors must be one-dimensional");
        }
        N = std::min(N, f.max_degree());
        all_gaussian = all_gaussian && f.kind() == MeasureKind::gaussian;
        all_quadrature = all_quadrature && f.has_quadrature();
        id += (i ? "," : "") + f.id();
        lambda.push_back(f.weights()[0]);
    }
    id += ")";
    std::vector<std::vector<double>> mm;
    std::vector<Marginal> marg;
    for (const auto &f : factors) {
        std::vector<double> m;
        for (int n = 0; n <= N; ++n) {
            m.push_back(f->moment(n).coeffs()[0].real());
        }
        mm.push_back(m);
        if (all_quadrature) {
            Marginal g = f->marginals()[0];
            g.moments = m;
            marg.push_back(std::move(g));
        }
    }
    return std::make_shared<const MeasureModel>(std::move(id),
                                                all_gaussian ? MeasureKind::gaussian : MeasureKind::product,
                                                product_moments(mm, N), WeightModel(lambda), std::move(marg));
}

// Evaluation -----------------------------------------------------------------

LaplaceValue laplace_eval(const MeasureModel &mu, std::span<const complex> theta, int N)
{
    if (static_cast<int>(theta.size()) != mu.dim()) {
        throw std::invalid_argument("laplace_eval: theta dimension mismatch");
    }
    if (N > mu.max_degree() || N < 0) {
        throw std::out_of_range("laplace_eval: truncation " + std::to_string(N) + " exceeds stored moments (N = "
                                + std::to_string(mu.max_degree()) + ")");
    }
    LaplaceValue out;
    for (int n = 0; n <= N; ++n) {
        out.series += apply_to_point(mu.moment(n), theta) / factorial(n);
    }
    out.closed = mu.closed_form_laplace(theta);
    return out;
}

AnalyticityReport analyticity_check(const MeasureModel &mu, int N, std::span<const cvector> directions)
{
    if (N < 2) {
        throw std::invalid_argument("analyticity_check: need N >= 2");
    }
    N = std::min(N, mu.max_degree());
    AnalyticityReport rep;
    rep.N = N;
    for (int p = 0; p <= 2; ++p) {
        AnalyticityRow row;
        row.p = p;
        for (int n = 1; n <= N; ++n) {
            double r = 0.0;
            for (const auto &theta : directions) {
                const double tn = weighted_norm(SymKernel::vector(theta), p, mu.weights());
                if (tn == 0.0) {
                    continue;
                }
                const double m = std::abs(apply_to_point(mu.moment(n), theta));
                r = std::max(r, std::pow(m / (factorial(n) * std::pow(tn, n)), 1.0 / n));
            }
            row.ratios.push_back(r);
            row.C = std::max(row.C, r);
        }
        // vanishing moments (odd moments of symmetric measures) carry no growth information
        std::vector<double> rs;
        std::copy_if(row.ratios.begin(), row.ratios.end(), std::back_inserter(rs), [](double r) { return r > 0.0; });
        if (rs.size() >= 4) {
            const auto sz = rs.size();
            const double early = *std::max_element(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(sz / 2));
            row.super_factorial = rs[sz - 1] > rs[sz - 2] && rs[sz - 2] > rs[sz - 3] && rs[sz - 1] > early;
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

complex integrate(const MeasureModel &mu, const Integrand &f)
{
    if (!mu.has_quadrature()) {
        throw std::logic_error("integrate: measure '" + mu.id() + "' has no quadrature backend");
    }
    const auto &marg = mu.marginals();
    const std::size_t d = marg.size();
    std::vector<std::size_t> pos(d, 0);
    std::vector<double> x(d);
    complex acc{};
    while (true) {
        double w = 1.0;
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = marg[i].rule.nodes[pos[i]];
            w *= marg[i].rule.weights[pos[i]];
        }
        if (w != 0.0) {
            acc += w * f(x);
        }
        std::size_t i = 0;
        for (; i < d; ++i) {
            if (++pos[i] < marg[i].rule.nodes.size()) {
                break;
            }
            pos[i] = 0;
        }
        if (i == d) {
            break;
        }
    }
    return acc;
}

} // namespace achaos
