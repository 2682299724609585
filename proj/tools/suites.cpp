#include "suites.hpp"

#include <achaos/calculus.hpp>
#include <achaos/charlier.hpp>
#include <achaos/remeasure.hpp>
#include <achaos/transforms.hpp>
#include <achaos/wick.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace achaos::cli
{

namespace
{

// FNV-1a, so that suite streams do not depend on the standard library's hash.
std::uint64_t suite_seed(std::uint64_t seed, const std::string &name)
{
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char c : name) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

double rel(double err, double scale)
{
    return err / std::max(1.0, scale);
}

class Context
{
public:
    Context(const json &params, const MeasureRegistry &reg, std::uint64_t seed)
        : rng(seed), params_(params.is_object() ? params : json::object()), reg_(reg)
    {
    }

    int integer(const char *key, int def) const
    {
        return params_.value(key, def);
    }

    std::vector<std::string> names(const char *key, std::vector<std::string> def) const
    {
        return params_.contains(key) ? params_[key].get<std::vector<std::string>>() : def;
    }

    MeasurePtr measure(const std::string &name) const
    {
        return reg_.get(name);
    }

    void add(const std::string &name, double residual, double default_tol)
    {
        double tol = default_tol;
        if (params_.contains("tolerances") && params_["tolerances"].contains(name)) {
            tol = params_["tolerances"][name].get<double>();
        }
        const bool ok = std::isfinite(residual) && residual <= tol;
        cases.push_back({name, residual, tol, ok});
    }

    double uniform(double a, double b)
    {
        return std::uniform_real_distribution<double>(a, b)(rng);
    }

    int below(int n)
    {
        return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    }

    cvector point(int d, double scale)
    {
        cvector z(static_cast<std::size_t>(d));
        for (auto &c : z) {
            c = uniform(-scale, scale);
        }
        return z;
    }

    SymKernel kernel(int d, int n, bool cplx)
    {
        SymKernel k(d, n);
        for (auto &c : k.coeffs()) {
            c = complex(uniform(-1.0, 1.0), cplx ? uniform(-1.0, 1.0) : 0.0);
        }
        return k;
    }

    KernelSequence sequence(int d, int N, Basis b, const std::string &id, bool cplx)
    {
        auto s = KernelSequence::zero(d, N, b, id);
        for (int n = 0; n <= N; ++n) {
            s[n] = kernel(d, n, cplx);
        }
        return s;
    }

    std::mt19937_64 rng;
    std::vector<CaseResult> cases;

private:
    json params_;
    const MeasureRegistry &reg_;
};

// --- appell-identities -------------------------------------------------------

// n! [t^n] e^{t a} / l(t theta), from the projected moments only.
std::vector<complex> collapsed_appell(const MeasureModel &mu, const cvector &theta, complex a, int N)
{
    std::vector<complex> L;
    for (int k = 0; k <= N; ++k) {
        L.push_back(apply_to_point(mu.moment(k), theta) / factorial(k));
    }
    std::vector<complex> inv(L.size());
    inv[0] = 1.0 / L[0];
    for (std::size_t n = 1; n < L.size(); ++n) {
        complex s{};
        for (std::size_t k = 1; k <= n; ++k) {
            s += L[k] * inv[n - k];
        }
        inv[n] = -s / L[0];
    }
    std::vector<complex> out;
    for (int n = 0; n <= N; ++n) {
        complex c{};
        for (int k = 0; k <= n; ++k) {
            c += std::pow(a, k) / factorial(k) * inv[static_cast<std::size_t>(n - k)];
        }
        out.push_back(c * factorial(n));
    }
    return out;
}

double hermite_he(int n, double x)
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

void appell_identities(Context &ctx)
{
    const int N = ctx.integer("N", 8);
    const int trials = ctx.integer("trials", 100);
    for (const auto &name : ctx.names("measures", {"gaussian", "poisson", "mixture"})) {
        const auto mu = ctx.measure(name);
        const auto sys = build_appell(mu, N);
        const int d = mu->dim();
        ctx.add(name + "/recursion", recursion_residual(sys), 1e-12);

        if (mu->kind() == MeasureKind::gaussian && d == 1) {
            double worst = 0.0;
            double worst_h = 0.0;
            for (int n = 0; n <= N; ++n) {
                const double expect = n % 2 == 1 ? 0.0 : (n % 4 == 0 ? 1.0 : -1.0) * factorial(n) / (factorial(n / 2) * std::exp2(n / 2));
                worst = std::max(worst, std::abs(sys.B(n).coeffs()[0] - expect));
                for (double x = -2.0; x <= 2.0001; x += 0.25) {
                    const double he = hermite_he(n, x);
                    worst_h = std::max(worst_h, rel(std::abs(p_kernel(sys, n, cvector{x}).coeffs()[0] - he), std::abs(he)));
                }
            }
            ctx.add(name + "/gaussian-constants", worst, 1e-12);
            ctx.add(name + "/hermite", worst_h, 1e-10);
        }

        double p1 = 0.0;
        double p2 = 0.0;
        double p3 = 0.0;
        for (int t = 0; t < trials; ++t) {
            const int n = ctx.below(N + 1);
            const auto x = ctx.point(d, 1.0);
            const auto y = ctx.point(d, 1.0);
            const auto theta = ctx.point(d, 1.0);
            complex a{};
            for (int i = 0; i < d; ++i) {
                a += x[static_cast<std::size_t>(i)] * theta[static_cast<std::size_t>(i)];
            }
            const auto oracle = collapsed_appell(*mu, theta, a, n);
            const complex v = apply_to_point(p_kernel(sys, n, x), theta);
            p1 = std::max(p1, rel(std::abs(v - oracle.back()), std::abs(oracle.back())));
            p2 = std::max(p2, rel(check_monomial(sys, n, x), p_kernel(sys, n, x).max_abs()));
            cvector xy(x);
            for (std::size_t i = 0; i < xy.size(); ++i) {
                xy[i] += y[i];
            }
            p3 = std::max(p3, rel(check_addition(sys, n, x, y), p_kernel(sys, n, xy).max_abs()));
        }
        ctx.add(name + "/P1-collapse", p1, 1e-11);
        ctx.add(name + "/P2-monomial", p2, 1e-11);
        ctx.add(name + "/P3-addition", p3, 1e-11);

        if (mu->has_quadrature()) {
            double p4 = 0.0;
            for (int m = 1; m <= N; ++m) {
                const auto phi = KernelSequence::single(ctx.kernel(d, m, false), m, Basis::appell_p, mu->id());
                const complex e = integrate(*mu, [&](std::span<const double> xs) {
                    const auto xc = to_complex(xs);
                    return eval_test(sys, phi, xc);
                });
                p4 = std::max(p4, std::abs(e));
            }
            ctx.add(name + "/P4-zero-mean", p4, 1e-9);
        }
    }
}

// --- biorthogonality -----------------------------------------------------------

void biorthogonality(Context &ctx)
{
    const int N = ctx.integer("N", 6);
    for (const auto &name : ctx.names("measures", {"gaussian", "gaussian2", "mixture", "shifted-gaussian"})) {
        const auto mu = ctx.measure(name);
        const auto sys = build_appell(mu, N);
        const int d = mu->dim();
        double coef = 0.0;
        double quad = 0.0;
        for (int n = 0; n <= N; ++n) {
            for (int m = 0; m <= N; ++m) {
                const auto Phi = ctx.kernel(d, n, true);
                const auto phi = ctx.kernel(d, m, true);
                const auto Q = KernelSequence::single(Phi, n, Basis::appell_q, mu->id());
                const auto P = KernelSequence::single(phi, m, Basis::appell_p, mu->id());
                const complex expect = n == m ? factorial(n) * pairing(Phi, phi) : complex{};
                const complex got = pair(Q, P);
                coef = std::max(coef, rel(std::abs(got - expect), std::abs(expect)));
                if (mu->density() != nullptr && d == 1) {
                    const complex q = pair_oracle(Q, P, sys);
                    quad = std::max(quad, rel(std::abs(q - expect), std::abs(expect)));
                }
            }
        }
        ctx.add(name + "/coefficient", coef, 1e-12);
        if (mu->density() != nullptr && d == 1) {
            ctx.add(name + "/quadrature", quad, 1e-7);
        }
    }
}

// --- transforms ----------------------------------------------------------------

void transforms(Context &ctx)
{
    const int N = ctx.integer("N", 8);
    const int trials = ctx.integer("trials", 20);
    for (const auto &name : ctx.names("measures", {"gaussian", "poisson", "gaussian2", "mixture"})) {
        const auto mu = ctx.measure(name);
        const auto sys = build_appell(mu, N);
        const int d = mu->dim();

        double ev = 0.0;
        for (int t = 0; t < trials; ++t) {
            const auto z = ctx.point(d, 1.0);
            const auto phi = ctx.sequence(d, N, Basis::appell_p, mu->id(), true);
            const complex a = pair(delta(sys, z), phi);
            const complex b = eval_test(sys, phi, z);
            ev = std::max(ev, rel(std::abs(a - b), std::abs(b)));
        }
        ctx.add(name + "/delta-evaluation", ev, 1e-12);

        const auto d0 = delta(sys, cvector(static_cast<std::size_t>(d), 0.0));
        std::vector<SymKernel> l;
        for (int n = 0; n <= N; ++n) {
            l.push_back(mu->moment(n) * (1.0 / factorial(n)));
        }
        const auto prod = series_product(d0.kernels, l, N);
        double unit = std::abs(prod[0].coeffs()[0] - 1.0);
        for (int n = 1; n <= N; ++n) {
            unit = std::max(unit, prod[static_cast<std::size_t>(n)].max_abs());
        }
        ctx.add(name + "/S-delta-times-l", unit, 1e-12);

        if (d == 1 && mu->has_quadrature()) {
            double rn = 0.0;
            for (int t = 0; t < trials; ++t) {
                const double z = ctx.uniform(-1.0, 1.0);
                const auto phi = ctx.sequence(1, N, Basis::appell_p, mu->id(), false);
                const complex q = integrate(*mu, [&](std::span<const double> x) {
                    const cvector xs{x[0] - z};
                    return eval_test(sys, phi, xs);
                });
                rn = std::max(rn, rel(std::abs(pair(radon_nikodym(sys, cvector{z}, N), phi) - q), std::abs(q)));
            }
            ctx.add(name + "/radon-nikodym-shift", rn, 1e-7);
        }

        if (mu->has_closed_form_laplace() && mu->has_quadrature()) {
            const int deg = 4;
            const auto wide = build_appell(mu, std::min(14, mu->max_degree() - deg));
            double lt = 0.0;
            for (int t = 0; t < trials; ++t) {
                const auto phi = ctx.sequence(d, deg, Basis::appell_p, mu->id(), false);
                const auto theta = ctx.point(d, 0.3);
                const complex q = integrate(*mu, [&](std::span<const double> xs) {
                    const auto xc = to_complex(xs);
                    complex xt{};
                    for (std::size_t i = 0; i < xc.size(); ++i) {
                        xt += xc[i] * theta[i];
                    }
                    return eval_test(wide, phi, xc) * std::exp(xt);
                });
                lt = std::max(lt, rel(std::abs(l_transform(wide, phi, theta) - q), std::abs(q)));
            }
            ctx.add(name + "/l-transform", lt, 1e-7);
        }
    }
}

// --- wick ----------------------------------------------------------------------

void wick(Context &ctx)
{
    const int N = ctx.integer("N", 5);
    const int trials = ctx.integer("trials", 500);
    const std::string id = "wick";
    double smult = 0.0;
    double comm = 0.0;
    double assoc = 0.0;
    double inv = 0.0;
    double norm = 0.0;
    for (int t = 0; t < trials; ++t) {
        const int d = 1 + ctx.below(2);
        const auto a = ctx.sequence(d, ctx.below(N + 1), Basis::appell_q, id, true);
        const auto b = ctx.sequence(d, ctx.below(N + 1), Basis::appell_q, id, true);
        const auto ab = wick_product(a, b);
        const auto theta = ctx.point(d, 0.5);
        const complex sa = s_transform(a, theta);
        const complex sb = s_transform(b, theta);
        smult = std::max(smult, rel(std::abs(s_transform(ab, theta) - sa * sb), std::abs(sa * sb)));
        comm = std::max(comm, max_abs_diff(ab, wick_product(b, a)));
        if (t % 10 == 0) {
            const auto c = ctx.sequence(d, ctx.below(4), Basis::appell_q, id, true);
            assoc = std::max(assoc, max_abs_diff(wick_product(ab, c), wick_product(a, wick_product(b, c))));
        }
        auto f = a;
        const complex c0 = f[0].coeffs()[0];
        f[0].coeffs()[0] = (0.5 + std::abs(c0)) * (std::abs(c0) > 1e-3 ? c0 / std::abs(c0) : complex(1.0));
        const auto unit = KernelSequence::constant(d, f.N(), Basis::appell_q, id, 1.0);
        inv = std::max(inv, max_abs_diff(resized(wick_product(f, wick_inverse(f)), f.N()), unit));

        std::vector<double> lam;
        for (int i = 0; i < d; ++i) {
            lam.push_back(ctx.uniform(1.0, 3.0));
        }
        const auto r = wick_norm_check(a, b, ctx.below(3), ctx.below(3), ctx.below(3), ctx.below(3), WeightModel(lam));
        norm = std::max(norm, std::max(0.0, r.lhs / r.rhs - 1.0));
    }
    ctx.add("S-multiplicativity", smult, 1e-12);
    ctx.add("commutativity", comm, 1e-12);
    ctx.add("associativity", assoc, 1e-12);
    ctx.add("inverse", inv, 1e-12);
    ctx.add("norm-inequality", norm, 1e-12);

    const auto big = ctx.sequence(1, 10, Basis::appell_q, id, false);
    const auto capped = wick_product(big, big);
    ctx.add("degree-cap-recorded", capped.degree_cap && *capped.degree_cap == default_wick_degree ? 0.0 : 1.0, 0.0);
}

// --- remeasure -----------------------------------------------------------------

void remeasure_pairs(Context &ctx, const std::vector<std::pair<std::string, std::string>> &pairs)
{
    const int N = ctx.integer("N", 8);
    const int trials = ctx.integer("trials", 25);
    std::map<std::string, bool> identity_done;
    for (const auto &[a, b] : pairs) {
        const auto sys = build_appell(ctx.measure(a), N);
        const auto hat = build_appell(ctx.measure(b), N);
        const std::string tag = a + "->" + b;
        const auto &id = sys.measure_id();
        const auto &hid = hat.measure_id();

        if (!identity_done[a]) {
            identity_done[a] = true;
            double same = 0.0;
            for (int t = 0; t < trials; ++t) {
                const auto phi = ctx.sequence(sys.dim(), N, Basis::appell_p, id, true);
                const auto Phi = ctx.sequence(sys.dim(), N, Basis::appell_q, id, true);
                same = std::max(same, max_abs_diff(retarget_test(phi, sys, sys), phi));
                same = std::max(same, max_abs_diff(retarget_dist(Phi, sys, sys), Phi));
            }
            ctx.add(a + "/same-measure-identity", same, 1e-12);
        }

        double cross = 0.0;
        for (int n = 0; n <= N; ++n) {
            for (int t = 0; t < 3; ++t) {
                const auto x = ctx.point(sys.dim(), 2.0);
                cross = std::max(cross, rel(cross_expand_residual(sys, hat, n, x), p_kernel(sys, n, x).max_abs()));
            }
        }
        ctx.add(tag + "/cross-expansion", cross, 1e-9);

        double inv = 0.0;
        double back = 0.0;
        for (int t = 0; t < trials; ++t) {
            const auto Phi_hat = ctx.sequence(sys.dim(), N, Basis::appell_q, hid, true);
            const auto phi = ctx.sequence(sys.dim(), N, Basis::appell_p, id, true);
            const auto Phi = retarget_dist(Phi_hat, sys, hat);
            const complex lhs = pair(Phi, phi);
            const complex rhs = pair(Phi_hat, retarget_test(phi, sys, hat));
            inv = std::max(inv, rel(std::abs(lhs - rhs), std::abs(lhs)));
            back = std::max(back, max_abs_diff(retarget_dist(Phi, hat, sys), Phi_hat));
            back = std::max(back, max_abs_diff(retarget_test(retarget_test(phi, sys, hat), hat, sys), phi));
        }
        ctx.add(tag + "/pairing-invariance", inv, 1e-9);
        ctx.add(tag + "/round-trip", back, 1e-9);
    }
}

// --- norms ---------------------------------------------------------------------

void norms(Context &ctx)
{
    const int N = ctx.integer("N", 8);
    const int trials = ctx.integer("trials", 100);
    const auto mu = ctx.measure(ctx.names("measures", {"gaussian2"}).at(0));
    const auto sys = build_appell(mu, N);
    const int d = mu->dim();
    const auto &w = mu->weights();
    double expo = 0.0;
    double mono = 0.0;
    for (int t = 0; t < trials; ++t) {
        const auto theta = ctx.point(d, 0.4);
        const int p = ctx.below(3);
        const int q = ctx.below(3);
        const double tp = weighted_norm(SymKernel::vector(theta), p, w);
        double expect = 0.0;
        for (int n = 0; n <= N; ++n) {
            expect += std::exp2(n * q) * std::pow(tp, 2 * n);
        }
        const double got = test_norm(mu_exponential(sys, theta, N), p, q, w);
        expo = std::max(expo, std::abs(got * got - expect) / expect);

        const auto phi = ctx.sequence(d, N, Basis::appell_p, mu->id(), true);
        const auto Phi = ctx.sequence(d, N, Basis::appell_q, mu->id(), true);
        const auto f = ctx.sequence(d, N, Basis::monomial, {}, true);
        // each entry: (smaller, larger), the violation is how far the first exceeds the second
        const double beta = ctx.uniform(0.0, 0.9);
        const double checks[][2] = {
            {test_norm(phi, p, q, w), test_norm(phi, p + 1, q, w)},
            {test_norm(phi, p, q, w), test_norm(phi, p, q + 1, w)},
            {dist_norm(Phi, p + 1, q, beta, w), dist_norm(Phi, p, q, beta, w)},
            {dist_norm(Phi, p, q + 1, beta, w), dist_norm(Phi, p, q, beta, w)},
            {dist_norm(Phi, p, q, beta + 0.1, w), dist_norm(Phi, p, q, beta, w)},
            {e_norm(f, p, q, beta, w), e_norm(f, p + 1, q, beta, w)},
            {e_norm(f, p, q, beta, w), e_norm(f, p, q + 1, beta, w)},
            {e_norm(f, p, q, beta, w), e_norm(f, p, q, beta + 0.1, w)},
        };
        for (const auto &c : checks) {
            mono = std::max(mono, std::max(0.0, c[0] - c[1]) / std::max(c[1], 1e-300));
        }
    }
    ctx.add("mu-exponential", expo, 1e-12);
    ctx.add("monotonicity", mono, 1e-14);
}

// --- charlier ------------------------------------------------------------------

void charlier(Context &ctx)
{
    const int nmax = ctx.integer("nmax", 6);
    const int laplace_N = ctx.integer("laplace_N", 12);
    const auto mu = ctx.measure(ctx.names("measures", {"poisson"}).at(0));
    if (mu->kind() != MeasureKind::poisson1d) {
        throw std::invalid_argument("charlier: needs a poisson1d measure");
    }
    const double lambda = mu->moment(1).coeffs()[0].real();
    const auto &rule = mu->marginals().at(0).rule;
    const auto gs = gram_schmidt_monic(rule, nmax);
    const auto G = gram_matrix(gs, rule);
    double off = 0.0;
    double diag = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        const double expect = factorial(n) * std::pow(lambda, n);
        diag = std::max(diag, std::abs(G[n][n] - expect) / expect);
        for (int m = 0; m <= nmax; ++m) {
            if (m != n) {
                off = std::max(off, std::abs(G[n][m]) / std::sqrt(G[n][n] * G[m][m]));
            }
        }
    }
    ctx.add("orthogonality", off, 1e-7);
    ctx.add("diagonal", diag, 1e-7);

    const auto sys = build_appell(mu, nmax);
    const auto gf = charlier_from_appell(sys, nmax);
    double coef = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        for (std::size_t k = 0; k < gs[n].size(); ++k) {
            const double a = gs[n][k];
            const double b = k < gf[n].size() ? gf[n][k] : 0.0;
            coef = std::max(coef, rel(std::abs(a - b), std::abs(a)));
        }
    }
    ctx.add("generating-function", coef, 1e-8);

    double lap = 0.0;
    for (int i = -8; i <= 8; ++i) {
        const double theta = 0.05 * i;
        const auto v = laplace_eval(*mu, cvector{theta}, laplace_N);
        const complex closed = std::exp(lambda * (std::exp(theta) - 1.0));
        lap = std::max(lap, std::abs(v.series - closed));
    }
    ctx.add("laplace-partial-sums", lap, 1e-6);
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const json &params)
{
    std::vector<std::pair<std::string, std::string>> out{{"gaussian", "shifted-gaussian"}, {"gaussian", "mixture"}};
    if (params.is_object() && params.contains("pairs")) {
        out.clear();
        for (const auto &p : params["pairs"]) {
            const auto v = p.get<std::vector<std::string>>();
            if (v.size() != 2) {
                throw std::invalid_argument("remeasure: pairs must be [[mu, mu_hat], ...]");
            }
            out.emplace_back(v[0], v[1]);
        }
    }
    return out;
}

} // namespace

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"appell-identities", "biorthogonality", "transforms", "wick",
                                                "remeasure",         "norms",           "charlier"};
    return names;
}

SuiteResult run_suite(const std::string &name, const json &params, const MeasureRegistry &measures,
                      std::uint64_t seed)
{
    const auto &all = suite_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    const auto t0 = std::chrono::steady_clock::now();
    Context ctx(params, measures, suite_seed(seed, name));
    try {
        if (name == "appell-identities") {
            appell_identities(ctx);
        } else if (name == "biorthogonality") {
            biorthogonality(ctx);
        } else if (name == "transforms") {
            transforms(ctx);
        } else if (name == "wick") {
            wick(ctx);
        } else if (name == "remeasure") {
            remeasure_pairs(ctx, parse_pairs(params));
        } else if (name == "norms") {
            norms(ctx);
        } else {
            charlier(ctx);
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument("suite '" + name + "': malformed parameters: " + e.what());
    }
    SuiteResult r;
    r.suite = name;
    r.cases = std::move(ctx.cases);
    r.pass = std::all_of(r.cases.begin(), r.cases.end(), [](const CaseResult &c) { return c.pass; });
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

RunResult run_suites(const Config &config, const std::vector<std::string> &names, std::uint64_t seed)
{
    const auto &all = suite_names();
    for (const auto &n : names) {
        if (std::find(all.begin(), all.end(), n) == all.end()) {
            throw std::invalid_argument("unknown suite '" + n + "'");
        }
    }
    std::vector<std::future<SuiteResult>> jobs;
    for (const auto &n : names) {
        const auto it = config.suites.find(n);
        const json params = it == config.suites.end() ? json::object() : it->second;
        jobs.push_back(std::async(std::launch::async, [&config, n, params, seed] {
            return run_suite(n, params, config.measures, seed);
        }));
    }
    RunResult out;
    for (auto &j : jobs) {
        out.suites.push_back(j.get());
        out.pass = out.pass && out.suites.back().pass;
    }
    return out;
}

json report_to_json(const RunResult &r, std::uint64_t seed, bool timings)
{
    json suites = json::array();
    for (const auto &s : r.suites) {
        json cases = json::array();
        for (const auto &c : s.cases) {
            cases.push_back({{"name", c.name},
                             {"residual", std::isfinite(c.residual) ? json(c.residual) : json(nullptr)},
                             {"tolerance", c.tolerance},
                             {"pass", c.pass}});
        }
        json js = {{"suite", s.suite}, {"pass", s.pass}, {"cases", cases}};
        if (timings) {
            js["seconds"] = s.seconds;
        }
        suites.push_back(js);
    }
    return {{"schema", 1}, {"seed", seed}, {"pass", r.pass}, {"suites", suites}};
}

json show_json(const ShowRequest &req, const MeasureRegistry &measures)
{
    const auto mu = measures.get(req.measure);
    if (req.N < 0) {
        throw std::invalid_argument("show: N must be nonnegative");
    }
    const int d = mu->dim();
    cvector z(static_cast<std::size_t>(d), 0.0);
    if (!req.z.empty()) {
        if (static_cast<int>(req.z.size()) != d) {
            throw std::invalid_argument("show: --z needs " + std::to_string(d) + " coordinates");
        }
        z = to_complex(req.z);
    }
    std::vector<SymKernel> kernels;
    json extra = json::object();
    if (req.object == "moments") {
        for (int n = 0; n <= req.N; ++n) {
            kernels.push_back(mu->moment(n));
        }
    } else if (req.object == "appell") {
        const auto sys = build_appell(mu, req.N);
        kernels = sys.B_table();
    } else if (req.object == "delta" || req.object == "rho" || req.object == "empty") {
        const auto sys = build_appell(mu, req.N);
        KernelSequence s = req.object == "delta" ? delta(sys, z)
                           : req.object == "rho" ? radon_nikodym(sys, z, req.N)
                                                 : KernelSequence::zero(d, req.N, Basis::appell_q, mu->id());
        kernels = s.kernels;
        extra["basis"] = to_string(s.basis);
        extra["dist_norm"] = {{"p", 0}, {"q", 0}, {"beta", 1}, {"value", number(dist_norm(s, 0, 0, 1.0, mu->weights()))}};
    } else {
        throw std::invalid_argument("show: unknown object '" + req.object + "' (moments|appell|delta|rho|empty)");
    }
    json ks = json::array();
    for (std::size_t n = 0; n < kernels.size(); ++n) {
        ks.push_back({{"n", n}, {"entries", kernel_to_json(kernels[n])}});
    }
    json out = {{"object", req.object}, {"measure_id", mu->id()}, {"d", d}, {"N", req.N}};
    out.update(extra);
    if (d == 1) {
        // flat list of the scalar values, real when nothing is complex
        bool real = true;
        for (const auto &k : kernels) {
            real = real && k.coeffs()[0].imag() == 0.0;
        }
        json values = json::array();
        for (const auto &k : kernels) {
            const complex c = k.coeffs()[0];
            values.push_back(real ? number(c.real()) : json::array({number(c.real()), number(c.imag())}));
        }
        out["values"] = values;
    }
    out["kernels"] = ks;
    return out;
}

std::string show_table(const json &shown)
{
    std::ostringstream os;
    os << shown["object"].get<std::string>() << "  measure=" << shown["measure_id"].get<std::string>()
       << "  d=" << shown["d"].get<int>() << "  N=" << shown["N"].get<int>() << '\n';
    if (shown.contains("dist_norm")) {
        os << "dist_norm(p=0,q=0,beta=1) = " << shown["dist_norm"]["value"].dump() << '\n';
    }
    os << std::left << std::setw(4) << "n" << std::setw(16) << "alpha" << std::setw(24) << "re" << "im" << '\n';
    for (const auto &k : shown["kernels"]) {
        for (const auto &e : k["entries"]) {
            os << std::left << std::setw(4) << k["n"].get<int>() << std::setw(16) << e[0].dump() << std::setw(24)
               << e[1].dump() << e[2].dump() << '\n';
        }
    }
    return os.str();
}

} // namespace achaos::cli
