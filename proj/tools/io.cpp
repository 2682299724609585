#include "io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace achaos::cli
{

json number(double v)
{
    if (v == 0.0) {
        return 0; // also folds -0
    }
    if (std::isfinite(v) && std::abs(v) < 9.0e15 && v == std::floor(v)) {
        return static_cast<std::int64_t>(v);
    }
    return v;
}

json kernel_to_json(const SymKernel &k)
{
    json entries = json::array();
    const auto &idx = k.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const complex c = k.coeffs()[i];
        json alpha = json::array();
        for (int e : idx[i].exponents()) {
            alpha.push_back(e);
        }
        entries.push_back(json::array({alpha, number(c.real()), number(c.imag())}));
    }
    return entries;
}

SymKernel kernel_from_json(const json &entries, int d, int n)
{
    SymKernel k(d, n);
    for (const auto &e : entries) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_array()) {
            throw std::invalid_argument("kernel entry must be [[alpha...], re, im]");
        }
        const auto alpha = e[0].get<std::vector<int>>();
        if (static_cast<int>(alpha.size()) != d) {
            throw std::invalid_argument("kernel entry: multi-index has the wrong dimension");
        }
        MultiIndex a(alpha);
        if (a.degree() != n) {
            throw std::invalid_argument("kernel entry: multi-index degree " + std::to_string(a.degree())
                                        + " in slot " + std::to_string(n));
        }
        k[a] = complex(e[1].get<double>(), e[2].get<double>());
    }
    return k;
}

json sequence_to_json(const KernelSequence &s)
{
    json kernels = json::array();
    for (int n = 0; n <= s.N(); ++n) {
        kernels.push_back({{"n", n}, {"entries", kernel_to_json(s[n])}});
    }
    json j = {{"d", s.d},
              {"N", s.N()},
              {"basis", to_string(s.basis)},
              {"measure_id", s.measure_id},
              {"kernels", kernels}};
    if (s.degree_cap) {
        j["degree_cap"] = *s.degree_cap;
    }
    return j;
}

KernelSequence sequence_from_json(const json &j)
{
    try {
        const int d = j.at("d").get<int>();
        const int N = j.at("N").get<int>();
        auto s = KernelSequence::zero(d, N, basis_from_string(j.at("basis").get<std::string>()),
                                      j.value("measure_id", std::string{}));
        for (const auto &k : j.at("kernels")) {
            const int n = k.at("n").get<int>();
            if (n < 0 || n > N) {
                throw std::invalid_argument("kernel slot " + std::to_string(n) + " outside 0.." + std::to_string(N));
            }
            s[n] = kernel_from_json(k.at("entries"), d, n);
        }
        if (j.contains("degree_cap")) {
            s.degree_cap = j["degree_cap"].get<int>();
        }
        return s;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed kernel sequence: ") + e.what());
    }
}

namespace
{

MeasurePtr builtin_mixture()
{
    return density_measure_1d(std::make_shared<NormalMixtureDensity>(
                                  std::vector<NormalComponent>{{0.3, -1.0, 0.7}, {0.7, 0.5, 1.1}}),
                              -14.0, 14.0);
}

MeasurePtr builtin_shifted()
{
    return density_measure_1d(std::make_shared<NormalMixtureDensity>(std::vector<NormalComponent>{{1.0, 0.5, 1.0}}),
                              -13.5, 14.5);
}

WeightModel weights_from_json(const json &lam, int d)
{
    if (lam.is_number()) {
        return WeightModel::uniform(d, lam.get<double>());
    }
    auto v = lam.get<std::vector<double>>();
    if (static_cast<int>(v.size()) != d) {
        throw std::invalid_argument("lambda: expected " + std::to_string(d) + " weights");
    }
    return WeightModel(std::move(v));
}

std::shared_ptr<const Density1D> density_from_json(const json &j)
{
    if (j.contains("expr")) {
        return std::make_shared<ExprDensity>(j["expr"].get<std::string>());
    }
    if (j.contains("grid")) {
        const auto &g = j["grid"];
        return std::make_shared<GridDensity>(g.at("x").get<std::vector<double>>(),
                                             g.at("rho").get<std::vector<double>>());
    }
    if (j.contains("mixture")) {
        std::vector<NormalComponent> comps;
        for (const auto &c : j["mixture"]) {
            comps.push_back({c.value("weight", 1.0), c.value("mean", 0.0), c.value("sd", 1.0)});
        }
        return std::make_shared<NormalMixtureDensity>(std::move(comps));
    }
    throw std::invalid_argument("density: expected one of expr, grid, mixture");
}

std::vector<SymKernel> moments_from_json(const json &j, int d)
{
    std::vector<SymKernel> out;
    int n = 0;
    for (const auto &m : j) {
        if (m.is_number()) {
            if (d != 1) {
                throw std::invalid_argument("custom moments: plain numbers need d = 1");
            }
            SymKernel k(1, n);
            k.coeffs()[0] = m.get<double>();
            out.push_back(k);
        } else {
            out.push_back(kernel_from_json(m.at("entries"), d, n));
        }
        ++n;
    }
    return out;
}

} // namespace

MeasureRegistry::MeasureRegistry()
{
    measures_["gaussian"] = gaussian_measure(1);
    measures_["gaussian2"] = gaussian_measure(2);
    measures_["poisson"] = poisson_measure_1d(1.0);
    measures_["mixture"] = builtin_mixture();
    measures_["shifted-gaussian"] = builtin_shifted();
}

void MeasureRegistry::add(const std::string &name, MeasurePtr mu)
{
    measures_[name] = std::move(mu);
}

MeasurePtr MeasureRegistry::get(const std::string &name) const
{
    const auto it = measures_.find(name);
    if (it == measures_.end()) {
        throw std::invalid_argument("unknown measure '" + name + "'");
    }
    return it->second;
}

std::vector<std::string> MeasureRegistry::names() const
{
    std::vector<std::string> out;
    for (const auto &[k, v] : measures_) {
        out.push_back(k);
    }
    return out;
}

MeasurePtr measure_from_json(const json &spec, const MeasureRegistry &known)
{
    if (spec.is_string()) {
        return known.get(spec.get<std::string>());
    }
    try {
        const auto kind = spec.at("kind").get<std::string>();
        const int d = spec.value("d", 1);
        const int N = spec.value("N", default_moment_degree);
        const json quad = spec.value("quadrature", json::object());
        MeasurePtr mu;
        if (kind == "gaussian") {
            mu = gaussian_measure(d, N, quad.value("nodes", 0));
        } else if (kind == "poisson1d" || kind == "poisson") {
            if (d != 1) {
                throw std::invalid_argument("poisson1d: d must be 1");
            }
            mu = poisson_measure_1d(spec.at("intensity").get<double>(), N);
        } else if (kind == "density1d" || kind == "density") {
            if (d != 1) {
                throw std::invalid_argument("density1d: d must be 1");
            }
            const auto support = spec.at("support").get<std::vector<double>>();
            if (support.size() != 2) {
                throw std::invalid_argument("density1d: support must be [lo, hi]");
            }
            mu = density_measure_1d(density_from_json(spec.at("density")), support[0], support[1], N,
                                    quad.value("nodes", 4001));
        } else if (kind == "custom") {
            std::optional<WeightModel> w;
            if (spec.contains("lambda")) {
                w = weights_from_json(spec["lambda"], d);
            }
            return custom_measure(spec.value("id", std::string("custom")), moments_from_json(spec.at("moments"), d),
                                  w);
        } else if (kind == "product") {
            std::vector<MeasurePtr> factors;
            for (const auto &f : spec.at("factors")) {
                factors.push_back(measure_from_json(f, known));
            }
            mu = product_measure(factors);
        } else {
            throw std::invalid_argument("unknown measure kind '" + kind + "'");
        }
        if (spec.contains("lambda")) {
            mu = std::make_shared<const MeasureModel>(mu->with_weights(weights_from_json(spec["lambda"], mu->dim())));
        }
        return mu;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed measure spec: ") + e.what());
    }
}

Config parse_config(const json &j)
{
    if (!j.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    if (j.value("schema", 0) != 1) {
        throw std::invalid_argument("config: unsupported or missing schema (expected \"schema\": 1)");
    }
    Config c;
    try {
        if (j.contains("seed")) {
            c.seed = j["seed"].get<std::uint64_t>();
        }
        // measures may refer to earlier ones by name; JSON objects iterate in key order,
        // so references are resolved in a second pass when needed
        if (j.contains("measures")) {
            std::map<std::string, json> pending = j["measures"].get<std::map<std::string, json>>();
            while (!pending.empty()) {
                bool progress = false;
                std::string last_error;
                for (auto it = pending.begin(); it != pending.end();) {
                    try {
                        c.measures.add(it->first, measure_from_json(it->second, c.measures));
                        it = pending.erase(it);
                        progress = true;
                    } catch (const std::invalid_argument &e) {
                        last_error = "measure '" + it->first + "': " + e.what();
                        ++it;
                    }
                }
                if (!progress) {
                    throw std::invalid_argument(last_error);
                }
            }
        }
        if (j.contains("suites")) {
            c.suites = j["suites"].get<std::map<std::string, json>>();
        }
        if (j.contains("run")) {
            c.run = j["run"].get<std::vector<std::string>>();
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed config: ") + e.what());
    }
    return c;
}

Config load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument("config '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

} // namespace achaos::cli
