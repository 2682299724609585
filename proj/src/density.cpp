#include <achaos/density.hpp>

#include <achaos/tensor.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace achaos
{

// NormalMixtureDensity -------------------------------------------------------

NormalMixtureDensity::NormalMixtureDensity(std::vector<NormalComponent> components) : comps_(std::move(components))
{
    if (comps_.empty()) {
        throw std::invalid_argument("NormalMixtureDensity: no components");
    }
    for (const auto &c : comps_) {
        if (!(c.sd > 0.0) || !(c.weight >= 0.0)) {
            throw std::invalid_argument("NormalMixtureDensity: need sd > 0 and weight >= 0");
        }
    }
}

double NormalMixtureDensity::value(double x) const
{
    return *derivative(0, x);
}

std::optional<double> NormalMixtureDensity::derivative(int n, double x) const
{
    if (n < 0) {
        return std::nullopt;
    }
    // d^n/dx^n N(x; m, s) = (-1/s)^n He_n((x-m)/s) N(x; m, s)
    double acc = 0.0;
    for (const auto &c : comps_) {
        const double u = (x - c.mean) / c.sd;
        const double g = std::exp(-0.5 * u * u) / (c.sd * std::sqrt(2.0 * std::numbers::pi));
        double h_prev = 1.0;
        double h = u;
        if (n == 0) {
            h = 1.0;
        }
        for (int k = 1; k < n; ++k) {
            const double next = u * h - k * h_prev;
            h_prev = h;
            h = next;
        }
        acc += c.weight * std::pow(-1.0 / c.sd, n) * h * g;
    }
    return acc;
}

std::string NormalMixtureDensity::describe() const
{
    std::ostringstream os;
    os << "normal-mixture[";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        os << (i ? "," : "") << comps_[i].weight << "*N(" << comps_[i].mean << "," << comps_[i].sd << ")";
    }
    os << "]";
    return os.str();
}

// GridDensity ----------------------------------------------------------------

GridDensity::GridDensity(std::vector<double> x, std::vector<double> rho) : x_(std::move(x)), rho_(std::move(rho))
{
    if (x_.size() < 2 || x_.size() != rho_.size()) {
        throw std::invalid_argument("GridDensity: need at least two points and matching sizes");
    }
    if (!std::is_sorted(x_.begin(), x_.end()) || std::adjacent_find(x_.begin(), x_.end()) != x_.end()) {
        throw std::invalid_argument("GridDensity: abscissae must be strictly increasing");
    }
}

double GridDensity::value(double x) const
{
    if (x < x_.front() || x > x_.back()) {
        return 0.0;
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    if (it == x_.end()) {
        return rho_.back();
    }
    const auto j = static_cast<std::size_t>(it - x_.begin());
    const double t = (x - x_[j - 1]) / (x_[j] - x_[j - 1]);
    return (1.0 - t) * rho_[j - 1] + t * rho_[j];
}

std::string GridDensity::describe() const
{
    return "grid[" + std::to_string(x_.size()) + " points]";
}

// FunctionDensity ------------------------------------------------------------

FunctionDensity::FunctionDensity(std::function<double(double)> f, std::string name)
    : f_(std::move(f)), name_(std::move(name))
{
}

double FunctionDensity::value(double x) const
{
    return f_(x);
}

std::string FunctionDensity::describe() const
{
    return name_;
}

// ExprDensity ----------------------------------------------------------------

namespace
{

using Jet = std::vector<double>;

Jet jet_const(double c, std::size_t len)
{
    Jet j(len, 0.0);
    j[0] = c;
    return j;
}

bool is_constant(const Jet &a)
{
    return std::all_of(a.begin() + 1, a.end(), [](double v) { return v == 0.0; });
}

Jet jet_mul(const Jet &a, const Jet &b)
{
    Jet c(a.size(), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        for (std::size_t i = 0; i <= k; ++i) {
            c[k] += a[i] * b[k - i];
        }
    }
    return c;
}

Jet jet_div(const Jet &a, const Jet &b)
{
    if (b[0] == 0.0) {
        throw std::domain_error("density expression: division by zero");
    }
    Jet c(a.size(), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) {
        double s = a[k];
        for (std::size_t i = 1; i <= k; ++i) {
            s -= b[i] * c[k - i];
        }
        c[k] = s / b[0];
    }
    return c;
}

Jet jet_exp(const Jet &a)
{
    Jet e(a.size(), 0.0);
    e[0] = std::exp(a[0]);
    for (std::size_t k = 1; k < a.size(); ++k) {
        double s = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            s += static_cast<double>(j) * a[j] * e[k - j];
        }
        e[k] = s / static_cast<double>(k);
    }
    return e;
}

Jet jet_log(const Jet &a)
{
    if (!(a[0] > 0.0)) {
        throw std::domain_error("density expression: log of a nonpositive value");
    }
    Jet l(a.size(), 0.0);
    l[0] = std::log(a[0]);
    for (std::size_t k = 1; k < a.size(); ++k) {
        double s = a[k];
        for (std::size_t j = 1; j < k; ++j) {
            s -= static_cast<double>(j) / static_cast<double>(k) * l[j] * a[k - j];
        }
        l[k] = s / a[0];
    }
    return l;
}

Jet jet_pow_real(const Jet &a, double r)
{
    if (!(a[0] > 0.0)) {
        throw std::domain_error("density expression: non-integer power of a nonpositive value");
    }
    Jet p(a.size(), 0.0);
    p[0] = std::pow(a[0], r);
    for (std::size_t k = 1; k < a.size(); ++k) {
        double s = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            s += ((r + 1.0) * static_cast<double>(j) - static_cast<double>(k)) * a[j] * p[k - j];
        }
        p[k] = s / (static_cast<double>(k) * a[0]);
    }
    return p;
}

Jet jet_pow(const Jet &a, const Jet &b)
{
    if (is_constant(b)) {
        const double r = b[0];
        if (r == std::round(r) && std::abs(r) <= 64.0) {
            Jet acc = jet_const(1.0, a.size());
            for (int i = 0; i < static_cast<int>(std::abs(r)); ++i) {
                acc = jet_mul(acc, a);
            }
            return r < 0 ? jet_div(jet_const(1.0, a.size()), acc) : acc;
        }
        return jet_pow_real(a, r);
    }
    return jet_exp(jet_mul(b, jet_log(a)));
}

// s' = sgn c a', c' = -sgn s a' ... handles both trig (sign=-1) and hyperbolic (sign=+1).
std::pair<Jet, Jet> jet_sin_cos(const Jet &a, double sign)
{
    Jet s(a.size(), 0.0);
    Jet c(a.size(), 0.0);
    if (sign < 0) {
        s[0] = std::sin(a[0]);
        c[0] = std::cos(a[0]);
    } else {
        s[0] = std::sinh(a[0]);
        c[0] = std::cosh(a[0]);
    }
    for (std::size_t k = 1; k < a.size(); ++k) {
        double ss = 0.0;
        double cc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            ss += static_cast<double>(j) * a[j] * c[k - j];
            cc += static_cast<double>(j) * a[j] * s[k - j];
        }
        s[k] = ss / static_cast<double>(k);
        c[k] = sign * cc / static_cast<double>(k);
    }
    return {s, c};
}

} // namespace

struct ExprDensity::Node {
    enum class Kind { number, var, add, sub, mul, div, pow, neg, func };
    Kind kind = Kind::number;
    double value = 0.0;
    std::string fn;
    std::unique_ptr<Node> a;
    std::unique_ptr<Node> b;

    Jet eval(const Jet &x) const
    {
        switch (kind) {
            case Kind::number:
                return jet_const(value, x.size());
            case Kind::var:
                return x;
            case Kind::add: {
                Jet l = a->eval(x);
                const Jet r = b->eval(x);
                for (std::size_t i = 0; i < l.size(); ++i) {
                    l[i] += r[i];
                }
                return l;
            }
            case Kind::sub: {
                Jet l = a->eval(x);
                const Jet r = b->eval(x);
                for (std::size_t i = 0; i < l.size(); ++i) {
                    l[i] -= r[i];
                }
                return l;
            }
            case Kind::mul:
                return jet_mul(a->eval(x), b->eval(x));
            case Kind::div:
                return jet_div(a->eval(x), b->eval(x));
            case Kind::pow:
                return jet_pow(a->eval(x), b->eval(x));
            case Kind::neg: {
                Jet l = a->eval(x);
                for (auto &v : l) {
                    v = -v;
                }
                return l;
            }
            case Kind::func:
                return apply(a->eval(x));
        }
        throw std::logic_error("unreachable");
    }

    Jet apply(const Jet &u) const
    {
        if (fn == "exp") {
            return jet_exp(u);
        }
        if (fn == "log") {
            return jet_log(u);
        }
        if (fn == "sqrt") {
            return jet_pow_real(u, 0.5);
        }
        if (fn == "sin") {
            return jet_sin_cos(u, -1.0).first;
        }
        if (fn == "cos") {
            return jet_sin_cos(u, -1.0).second;
        }
        if (fn == "sinh") {
            return jet_sin_cos(u, 1.0).first;
        }
        if (fn == "cosh") {
            return jet_sin_cos(u, 1.0).second;
        }
        if (fn == "tanh") {
            auto [s, c] = jet_sin_cos(u, 1.0);
            return jet_div(s, c);
        }
        if (fn == "abs") {
            Jet r = u;
            if (u[0] < 0.0) {
                for (auto &v : r) {
                    v = -v;
                }
            }
            return r;
        }
        throw std::invalid_argument("density expression: unknown function '" + fn + "'");
    }
};

namespace
{

using Node = ExprDensity::Node;

class Parser
{
public:
    explicit Parser(const std::string &s) : s_(s) {}

    std::unique_ptr<Node> parse()
    {
        auto n = expression();
        skip_ws();
        if (pos_ != s_.size()) {
            fail("unexpected character");
        }
        return n;
    }

private:
    [[noreturn]] void fail(const std::string &msg) const
    {
        throw std::invalid_argument("density expression: " + msg + " at position " + std::to_string(pos_) + " in '"
                                    + s_ + "'");
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static std::unique_ptr<Node> binary(Node::Kind k, std::unique_ptr<Node> a, std::unique_ptr<Node> b)
    {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    std::unique_ptr<Node> expression()
    {
        auto lhs = term();
        while (true) {
            if (accept('+')) {
                lhs = binary(Node::Kind::add, std::move(lhs), term());
            } else if (accept('-')) {
                lhs = binary(Node::Kind::sub, std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    std::unique_ptr<Node> term()
    {
        auto lhs = unary();
        while (true) {
            if (accept('*')) {
                lhs = binary(Node::Kind::mul, std::move(lhs), unary());
            } else if (accept('/')) {
                lhs = binary(Node::Kind::div, std::move(lhs), unary());
            } else {
                return lhs;
            }
        }
    }

    // Unary minus binds looser than '^': -x^2 == -(x^2).
    std::unique_ptr<Node> unary()
    {
        if (accept('-')) {
            auto n = std::make_unique<Node>();
            n->kind = Node::Kind::neg;
            n->a = unary();
            return n;
        }
        if (accept('+')) {
            return unary();
        }
        return power();
    }

    std::unique_ptr<Node> power()
    {
        auto base = primary();
        if (accept('^')) {
            return binary(Node::Kind::pow, std::move(base), unary());
        }
        return base;
    }

    std::unique_ptr<Node> primary()
    {
        skip_ws();
        if (pos_ >= s_.size()) {
            fail("unexpected end of input");
        }
        const char c = s_[pos_];
        if (accept('(')) {
            auto n = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t used = 0;
            const double v = std::stod(s_.substr(pos_), &used);
            pos_ += used;
            auto n = std::make_unique<Node>();
            n->value = v;
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                name += s_[pos_++];
            }
            auto n = std::make_unique<Node>();
            if (name == "x") {
                n->kind = Node::Kind::var;
                return n;
            }
            if (name == "pi") {
                n->value = std::numbers::pi;
                return n;
            }
            if (name == "e") {
                n->value = std::numbers::e;
                return n;
            }
            if (!accept('(')) {
                fail("unknown identifier '" + name + "'");
            }
            n->kind = Node::Kind::func;
            n->fn = name;
            n->a = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            // validate the name eagerly
            n->apply(jet_const(0.5, 1));
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

} // namespace

ExprDensity::ExprDensity(std::string expr) : expr_(std::move(expr)), root_(Parser(expr_).parse()) {}

ExprDensity::~ExprDensity() = default;
ExprDensity::ExprDensity(ExprDensity &&) noexcept = default;
ExprDensity &ExprDensity::operator=(ExprDensity &&) noexcept = default;

std::vector<double> ExprDensity::taylor(double x, int order) const
{
    Jet xj(static_cast<std::size_t>(order) + 1, 0.0);
    xj[0] = x;
    if (order >= 1) {
        xj[1] = 1.0;
    }
    return root_->eval(xj);
}

double ExprDensity::value(double x) const
{
    return taylor(x, 0)[0];
}

std::optional<double> ExprDensity::derivative(int n, double x) const
{
    if (n < 0) {
        return std::nullopt;
    }
    try {
        return taylor(x, n)[static_cast<std::size_t>(n)] * factorial(n);
    } catch (const std::domain_error &) {
        return std::nullopt;
    }
}

std::string ExprDensity::describe() const
{
    return "expr[" + expr_ + "]";
}

} // namespace achaos
