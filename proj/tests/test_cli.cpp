#include "support.hpp"

#include <achaos/appell.hpp>

#include <io.hpp>
#include <suites.hpp>

#include <doctest.h>

#include <stdexcept>

using namespace achaos;
using namespace achaos::cli;

TEST_SUITE("cli")
{
    TEST_CASE("kernel sequences survive a JSON round trip")
    {
        std::mt19937_64 rng(71);
        for (int d = 1; d <= 3; ++d) {
            const auto s = testing::random_sequence(rng, d, 4, Basis::appell_q, "mu", false);
            const auto j = sequence_to_json(s);
            CHECK(j["basis"] == "Q");
            CHECK(j["kernels"].size() == 5);
            const auto back = sequence_from_json(json::parse(j.dump()));
            CHECK(back.basis == Basis::appell_q);
            CHECK(back.measure_id == "mu");
            CHECK(max_abs_diff(back, s) == 0.0);
        }
        CHECK_THROWS_AS(sequence_from_json(json{{"d", 1}}), std::invalid_argument);
        json bad = sequence_to_json(KernelSequence::zero(2, 1, Basis::appell_p, "m"));
        bad["kernels"][1]["entries"][0][0] = json::array({2, 0});
        CHECK_THROWS_AS(sequence_from_json(bad), std::invalid_argument);
    }

    TEST_CASE("integral values print as integers")
    {
        CHECK(number(3.0).dump() == "3");
        CHECK(number(-0.0).dump() == "0");
        CHECK(number(0.5).dump() == "0.5");
    }

    TEST_CASE("measure specs")
    {
        const MeasureRegistry reg;
        const auto p = measure_from_json(json::parse(R"({"kind": "poisson1d", "intensity": 2})"), reg);
        CHECK(p->moment(1).coeffs()[0].real() == doctest::Approx(2.0));
        CHECK(p->moment(2).coeffs()[0].real() == doctest::Approx(6.0));

        const auto e = measure_from_json(
            json::parse(R"j({"kind": "density1d", "density": {"expr": "exp(-(x-1)^2/2)/sqrt(2*pi)"},
                            "support": [-13, 15], "N": 6})j"),
            reg);
        CHECK(e->moment(1).coeffs()[0].real() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(e->moment(2).coeffs()[0].real() == doctest::Approx(2.0).epsilon(1e-10));

        const auto g = measure_from_json(json::parse(R"({"kind": "gaussian", "d": 2, "lambda": [2, 5]})"), reg);
        CHECK(g->weights().lambda()[1] == 5.0);

        const auto c = measure_from_json(json::parse(R"({"kind": "custom", "id": "two-point", "moments": [1, 0, 1, 0, 1]})"), reg);
        CHECK(c->id() == "two-point");
        CHECK(c->max_degree() == 4);

        const auto prod = measure_from_json(json::parse(R"({"kind": "product", "factors": ["gaussian", "poisson"]})"), reg);
        CHECK(prod->dim() == 2);

        CHECK_THROWS_AS(measure_from_json(json::parse(R"({"kind": "cauchy"})"), reg), std::invalid_argument);
        CHECK_THROWS_AS(measure_from_json(json::parse(R"({"kind": "poisson1d"})"), reg), std::invalid_argument);
        CHECK_THROWS_AS(measure_from_json(json::parse(R"j({"kind": "density1d", "density": {"expr": "2*exp(-x^2/2)/sqrt(2*pi)"},
                                                          "support": [-10, 10]})j"),
                                          reg),
                        std::invalid_argument);
        CHECK_THROWS_AS(reg.get("nope"), std::invalid_argument);
    }

    TEST_CASE("config parsing")
    {
        CHECK_THROWS_AS(parse_config(json::parse(R"({"run": []})")), std::invalid_argument);
        CHECK_THROWS_AS(parse_config(json::parse(R"({"schema": 2})")), std::invalid_argument);
        CHECK_THROWS_AS(parse_config(json::parse(R"({"schema": 1, "run": "wick"})")), std::invalid_argument);
        CHECK_THROWS_AS(load_config("/nonexistent/achaos.json"), std::invalid_argument);

        // measures may refer to each other regardless of key order
        const auto c = parse_config(json::parse(R"({"schema": 1, "seed": 3,
            "measures": {"a": {"kind": "product", "factors": ["z", "gaussian"]}, "z": {"kind": "poisson1d", "intensity": 1}},
            "run": ["wick"]})"));
        CHECK(*c.seed == 3);
        CHECK(c.measures.get("a")->dim() == 2);
        CHECK(c.run == std::vector<std::string>{"wick"});
    }

    TEST_CASE("suites")
    {
        const MeasureRegistry reg;
        const auto a = run_suite("appell-identities", json::parse(R"({"measures": ["gaussian"], "N": 8, "trials": 40})"),
                                 reg, 7);
        CHECK(a.pass);
        for (const auto &c : a.cases) {
            CHECK(c.residual < 1e-11);
        }

        const auto ch = run_suite("charlier", json::object(), reg, 7);
        CHECK(ch.pass);
        for (const auto &c : ch.cases) {
            INFO(c.name);
            CHECK(c.pass);
        }

        const auto w = run_suite("wick", json::parse(R"({"trials": 50})"), reg, 7);
        CHECK(w.pass);

        // tolerances are configurable and failures are reported, not thrown
        const auto strict = run_suite("charlier", json::parse(R"({"tolerances": {"orthogonality": -1}})"), reg, 7);
        CHECK(!strict.pass);

        CHECK_THROWS_AS(run_suite("nope", json::object(), reg, 7), std::invalid_argument);
        CHECK_THROWS_AS(run_suite("norms", json::parse(R"({"measures": ["nope"]})"), reg, 7), std::invalid_argument);
    }

    TEST_CASE("reports are byte-stable and empty runs are empty")
    {
        Config cfg;
        cfg.suites["wick"] = json::parse(R"({"trials": 30})");
        cfg.suites["norms"] = json::parse(R"({"trials": 20})");
        const std::vector<std::string> names{"wick", "norms"};
        const auto r1 = report_to_json(run_suites(cfg, names, 11), 11, false).dump(2);
        const auto r2 = report_to_json(run_suites(cfg, names, 11), 11, false).dump(2);
        CHECK(r1 == r2);
        const auto r3 = report_to_json(run_suites(cfg, names, 12), 12, false).dump(2);
        CHECK(r1 != r3);
        const auto j = json::parse(r1);
        CHECK(j["schema"] == 1);
        CHECK(j["suites"][0]["suite"] == "wick");
        CHECK(j["suites"][1]["suite"] == "norms");
        CHECK(!j["suites"][0].contains("seconds"));

        const auto empty = run_suites(cfg, {}, 1);
        CHECK(empty.pass);
        CHECK(report_to_json(empty, 1, false)["suites"].empty());

        CHECK_THROWS_AS(run_suites(cfg, {"wick", "bogus"}, 1), std::invalid_argument);
    }

    TEST_CASE("show")
    {
        const MeasureRegistry reg;
        const auto a = show_json({"appell", "gaussian", 6, {}}, reg);
        CHECK(a["values"].dump() == "[1,0,-1,0,3,0,-15]");

        // delta_0 has coefficients B_n / n!
        const auto d = show_json({"delta", "poisson", 5, {}}, reg);
        const auto sys = build_appell(poisson_measure_1d(1.0), 5);
        for (int n = 0; n <= 5; ++n) {
            CHECK(d["values"][static_cast<std::size_t>(n)].get<double>()
                  == doctest::Approx(sys.B(n).coeffs()[0].real() / factorial(n)));
        }
        CHECK(d["basis"] == "Q");

        const auto e = show_json({"empty", "gaussian2", 3, {}}, reg);
        for (const auto &k : e["kernels"]) {
            for (const auto &entry : k["entries"]) {
                CHECK(entry[1] == 0);
                CHECK(entry[2] == 0);
            }
        }
        CHECK(e["dist_norm"]["value"] == 0);

        const auto rho = show_json({"rho", "gaussian", 3, {2.0}}, reg);
        CHECK(rho["values"].dump() == "[1,-2,2,-1.3333333333333333]");

        const auto m = show_json({"moments", "gaussian", 6, {}}, reg);
        CHECK(m["values"].dump() == "[1,0,1,0,3,0,15]");

        const auto table = show_table(a);
        CHECK(table.find("-15") != std::string::npos);

        CHECK_THROWS_AS(show_json({"bogus", "gaussian", 3, {}}, reg), std::invalid_argument);
        CHECK_THROWS_AS(show_json({"delta", "gaussian", 3, {1.0, 2.0}}, reg), std::invalid_argument);
    }
}
