// achaos: run verification suites from a config, or dump kernels.

#include "io.hpp"
#include "suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace
{

using namespace achaos::cli;

int do_run(const std::string &config_path, const std::vector<std::string> &suites, const std::string &out_path,
           std::optional<std::uint64_t> seed_opt, bool timings)
{
    Config config;
    if (!config_path.empty()) {
        config = load_config(config_path);
    }
    const auto names = suites.empty() ? config.run : suites;
    std::uint64_t seed = 0;
    if (seed_opt) {
        seed = *seed_opt;
    } else if (config.seed) {
        seed = *config.seed;
    } else if (!names.empty()) {
        throw std::invalid_argument("a seed is required (--seed or \"seed\" in the config)");
    }
    const auto result = run_suites(config, names, seed);
    const std::string text = report_to_json(result, seed, timings).dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw std::runtime_error("cannot write report '" + out_path + "'");
        }
        out << text;
    }
    for (const auto &s : result.suites) {
        for (const auto &c : s.cases) {
            if (!c.pass) {
                std::cerr << "FAIL " << s.suite << ": " << c.name << " residual " << c.residual << " > "
                          << c.tolerance << '\n';
            }
        }
    }
    return result.pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"achaos: Appell chaos calculus verification runner"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> suites;
    std::string out_path;
    std::uint64_t seed = 0;
    bool timings = false;
    auto *run = app.add_subcommand("run", "run verification suites and write a JSON report");
    run->add_option("--config", config_path, "experiment config (JSON)");
    run->add_option("--suite", suites, "suite name; repeatable, overrides the config's run list");
    run->add_option("--out", out_path, "report path (stdout if omitted)");
    auto *seed_opt = run->add_option("--seed", seed, "RNG seed, overrides the config");
    run->add_flag("--timings", timings, "include wall-clock seconds per suite");

    ShowRequest req;
    std::string format = "json";
    std::string show_config;
    auto *show = app.add_subcommand("show", "dump kernels of a named object");
    show->add_option("--object", req.object, "moments | appell | delta | rho | empty")->required();
    show->add_option("--measure", req.measure, "built-in or config measure name");
    show->add_option("--N", req.N, "truncation degree");
    show->add_option("--z", req.z, "point for delta/rho, comma separated")->delimiter(',');
    show->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));
    show->add_option("--config", show_config, "config providing extra measures");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            return do_run(config_path, suites, out_path,
                          *seed_opt ? std::optional<std::uint64_t>(seed) : std::nullopt, timings);
        }
        const Config config = show_config.empty() ? Config{} : load_config(show_config);
        const auto shown = show_json(req, config.measures);
        if (format == "json") {
            std::cout << shown.dump() << '\n';
        } else {
            std::cout << show_table(shown);
        }
        return 0;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
