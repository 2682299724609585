// Named verification suites and the show command behind the achaos CLI.

#ifndef ACHAOS_TOOLS_SUITES_HPP
#define ACHAOS_TOOLS_SUITES_HPP

#include "io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace achaos::cli
{

struct CaseResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CaseResult> cases;
    bool pass = true;
    double seconds = 0.0;
};

// appell-identities, biorthogonality, transforms, wick, remeasure, norms, charlier
const std::vector<std::string> &suite_names();

// Runs one suite; throws std::invalid_argument for an unknown name or bad
// parameters. The random stream depends only on (seed, suite name).
SuiteResult run_suite(const std::string &name, const json &params, const MeasureRegistry &measures,
                      std::uint64_t seed);

struct RunResult {
    std::vector<SuiteResult> suites;
    bool pass = true;
};

// Runs the suites concurrently and returns them in the requested order.
// Unknown names are rejected before anything runs.
RunResult run_suites(const Config &config, const std::vector<std::string> &names, std::uint64_t seed);

// {schema: 1, seed, pass, suites: [{suite, pass, cases: [{name, residual, tolerance, pass}]}]}
// Timings are included only on request so that default reports are byte-stable.
json report_to_json(const RunResult &r, std::uint64_t seed, bool timings);

struct ShowRequest {
    std::string object; // moments | appell | delta | rho | empty
    std::string measure = "gaussian";
    int N = 6;
    std::vector<double> z; // defaults to the origin
};

json show_json(const ShowRequest &req, const MeasureRegistry &measures);
std::string show_table(const json &shown);

} // namespace achaos::cli

#endif
