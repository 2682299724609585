// JSON plumbing for the command line runner: measure specs, kernel
// sequences and experiment configs.

#ifndef ACHAOS_TOOLS_IO_HPP
#define ACHAOS_TOOLS_IO_HPP

#include <achaos/measure.hpp>
#include <achaos/sequence.hpp>

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace achaos::cli
{

using json = nlohmann::json;

// Integral doubles become JSON integers so dumps read like the math.
json number(double v);

json kernel_to_json(const SymKernel &k);
SymKernel kernel_from_json(const json &entries, int d, int n);

// {d, N, basis, measure_id, kernels:[{n, entries:[[alpha...], re, im]}]}
json sequence_to_json(const KernelSequence &s);
KernelSequence sequence_from_json(const json &j);

// Named measures: the built-ins plus whatever a config defines.
class MeasureRegistry
{
public:
    MeasureRegistry();
    void add(const std::string &name, MeasurePtr mu);
    // Throws std::invalid_argument for an unknown name.
    MeasurePtr get(const std::string &name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, MeasurePtr> measures_;
};

// Builds a measure from a spec object:
//   {kind: gaussian|poisson1d|density1d|custom|product, d, N, lambda, intensity,
//    density: {expr | grid:{x,rho} | mixture:[{weight,mean,sd}]}, support:[lo,hi],
//    quadrature:{scheme,nodes}, moments, factors}
// "lambda" is the weight of the space (a number or one value per coordinate).
// Product factors are specs or names already in the registry.
MeasurePtr measure_from_json(const json &spec, const MeasureRegistry &known);

struct Config {
    std::optional<std::uint64_t> seed;
    MeasureRegistry measures;
    std::map<std::string, json> suites; // per-suite parameters
    std::vector<std::string> run;
};

// Throws std::invalid_argument on anything malformed.
Config parse_config(const json &j);
Config load_config(const std::string &path);

} // namespace achaos::cli

#endif
