#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "gmorder/stochorder.hpp"
#include "gmorder/veriharness.hpp"

namespace gmorder {

using Json = nlohmann::ordered_json;

// Partial grid description; unset fields fall back to the defaults.
struct GridOverrides {
    std::optional<double> x_min;
    std::optional<double> x_max;
    std::optional<std::size_t> points;
    std::optional<Spacing> spacing;

    // Fields set in `over` win.
    void merge(const GridOverrides& over);
    Grid resolve(double default_x_max) const;
};

// Parsed scenario document:
// {"A": pop, "B": pop, "grid": {...}, "relation": "...", "extreme": "min"|"max"}
// with pop = {"members": [{"alpha", "beta", "lambda"}...], "shock_p"?, "copula"?,
// "alpha_scalar"?, "beta_scalar"?, "lambda_scalar"?}. Theorem runs may add
// "branch" ("D+"/"E+"), "transform" ("p"/"-ln(1-p)") and "n1".
struct ScenarioFile {
    PopulationSpec A;
    PopulationSpec B;
    GridOverrides grid;
    std::optional<Relation> relation;
    Extreme extreme = Extreme::Min;
    std::optional<Cone> branch;
    std::optional<Transform> transform;
    std::size_t n1 = 0;
};

// Both throw SchemaError on malformed input.
ScenarioFile parse_scenario(const std::string& text);
ScenarioFile load_scenario(const std::string& path);

PopulationSpec parse_population(const Json& j);
Json population_to_json(const PopulationSpec& p);
Json scenario_to_json(const Scenario& s);
Json grid_to_json(const Grid& g);
Json verdict_to_json(const OrderingVerdict& v);
Json report_to_json(const TheoremReport& r);
Json batch_to_json(const BatchSummary& b);
Json counterexample_to_json(const CounterexampleReport& r);

// Shortest text that reads back to the same double.
std::string format_double(double v);

// Curve table: header `x,<series...>`, 17 significant digits, trimmed rows
// dropped and listed in trailing `# trimmed: [a,b]` lines.
void write_csv(std::ostream& os, const Trace& t, const std::vector<Interval>& trimmed);

}  // namespace gmorder
