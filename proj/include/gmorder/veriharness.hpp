#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmorder/extremes.hpp"
#include "gmorder/majorize.hpp"
#include "gmorder/rng.hpp"
#include "gmorder/stochorder.hpp"

namespace gmorder {

enum class TheoremRegime { Dependent, Independent, MultipleOutlier, ShockMax, ShockMin };

const char* to_string(TheoremRegime r);

// Forward: the conclusion reads A <= B. Reverse: A >= B.
enum class Direction { Forward, Reverse };

const char* to_string(Direction d);

// Increasing convex transforms applied to shock probabilities.
enum class Transform { Identity, NegLogComplement };

const char* to_string(Transform t);
std::optional<Transform> parse_transform(const std::string& s);
double apply(Transform t, double p);
double invert(Transform t, double u);
std::vector<double> apply(Transform t, const std::vector<double>& p);

// Two populations compared by a theorem: A plays X, B plays Y.
struct Scenario {
    PopulationSpec A;
    PopulationSpec B;
    Cone branch = Cone::D;
    std::optional<Transform> h;
    std::size_t n1 = 0;  // size of the first block in multiple-outlier models
};

struct HypothesisResult {
    std::string name;
    bool pass = false;
};

struct TheoremSpec {
    std::string id;
    TheoremRegime regime;
    Relation relation;
    Extreme extreme;
    std::string conclusion;
    std::string note;
    // One random proposal; gen_scenario keeps proposing until hypotheses pass.
    std::function<Scenario(std::size_t n, Rng& rng)> propose;
    std::function<std::vector<HypothesisResult>(const Scenario&)> hypotheses;
    std::function<Direction(const Scenario&)> expected;
};

const std::vector<TheoremSpec>& theorem_registry();
const TheoremSpec* find_theorem(const std::string& id);

class GenerationExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMaxProposals = 100000;

// Deterministic in (spec, n, seed). n must lie in [2, 8].
Scenario gen_scenario(const TheoremSpec& spec, std::size_t n, std::uint64_t seed,
                      std::size_t max_proposals = kMaxProposals);

enum class Outcome { Holds, Violated, Inconclusive, Skipped, Exhausted };

const char* to_string(Outcome o);

struct TheoremReport {
    std::string theorem_id;
    std::string digest;
    std::optional<Scenario> scenario;
    std::vector<HypothesisResult> hypotheses;
    Direction expected = Direction::Forward;
    std::optional<OrderingVerdict> conclusion;
    std::optional<Grid> grid;
    Outcome outcome = Outcome::Skipped;
    // For hazard checks with atoms: whether x >= 0 alone confirms the expected direction.
    std::optional<bool> continuous_confirms;
    std::string detail;
};

// FNV-1a digest of the scenario parameters.
std::string scenario_digest(const Scenario& s);

TheoremReport run_theorem(const TheoremSpec& spec, const Scenario& scenario,
                          const std::optional<Grid>& grid = std::nullopt,
                          const Tolerance& tol = {});

struct CounterexampleSpec {
    std::string id;
    PopulationSpec A;
    PopulationSpec B;
    Extreme extreme;
    Relation relation;
    std::string description;
};

const std::vector<CounterexampleSpec>& counterexample_registry();
const CounterexampleSpec* find_counterexample(const std::string& id);

struct CounterexampleReport {
    std::string id;
    OrderingVerdict verdict;
    Grid grid;
    bool reproduced = false;
};

CounterexampleReport run_counterexample(const CounterexampleSpec& ce,
                                        const std::optional<Grid>& grid = std::nullopt,
                                        const Tolerance& tol = {});

struct BatchOptions {
    std::vector<std::string> ids;
    std::size_t trials = 200;
    std::uint64_t seed = 42;
    std::optional<std::size_t> n;  // otherwise cycles through 2, 3, 5
    unsigned threads = 1;
    Tolerance tol;
    std::optional<std::size_t> grid_points;
};

struct TheoremSummary {
    std::string id;
    std::string conclusion;
    std::string note;
    std::size_t holds = 0;
    std::size_t violated = 0;
    std::size_t inconclusive = 0;
    std::size_t skipped = 0;
    std::size_t exhausted = 0;
    std::size_t continuous_checked = 0;
    std::size_t continuous_confirmed = 0;
    // Every trial that did not confirm the conclusion, in trial order.
    std::vector<std::pair<std::size_t, TheoremReport>> flagged;

    std::size_t total() const { return holds + violated + inconclusive + skipped + exhausted; }
};

struct BatchSummary {
    BatchOptions options;
    std::vector<TheoremSummary> theorems;

    bool all_hold() const;
    bool any_violated() const;
};

// Runs trials in parallel; results are merged in trial order so the summary
// does not depend on the thread count.
BatchSummary batch_verify(const BatchOptions& opts);

// GM_ORDER_THREADS when set to a positive integer, else 1.
unsigned threads_from_env();

}  // namespace gmorder
