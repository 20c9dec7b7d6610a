#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <thread>

#include "gmorder/errors.hpp"
#include "gmorder/veriharness.hpp"

namespace gmorder {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

void append_population(std::string& out, const PopulationSpec& p) {
    char buf[96];
    for (const auto& m : p.members()) {
        std::snprintf(buf, sizeof buf, "(%.17g,%.17g,%.17g)", m.alpha(), m.beta(), m.lambda());
        out += buf;
    }
    if (p.shock_p()) {
        out += "p";
        for (double v : *p.shock_p()) {
            std::snprintf(buf, sizeof buf, ",%.17g", v);
            out += buf;
        }
    }
    if (p.copula()) out += "c" + p.copula()->name();
    out += ";";
}

}  // namespace

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Holds: return "HOLDS";
        case Outcome::Violated: return "VIOLATED";
        case Outcome::Inconclusive: return "INCONCLUSIVE";
        case Outcome::Skipped: return "SKIPPED-CONCLUSION";
        case Outcome::Exhausted: return "GENERATION-EXHAUSTED";
    }
    return "?";
}

std::string scenario_digest(const Scenario& s) {
    std::string canon;
    append_population(canon, s.A);
    append_population(canon, s.B);
    canon += to_string(s.branch);
    if (s.h) canon += to_string(*s.h);
    canon += std::to_string(s.n1);
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a(canon));
    return buf;
}

Scenario gen_scenario(const TheoremSpec& spec, std::size_t n, std::uint64_t seed,
                      std::size_t max_proposals) {
    if (n < 2 || n > 8) throw DomainError("scenario dimension must lie in [2, 8]");
    Rng rng(seed);
    for (std::size_t k = 0; k < max_proposals; ++k) {
        try {
            Scenario s = spec.propose(n, rng);
            const auto hyps = spec.hypotheses(s);
            if (std::all_of(hyps.begin(), hyps.end(), [](const auto& h) { return h.pass; })) {
                return s;
            }
        } catch (const DomainError&) {
            // Proposal left the parameter domain; draw again.
        }
    }
    throw GenerationExhausted("no scenario for " + spec.id + " satisfied every hypothesis after " +
                              std::to_string(max_proposals) + " proposals");
}

TheoremReport run_theorem(const TheoremSpec& spec, const Scenario& scenario,
                          const std::optional<Grid>& grid, const Tolerance& tol) {
    TheoremReport rep;
    rep.theorem_id = spec.id;
    rep.digest = scenario_digest(scenario);
    rep.scenario = scenario;
    rep.hypotheses = spec.hypotheses(scenario);
    rep.expected = spec.expected(scenario);
    const bool all_pass = std::all_of(rep.hypotheses.begin(), rep.hypotheses.end(),
                                      [](const auto& h) { return h.pass; });
    if (!all_pass) {
        rep.outcome = Outcome::Skipped;
        rep.detail = "hypotheses failed; conclusion not evaluated";
        return rep;
    }
    try {
        rep.grid = grid.value_or(
            default_grid(comparison_upper(scenario.A, scenario.B, spec.extreme)));
        rep.conclusion =
            check_relation(spec.relation, scenario.A, scenario.B, spec.extreme, *rep.grid, tol);
    } catch (const EvaluationError& e) {
        rep.outcome = Outcome::Inconclusive;
        rep.detail = e.what();
        return rep;
    }
    const OrderingVerdict& v = *rep.conclusion;
    const bool forward = rep.expected == Direction::Forward;
    const bool holds = forward ? v.forward_holds : v.reverse_holds;
    const bool violated = forward ? v.forward_violated : v.reverse_violated;
    if (v.status == Status::Inconclusive && !v.detail.empty() && !holds && !violated) {
        rep.outcome = Outcome::Inconclusive;
        rep.detail = v.detail;
    } else if (holds) {
        rep.outcome = Outcome::Holds;
    } else if (violated) {
        rep.outcome = Outcome::Violated;
    } else {
        rep.outcome = Outcome::Inconclusive;
        rep.detail = "expected direction fails only inside the tolerance margin";
    }
    if (v.continuous) {
        rep.continuous_confirms = forward ? v.continuous->forward_holds
                                          : v.continuous->reverse_holds;
    }
    return rep;
}

bool BatchSummary::all_hold() const {
    return std::all_of(theorems.begin(), theorems.end(),
                       [](const auto& t) { return t.holds == t.total() && t.total() > 0; });
}

bool BatchSummary::any_violated() const {
    return std::any_of(theorems.begin(), theorems.end(),
                       [](const auto& t) { return t.violated > 0; });
}

unsigned threads_from_env() {
    const char* v = std::getenv("GM_ORDER_THREADS");
    if (!v) return 1;
    char* end = nullptr;
    const long n = std::strtol(v, &end, 10);
    if (end == v || n < 1) return 1;
    return static_cast<unsigned>(std::min(n, 256L));
}

BatchSummary batch_verify(const BatchOptions& opts) {
    if (opts.trials == 0) throw DomainError("trials must be >= 1");
    std::vector<const TheoremSpec*> specs;
    for (const auto& id : opts.ids) {
        const TheoremSpec* s = find_theorem(id);
        if (!s) throw DomainError("unknown theorem id " + id);
        specs.push_back(s);
    }
    static constexpr std::size_t kCycle[] = {2, 3, 5};

    // One flat job list: (theorem, trial). Each job owns its result slot.
    const std::size_t jobs = specs.size() * opts.trials;
    std::vector<TheoremReport> results(jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t j = next++; j < jobs; j = next++) {
            const TheoremSpec& spec = *specs[j / opts.trials];
            const std::size_t k = j % opts.trials;
            const std::size_t n = opts.n.value_or(kCycle[k % 3]);
            const std::uint64_t seed = Rng::substream(Rng::substream(opts.seed, fnv1a(spec.id)), k);
            TheoremReport rep;
            try {
                const Scenario s = gen_scenario(spec, n, seed);
                std::optional<Grid> grid;
                if (opts.grid_points) {
                    Grid g = default_grid(comparison_upper(s.A, s.B, spec.extreme));
                    g.points = *opts.grid_points;
                    grid = g;
                }
                rep = run_theorem(spec, s, grid, opts.tol);
            } catch (const GenerationExhausted& e) {
                rep.theorem_id = spec.id;
                rep.outcome = Outcome::Exhausted;
                rep.detail = e.what();
            }
            results[j] = std::move(rep);
        }
    };
    const unsigned threads = std::max(1u, opts.threads);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    BatchSummary summary;
    summary.options = opts;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        TheoremSummary ts;
        ts.id = specs[i]->id;
        ts.conclusion = specs[i]->conclusion;
        ts.note = specs[i]->note;
        for (std::size_t k = 0; k < opts.trials; ++k) {
            TheoremReport& rep = results[i * opts.trials + k];
            switch (rep.outcome) {
                case Outcome::Holds: ++ts.holds; break;
                case Outcome::Violated: ++ts.violated; break;
                case Outcome::Inconclusive: ++ts.inconclusive; break;
                case Outcome::Skipped: ++ts.skipped; break;
                case Outcome::Exhausted: ++ts.exhausted; break;
            }
            if (rep.continuous_confirms) {
                ++ts.continuous_checked;
                if (*rep.continuous_confirms) ++ts.continuous_confirmed;
            }
            if (rep.outcome != Outcome::Holds) ts.flagged.emplace_back(k, std::move(rep));
        }
        summary.theorems.push_back(std::move(ts));
    }
    return summary;
}

}  // namespace gmorder
