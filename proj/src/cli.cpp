#include "gmorder/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "gmorder/errors.hpp"
#include "gmorder/gm_core.hpp"
#include "gmorder/scenario_io.hpp"

namespace gmorder::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridFlags {
    std::optional<double> min, max;
    std::optional<std::size_t> points;
    bool log = false;

    void add(CLI::App* app) {
        app->add_option("--grid-min", min, "Grid lower end");
        app->add_option("--grid-max", max, "Grid upper end");
        app->add_option("--grid-points", points, "Grid size")->check(CLI::Range(2, 10000000));
        app->add_flag("--grid-log", log, "Log-spaced grid");
    }

    GridOverrides overrides() const {
        GridOverrides o;
        o.x_min = min;
        o.x_max = max;
        o.points = points;
        if (log) o.spacing = Spacing::Log;
        return o;
    }

    bool any() const { return min || max || points || log; }
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Writes to `path`, or to `out` when path is empty.
void emit(const std::string& path, std::ostream& out, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
}

int status_exit(Status s) {
    switch (s) {
        case Status::Holds:
        case Status::HoldsReversed: return kExitOk;
        case Status::Violated: return kExitViolated;
        case Status::Inconclusive: break;
    }
    return kExitInconclusive;
}

int outcome_exit(Outcome o) {
    switch (o) {
        case Outcome::Holds: return kExitOk;
        case Outcome::Violated: return kExitViolated;
        default: return kExitInconclusive;
    }
}

unsigned default_threads() {
    if (std::getenv("GM_ORDER_THREADS")) return threads_from_env();
    return std::max(1u, std::thread::hardware_concurrency());
}

Tolerance tolerance_from(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw UsageError("--tol must be positive");
    return Tolerance::uniform(tol);
}

// eval ---------------------------------------------------------------------

struct EvalArgs {
    double alpha = 0, beta = 0, lambda = 0;
    std::vector<double> at;
    std::vector<double> quantile;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
    if (a.at.empty() == a.quantile.empty()) {
        throw UsageError("eval needs exactly one of --at or --quantile");
    }
    GMParams p = [&] {
        try {
            return GMParams(a.alpha, a.beta, a.lambda);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }();
    std::ostringstream os;
    if (!a.at.empty()) {
        for (double x : a.at) {
            if (!(x >= 0.0) || !std::isfinite(x)) throw UsageError("--at values must be >= 0");
        }
        os << "x,hazard,survival,cdf,pdf\n";
        for (double x : a.at) {
            os << fmt17(x) << ',' << fmt17(hazard(p, x)) << ',' << fmt17(survival(p, x)) << ','
               << fmt17(cdf(p, x)) << ',' << fmt17(pdf(p, x)) << '\n';
        }
    } else {
        for (double q : a.quantile) {
            if (!(q >= 0.0 && q < 1.0)) throw UsageError("--quantile values must lie in [0, 1)");
        }
        os << "q,x\n";
        for (double q : a.quantile) os << fmt17(q) << ',' << fmt17(quantile(p, q)) << '\n';
    }
    out << os.str();
    return kExitOk;
}

// check --------------------------------------------------------------------

struct CheckArgs {
    std::string scenario;
    std::string emit_csv;
    std::string out;
    double tol = 1e-9;
    GridFlags grid;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
    const Tolerance tol = tolerance_from(a.tol);
    ScenarioFile sf = load_scenario(a.scenario);
    if (!sf.relation) throw SchemaError("scenario needs a 'relation' for check");
    GridOverrides g = sf.grid;
    g.merge(a.grid.overrides());
    Grid grid;
    try {
        grid = g.resolve(comparison_upper(sf.A, sf.B, sf.extreme));
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    OrderingVerdict v;
    try {
        v = check_relation(*sf.relation, sf.A, sf.B, sf.extreme, grid, tol);
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
    if (!a.emit_csv.empty()) {
        std::ostringstream csv;
        write_csv(csv, v.trace, v.trimmed);
        emit(a.emit_csv, out, csv.str());
    }
    Json j;
    j["extreme"] = to_string(sf.extreme);
    j["grid"] = grid_to_json(grid);
    j["verdict"] = verdict_to_json(v);
    emit(a.out, out, j.dump(2) + "\n");
    return status_exit(v.status);
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
    std::vector<std::string> theorems;
    std::string scenario;
    std::size_t trials = 200;
    std::uint64_t seed = 42;
    std::optional<std::size_t> n;
    std::optional<unsigned> threads;
    std::string out;
    double tol = 1e-9;
    GridFlags grid;
};

std::vector<std::string> expand_ids(const std::vector<std::string>& raw) {
    std::vector<std::string> ids;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (id.empty()) continue;
            if (id == "all") {
                for (const auto& t : theorem_registry()) ids.push_back(t.id);
            } else if (!find_theorem(id)) {
                throw UsageError("unknown theorem id " + id);
            } else {
                ids.push_back(id);
            }
        }
    }
    if (ids.empty()) throw UsageError("verify needs --theorem");
    return ids;
}

int verify_scenario(const VerifyArgs& a, const std::vector<std::string>& ids, std::ostream& out) {
    if (ids.size() != 1) throw UsageError("--scenario takes exactly one --theorem");
    const TheoremSpec& spec = *find_theorem(ids.front());
    const Tolerance tol = tolerance_from(a.tol);
    ScenarioFile sf = load_scenario(a.scenario);
    Scenario s{sf.A, sf.B, sf.branch.value_or(Cone::D), sf.transform, sf.n1};
    std::optional<Grid> grid;
    GridOverrides g = sf.grid;
    g.merge(a.grid.overrides());
    if (g.x_min || g.x_max || g.points || g.spacing) {
        try {
            grid = g.resolve(comparison_upper(sf.A, sf.B, spec.extreme));
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    TheoremReport r;
    try {
        r = run_theorem(spec, s, grid, tol);
    } catch (const DomainError& e) {
        throw SchemaError(e.what());
    }
    emit(a.out, out, report_to_json(r).dump(2) + "\n");
    return outcome_exit(r.outcome);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto ids = expand_ids(a.theorems);
    if (!a.scenario.empty()) return verify_scenario(a, ids, out);
    if (a.trials == 0) throw UsageError("--trials must be >= 1");
    if (a.grid.min || a.grid.max || a.grid.log) {
        throw UsageError("batch verification accepts only --grid-points");
    }
    BatchOptions opts;
    opts.ids = ids;
    opts.trials = a.trials;
    opts.seed = a.seed;
    opts.n = a.n;
    opts.threads = a.threads.value_or(default_threads());
    opts.tol = tolerance_from(a.tol);
    opts.grid_points = a.grid.points;
    const BatchSummary b = batch_verify(opts);
    emit(a.out, out, batch_to_json(b).dump(2) + "\n");
    if (b.all_hold()) return kExitOk;
    return b.any_violated() ? kExitViolated : kExitInconclusive;
}

// counterexample -----------------------------------------------------------

struct CounterexampleArgs {
    std::string id;
    std::string out;
    std::string report;
    double tol = 1e-9;
    GridFlags grid;
};

int cmd_counterexample(const CounterexampleArgs& a, std::ostream& out, std::ostream& err) {
    const CounterexampleSpec* ce = find_counterexample(a.id);
    if (!ce) throw UsageError("unknown counterexample id " + a.id);
    const Tolerance tol = tolerance_from(a.tol);
    std::optional<Grid> grid;
    if (a.grid.any()) {
        try {
            grid = a.grid.overrides().resolve(comparison_upper(ce->A, ce->B, ce->extreme));
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }
    const CounterexampleReport r = run_counterexample(*ce, grid, tol);
    std::ostringstream csv;
    write_csv(csv, r.verdict.trace, r.verdict.trimmed);
    emit(a.out, out, csv.str());
    if (!a.report.empty()) emit(a.report, out, counterexample_to_json(r).dump(2) + "\n");
    err << r.id << ": " << to_string(r.verdict.relation) << ' ' << to_string(r.verdict.status)
        << (r.reproduced ? " (reproduced)" : " (NOT reproduced)") << '\n';
    return r.reproduced ? kExitOk : kExitViolated;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gompertz-Makeham extremes and stochastic order checks", "gmorder"};
    app.require_subcommand(1);

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "Evaluate one GM distribution");
    eval->add_option("--alpha", ea.alpha)->required();
    eval->add_option("--beta", ea.beta)->required();
    eval->add_option("--lambda", ea.lambda)->required();
    eval->add_option("--at", ea.at, "Comma-separated ages")->delimiter(',');
    eval->add_option("--quantile", ea.quantile, "Comma-separated probabilities")->delimiter(',');

    CheckArgs ca;
    auto* check = app.add_subcommand("check", "Check a relation between two populations");
    check->add_option("scenario", ca.scenario, "Scenario JSON file")->required();
    check->add_option("--emit", ca.emit_csv, "Write the curve table as CSV");
    check->add_option("--out", ca.out, "Write the JSON verdict here instead of stdout");
    check->add_option("--tol", ca.tol, "Absolute and relative tolerance");
    ca.grid.add(check);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Verify theorems on random scenarios");
    verify->add_option("--theorem", va.theorems, "Theorem id(s) or 'all'")->required();
    verify->add_option("--scenario", va.scenario, "Run one theorem on this scenario file");
    verify->add_option("--trials", va.trials);
    verify->add_option("--seed", va.seed);
    verify->add_option("--n", va.n)->check(CLI::Range(2, 8));
    verify->add_option("--threads", va.threads)->check(CLI::Range(1, 256));
    verify->add_option("--out", va.out, "Write the JSON report here instead of stdout");
    verify->add_option("--tol", va.tol);
    va.grid.add(verify);

    CounterexampleArgs xa;
    auto* cex = app.add_subcommand("counterexample", "Reproduce a registered counterexample");
    cex->add_option("--id", xa.id)->required();
    cex->add_option("--out", xa.out, "Write the curve CSV here instead of stdout");
    cex->add_option("--report", xa.report, "Write the JSON verdict to this file");
    cex->add_option("--tol", xa.tol);
    xa.grid.add(cex);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) return cmd_eval(ea, out);
        if (*check) return cmd_check(ca, out);
        if (*verify) return cmd_verify(va, out);
        if (*cex) return cmd_counterexample(xa, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SchemaError& e) {
        err << "error: " << e.what() << '\n';
        return kExitSchema;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInconclusive;
    }
    return kExitUsage;
}

}  // namespace gmorder::cli
