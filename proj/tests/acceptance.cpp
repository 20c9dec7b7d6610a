// One PASS/FAIL line per acceptance criterion. `--criterion k` runs one.
#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gmorder/archimedean.hpp"
#include "gmorder/cli.hpp"
#include "gmorder/extremes.hpp"
#include "gmorder/gm_core.hpp"
#include "gmorder/rng.hpp"
#include "gmorder/stochorder.hpp"
#include "gmorder/veriharness.hpp"

using namespace gmorder;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
    bool pass;
    std::string summary;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

GMParams random_gm(Rng& rng) {
    return GMParams(rng.uniform(0.05, 20), rng.uniform(0.05, 2), rng.uniform(0.05, 20));
}

std::vector<GMParams> random_members(Rng& rng, std::size_t n) {
    std::vector<GMParams> m;
    for (std::size_t i = 0; i < n; ++i) m.push_back(random_gm(rng));
    return m;
}

Result counterexamples() {
    bool ok = true;
    std::string detail;
    for (const auto& ce : counterexample_registry()) {
        const auto t0 = Clock::now();
        const Grid g{0.0, comparison_upper(ce.A, ce.B, ce.extreme), 2000, Spacing::Linear};
        const auto r = run_counterexample(ce, g, Tolerance{});
        const double dt = seconds_since(t0);
        bool good = r.verdict.status == Status::Violated && r.verdict.forward_violated &&
                    r.verdict.reverse_violated && dt < 1.0;
        if (ce.relation == Relation::St) {
            int changes = 0;
            const auto& d = r.verdict.trace.diag;
            for (std::size_t i = 1; i < d.size(); ++i) {
                if (std::abs(d[i - 1]) > 1e-12 && std::abs(d[i]) > 1e-12 && (d[i - 1] < 0) != (d[i] < 0)) {
                    ++changes;
                }
            }
            good = good && changes > 0;
        }
        std::printf("  %-12s %-3s %-10s %.3fs\n", ce.id.c_str(), to_string(ce.relation),
                    to_string(r.verdict.status), dt);
        if (!good) detail += " " + ce.id;
        ok = ok && good;
    }
    return {ok, ok ? "all counterexamples VIOLATED in both directions, each under 1 s"
                   : "not reproduced:" + detail};
}

Result theorem_suite() {
    BatchOptions o;
    for (const auto& t : theorem_registry()) o.ids.push_back(t.id);
    o.trials = 200;
    o.seed = 42;
    o.threads = std::max(1u, std::thread::hardware_concurrency());
    const auto t0 = Clock::now();
    const auto b = batch_verify(o);
    const double dt = seconds_since(t0);
    std::string failing;
    for (const auto& t : b.theorems) {
        std::printf("  %-4s holds %3zu  violated %3zu  inconclusive %3zu  skipped %3zu  exhausted %3zu\n",
                    t.id.c_str(), t.holds, t.violated, t.inconclusive, t.skipped, t.exhausted);
        if (t.holds != t.total()) failing += " " + t.id;
    }
    const bool ok = failing.empty() && dt < 300.0;
    if (ok) return {true, fmt("200/200 HOLDS for all %zu theorems in %.1f s", b.theorems.size(), dt)};
    return {false, fmt("not 200/200 HOLDS:%s (%.1f s)", failing.c_str(), dt)};
}

Result hazard_consistency() {
    Rng rng(2024);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const PopulationSpec pop(random_members(rng, 1 + rng.below(6)));
        const double hi = upper_support(pop, Extreme::Min);
        for (int i = 1; i <= 500; ++i) {
            const double x = hi * i / 501.0;
            const double h = 1e-5 * std::max(x, 1e-3);
            // Fourth-order central difference of -log S.
            auto ls = [&](double t) { return std::log(min_survival(pop, t)); };
            const double fd = -(-ls(x + 2 * h) + 8 * ls(x + h) - 8 * ls(x - h) + ls(x - 2 * h)) / (12 * h);
            const double hz = min_hazard(pop, x);
            worst = std::max(worst, std::abs(fd - hz) / hz);
        }
    }
    return {worst <= 1e-6, fmt("max relative gap %.3g over 50 populations x 500 points (limit 1e-6)", worst)};
}

Result copula_reduction() {
    Rng rng(77);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const auto m = random_members(rng, 1 + rng.below(6));
        const PopulationSpec ind(m), dep(m, std::nullopt, Generator::independence());
        const double hi = std::max(upper_support(ind, Extreme::Min), upper_support(ind, Extreme::Max));
        for (int i = 0; i <= 100; ++i) {
            const double x = hi * i / 100.0;
            worst = std::max(worst, std::abs(min_survival(ind, x) - min_survival(dep, x)));
            worst = std::max(worst, std::abs(max_cdf(ind, x) - max_cdf(dep, x)));
        }
    }
    return {worst <= 1e-12, fmt("max abs gap %.3g over 100 populations (limit 1e-12)", worst)};
}

Result super_additive_dominance() {
    const auto c1 = Generator::clayton(1), c2 = Generator::clayton(2);
    const auto grid = product_u_grid(uniform_levels(50), 2);
    const auto sa = super_additive_compose(c1, c2);
    const auto dom = copula_dominates(c1, c2, grid);
    const auto rev = copula_dominates(c2, c1, grid);
    const bool ok = sa.holds() && dom.holds() && rev.status == Status::Violated && rev.witness.has_value();
    return {ok, fmt("compose %s, dominance %s, reversed %s", to_string(sa.status),
                    to_string(dom.status), to_string(rev.status))};
}

Result shock_masses() {
    Rng rng(606);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 1 + rng.below(6);
        std::vector<double> p;
        double prod = 1.0, comp = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            p.push_back(rng.uniform(0.01, 1.0));
            prod *= p.back();
            comp *= 1.0 - p.back();
        }
        const PopulationSpec pop(random_members(rng, n), p);
        worst = std::max(worst, std::abs(max_cdf(pop, 0.0) - comp) / comp);
        worst = std::max(worst, std::abs(min_survival(pop, 0.0) - prod) / prod);
        worst = std::max(worst, std::abs(atom_at_zero(pop, Extreme::Min) - (1.0 - prod)) / (1.0 - prod));
    }
    // Full precision: within a few rounding units of the direct product.
    return {worst <= 4 * 2.2e-16, fmt("max relative gap %.3g over 100 populations", worst)};
}

Result sampling() {
    constexpr std::size_t n = 100000;
    const double limit = 1.63 / std::sqrt(static_cast<double>(n));
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Rng prng(Rng::substream(31337, seed));
        const GMParams p = random_gm(prng);
        auto xs = sample(p, seed, n);
        std::sort(xs.begin(), xs.end());
        double d = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double f = cdf(p, xs[i]);
            d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
        }
        worst = std::max(worst, d);
    }
    return {worst < limit, fmt("max KS statistic %.5f over 20 seeds (limit %.5f)", worst, limit)};
}

Result quantile_roundtrip() {
    std::vector<double> qs;
    for (int i = 0; i < 100; ++i) {
        const double t = std::pow(10.0, -6.0 + 6.0 * i / 99.0) * 0.5;  // 5e-7 .. 0.5
        qs.push_back(std::max(t, 1e-6));
        qs.push_back(1.0 - std::max(t, 1e-6));
    }
    Rng rng(8080);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const GMParams p = random_gm(rng);
        for (double q : qs) worst = std::max(worst, std::abs(cdf(p, quantile(p, q)) - q));
    }
    return {worst <= 1e-10, fmt("max |cdf(quantile(q)) - q| = %.3g (limit 1e-10)", worst)};
}

Result determinism() {
    auto run = [](const char* threads) {
        std::ostringstream out, err;
        const int code = cli::run({"verify", "--theorem", "all", "--trials", "20", "--seed", "42",
                                   "--threads", threads},
                                  out, err);
        return std::make_pair(code, out.str());
    };
    const auto [c1, j1] = run("1");
    const auto [c8, j8] = run("8");
    const bool ok = c1 == c8 && !j1.empty() && j1 == j8;
    return {ok, fmt("verify JSON %s under 1 and 8 threads (%zu bytes)",
                    ok ? "byte-identical" : "DIFFERS", j1.size())};
}

const std::vector<std::pair<const char*, std::function<Result()>>>& criteria() {
    static const std::vector<std::pair<const char*, std::function<Result()>>> c{
        {"counterexample reproduction", counterexamples},
        {"theorem suite", theorem_suite},
        {"hazard sum vs log-survival slope", hazard_consistency},
        {"independence copula reduction", copula_reduction},
        {"copula dominance from super-additivity", super_additive_dominance},
        {"shock boundary masses", shock_masses},
        {"sampling KS test", sampling},
        {"quantile round trip", quantile_roundtrip},
        {"thread-count determinism", determinism},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    const auto& list = criteria();
    for (std::size_t k = 1; k <= list.size(); ++k) {
        if (only != 0 && static_cast<std::size_t>(only) != k) continue;
        Result o;
        try {
            o = list[k - 1].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::printf("criterion %zu: %s  %s: %s\n", k, o.pass ? "PASS" : "FAIL", list[k - 1].first,
                    o.summary.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
