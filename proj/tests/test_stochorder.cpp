#include <doctest.h>

#include <cmath>
#include <vector>

#include "gmorder/errors.hpp"
#include "gmorder/rng.hpp"
#include "gmorder/stochorder.hpp"
#include "gmorder/veriharness.hpp"

using namespace gmorder;

namespace {

PopulationSpec pop2(double a1, double b1, double l1, double a2, double b2, double l2) {
    return PopulationSpec({GMParams(a1, b1, l1), GMParams(a2, b2, l2)});
}

Grid linear(double hi, std::size_t n = 2000) { return Grid{0.0, hi, n, Spacing::Linear}; }

std::vector<GMParams> random_members(Rng& rng, std::size_t n) {
    std::vector<GMParams> m;
    for (std::size_t i = 0; i < n; ++i) {
        m.emplace_back(rng.uniform(0.05, 5), rng.uniform(0.05, 2), rng.uniform(0.05, 5));
    }
    return m;
}

// Root of g on [lo, hi] by bisection to machine precision.
double bisect(const std::function<double(double)>& g, double lo, double hi) {
    double glo = g(lo);
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_SUITE("stochorder") {

TEST_CASE("grid construction") {
    const auto lin = linear(2.0, 21).values();
    CHECK(lin.size() == 21);
    CHECK(lin.front() == 0.0);
    CHECK(lin.back() == 2.0);
    const auto lg = Grid{0.0, 10.0, 100, Spacing::Log}.values();
    CHECK(lg.size() == 100);
    CHECK(lg.front() == 0.0);
    for (std::size_t i = 1; i < lg.size(); ++i) CHECK(lg[i] > lg[i - 1]);
    CHECK_THROWS_AS(Grid({1.0, 0.5, 100, Spacing::Linear}).validate(), DomainError);
    CHECK_THROWS_AS(Grid({0.0, 1.0, 3, Spacing::Linear}).validate(), DomainError);
    CHECK(parse_relation("R-hr") == Relation::RHr);
    CHECK_FALSE(parse_relation("xx").has_value());
}

TEST_CASE("reflexivity") {
    const auto p = pop2(0.3, 1.0, 0.2, 2.0, 0.4, 0.7);
    for (Relation r : {Relation::St, Relation::Hr, Relation::Rh, Relation::Lr, Relation::RHr}) {
        const auto v = check_relation(r, p, p, Extreme::Min, linear(3.0));
        CHECK(v.status == Status::Holds);
        CHECK(v.forward_holds);
        CHECK(v.reverse_holds);
    }
    for (Relation r : {Relation::St, Relation::Hr, Relation::Rh, Relation::Lr}) {
        CHECK(check_relation(r, p, p, Extreme::Max, linear(6.0)).status == Status::Holds);
    }
    CHECK_THROWS_AS(check_relation(Relation::RHr, p, p, Extreme::Max, linear(6.0)), DomainError);
}

TEST_CASE("exponential and gompertz closed forms") {
    const PopulationSpec fast({GMParams(1, 0, 1)}), slow({GMParams(0.5, 0, 0.5)});
    CHECK(check_relation(Relation::Hr, fast, slow, Extreme::Min, linear(10)).status == Status::Holds);
    CHECK(check_relation(Relation::Lr, fast, slow, Extreme::Min, linear(10)).status == Status::Holds);
    CHECK(check_relation(Relation::Hr, slow, fast, Extreme::Min, linear(10)).status ==
          Status::HoldsReversed);
    const PopulationSpec g2({GMParams(1, 2, 0)}), g1({GMParams(1, 1, 0)});
    CHECK(check_relation(Relation::RHr, g2, g1, Extreme::Min, linear(3)).status == Status::Holds);
}

TEST_CASE("reversed hazard on F and F squared") {
    const GMParams g(0.5, 0.5, 0.5);
    ExtremeCurve a{CurveKind::MaxCdf, Regime::Independent, 0.0, [g](double x) { return cdf(g, x); }};
    ExtremeCurve b{CurveKind::MaxCdf, Regime::Independent, 0.0,
                   [g](double x) { return cdf(g, x) * cdf(g, x); }};
    CHECK(check_rh(a, b, linear(8)).status == Status::Holds);
    CHECK(check_st(a, b, linear(8)).status == Status::Holds);
}

TEST_CASE("minimum hazard order example") {
    const auto A = pop2(3, 1, 1, 1, 0.5, 1);
    const auto B = pop2(2, 1, 1, 2, 0.5, 1);
    const auto v = check_relation(Relation::Hr, A, B, Extreme::Min, linear(comparison_upper(A, B, Extreme::Min)));
    CHECK(v.status == Status::Holds);
    REQUIRE(v.hazard_crosscheck.has_value());
    CHECK(*v.hazard_crosscheck == Status::Holds);
}

TEST_CASE("counterexample curves") {
    const auto lr = *find_counterexample("CE-MIN-LR-A");
    const auto v = check_relation(Relation::Lr, lr.A, lr.B, Extreme::Min,
                                  linear(comparison_upper(lr.A, lr.B, Extreme::Min)));
    CHECK(v.status == Status::Violated);
    CHECK(v.forward_violated);
    CHECK(v.reverse_violated);
    CHECK(v.witness.has_value());
    CHECK(v.reverse_witness.has_value());
    CHECK(v.trace.diag_name == "f_B/f_A");
}

TEST_CASE("maximum crossing points") {
    // Roots of F_A - F_B, located with 50-digit arithmetic.
    const auto st1 = *find_counterexample("CE-MAX-ST-1");
    auto d1 = [&](double x) { return max_cdf(st1.A, x) - max_cdf(st1.B, x); };
    CHECK(bisect(d1, 0.2, 0.6) == doctest::Approx(0.428937855336338374).epsilon(1e-10));
    CHECK(bisect(d1, 0.6, 1.2) == doctest::Approx(0.864928602608323821).epsilon(1e-10));
    const auto st2 = *find_counterexample("CE-MAX-ST-2");
    auto d2 = [&](double x) { return max_cdf(st2.A, x) - max_cdf(st2.B, x); };
    CHECK(bisect(d2, 1.0, 5.0) == doctest::Approx(2.74290893846887081).epsilon(1e-10));

    // The sampled difference changes sign on the default grid too.
    const auto rep = run_counterexample(st1);
    int changes = 0;
    for (std::size_t i = 1; i < rep.verdict.trace.diag.size(); ++i) {
        const double a = rep.verdict.trace.diag[i - 1], b = rep.verdict.trace.diag[i];
        if (std::abs(a) > 1e-12 && std::abs(b) > 1e-12 && (a < 0) != (b < 0)) ++changes;
    }
    CHECK(changes == 2);
}

TEST_CASE("order ladder lr => hr => st") {
    Rng rng(77);
    int lr_seen = 0, hr_seen = 0;
    for (int k = 0; k < 150; ++k) {
        const std::size_t n = 1 + rng.below(3);
        const PopulationSpec A(random_members(rng, n)), B(random_members(rng, n));
        for (Extreme e : {Extreme::Min, Extreme::Max}) {
            const Grid g = linear(comparison_upper(A, B, e), 1000);
            const auto lr = check_relation(Relation::Lr, A, B, e, g);
            const auto hr = check_relation(Relation::Hr, A, B, e, g);
            const auto rh = check_relation(Relation::Rh, A, B, e, g);
            const auto st = check_relation(Relation::St, A, B, e, g);
            if (lr.forward_holds) {
                ++lr_seen;
                CHECK(hr.forward_holds);
                CHECK(rh.forward_holds);
            }
            if (hr.forward_holds) {
                ++hr_seen;
                CHECK(st.forward_holds);
            }
            if (rh.forward_holds) CHECK(st.forward_holds);
        }
    }
    CHECK(lr_seen > 10);
    CHECK(hr_seen > lr_seen);
}

TEST_CASE("hazard ratio agrees with hazard dominance") {
    Rng rng(91);
    int compared = 0;
    for (int k = 0; k < 150; ++k) {
        const std::size_t n = 1 + rng.below(3);
        const PopulationSpec A(random_members(rng, n)), B(random_members(rng, n));
        const auto v = check_relation(Relation::Hr, A, B, Extreme::Min,
                                      linear(comparison_upper(A, B, Extreme::Min)));
        REQUIRE(v.hazard_crosscheck.has_value());
        if (v.status == Status::Inconclusive || *v.hazard_crosscheck == Status::Inconclusive) continue;
        ++compared;
        CHECK(v.status == *v.hazard_crosscheck);
    }
    CHECK(compared > 100);
}

TEST_CASE("counterexamples are stable under grid refinement") {
    for (const auto& ce : counterexample_registry()) {
        const double hi = comparison_upper(ce.A, ce.B, ce.extreme);
        for (std::size_t pts : {500u, 2000u, 8000u}) {
            const auto r = run_counterexample(ce, linear(hi, pts));
            CHECK_MESSAGE(r.verdict.status == Status::Violated, ce.id << " at " << pts);
        }
    }
}

TEST_CASE("shock atoms enter the hazard ratio") {
    const std::vector<GMParams> m{GMParams(1, 1, 1), GMParams(0.5, 0.5, 0.5)};
    const PopulationSpec A(m, std::vector<double>{0.9, 0.9}), B(m, std::vector<double>{0.5, 0.5});
    const auto v = check_relation(Relation::Hr, A, B, Extreme::Min, linear(5));
    REQUIRE(v.continuous.has_value());
    // Same members: the continuous ratio is constant.
    CHECK(v.continuous->forward_holds);
    CHECK(v.continuous->reverse_holds);
    // B has the larger atom and drops below A at zero.
    CHECK(v.status == Status::HoldsReversed);
}

TEST_CASE("classification thresholds") {
    const Tolerance tol;
    DirectionScan ok{0.5, std::nullopt}, mid{5.0, std::nullopt}, bad{20.0, std::nullopt};
    CHECK(classify(ok, bad, tol) == Status::Holds);
    CHECK(classify(bad, ok, tol) == Status::HoldsReversed);
    CHECK(classify(bad, bad, tol) == Status::Violated);
    CHECK(classify(mid, bad, tol) == Status::Inconclusive);
}

}
