#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "gmorder/errors.hpp"
#include "gmorder/extremes.hpp"
#include "gmorder/rng.hpp"

using namespace gmorder;
using std::numbers::e;

namespace {

std::vector<GMParams> random_members(Rng& rng, std::size_t n) {
    std::vector<GMParams> m;
    for (std::size_t i = 0; i < n; ++i) {
        m.emplace_back(rng.uniform(0.05, 5), rng.uniform(0.05, 2), rng.uniform(0.05, 5));
    }
    return m;
}

std::vector<double> random_p(Rng& rng, std::size_t n) {
    std::vector<double> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(rng.uniform(0.2, 1.0));
    return p;
}

double integrate(const std::function<double(double)>& f, double lo, double hi) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12);
}

}  // namespace

TEST_SUITE("extremes") {

TEST_CASE("population validation") {
    CHECK_THROWS_AS(PopulationSpec({}), DomainError);
    CHECK_THROWS_AS(PopulationSpec({GMParams(1, 1, 1)}, std::vector<double>{0.5, 0.5}), DomainError);
    CHECK_THROWS_AS(PopulationSpec({GMParams(1, 1, 1)}, std::vector<double>{0.0}), DomainError);
    CHECK_THROWS_AS(PopulationSpec({GMParams(1, 1, 1)}, std::vector<double>{0.5}, Generator::clayton(1)),
                    DomainError);
    CHECK(PopulationSpec({GMParams(1, 1, 1)}).regime() == Regime::Independent);
    CHECK(PopulationSpec({GMParams(1, 1, 1)}, std::nullopt, Generator::clayton(1)).regime() ==
          Regime::Dependent);
}

TEST_CASE("minimum boundaries and closed forms") {
    const PopulationSpec two({GMParams(1, 1, 0), GMParams(1, 1, 0)});
    CHECK(min_survival(two, 0.0) == 1.0);
    CHECK(min_survival(two, 1.0) == doctest::Approx(0.0321750601216773950).epsilon(1e-14));
    CHECK(min_survival(two, 1.0) == doctest::Approx(std::exp(-2 * (e - 1))).epsilon(1e-14));
    const PopulationSpec ce({GMParams(0.1, 0.2, 0.6), GMParams(20, 0.1, 0.5)});
    CHECK(min_hazard(ce, 0.0) == doctest::Approx(21.2).epsilon(1e-15));
    CHECK(min_density(ce, 0.0) == doctest::Approx(21.2).epsilon(1e-15));
    const PopulationSpec dep({GMParams(1, 1, 1), GMParams(2, 0.5, 1)}, std::nullopt,
                             Generator::clayton(2));
    CHECK(min_survival(dep, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(max_cdf(dep, 0.0) == 0.0);
    CHECK(max_cdf(ce, 0.0) == 0.0);
}

TEST_CASE("single member reductions") {
    const GMParams g(0.4, 0.9, 0.3);
    const PopulationSpec one({g});
    for (double x : {0.0, 0.3, 1.0, 4.0}) {
        CHECK(min_hazard(one, x) == doctest::Approx(hazard(g, x)).epsilon(1e-14));
        CHECK(min_density(one, x) == doctest::Approx(pdf(g, x)).epsilon(1e-14));
        CHECK(max_density(one, x) == doctest::Approx(pdf(g, x)).epsilon(1e-14));
        CHECK(max_cdf(one, x) == doctest::Approx(cdf(g, x)).epsilon(1e-14));
    }
}

TEST_CASE("shock survival") {
    const GMParams g(1, 1, 1);
    CHECK(shock_survival(g, 0.5, 1.0) == doctest::Approx(0.0329940179226562685).epsilon(1e-14));
    CHECK(shock_survival(g, 0.5, 1.0) == doctest::Approx(0.5 * std::exp(-e)).epsilon(1e-14));
    CHECK(shock_survival(g, 1.0, 0.7) == doctest::Approx(survival(g, 0.7)).epsilon(1e-15));
    CHECK(shock_survival(g, 0.3, 0.0) == 1.0);
    CHECK(shock_survival(g, 0.3, 1e-12) == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("shock atoms") {
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 2 + rng.below(4);
        const auto p = random_p(rng, n);
        const PopulationSpec pop(random_members(rng, n), p);
        double prod = 1, comp = 1;
        for (double v : p) {
            prod *= v;
            comp *= 1 - v;
        }
        CHECK(min_survival(pop, 0.0) == doctest::Approx(prod).epsilon(1e-15));
        CHECK(max_cdf(pop, 0.0) == doctest::Approx(comp).epsilon(1e-15));
        CHECK(atom_at_zero(pop, Extreme::Min) == doctest::Approx(1 - prod).epsilon(1e-15));
        CHECK(atom_at_zero(pop, Extreme::Max) == doctest::Approx(comp).epsilon(1e-15));
    }
}

TEST_CASE("independence copula matches products") {
    Rng rng(9);
    for (int k = 0; k < 30; ++k) {
        const auto m = random_members(rng, 2 + rng.below(5));
        const PopulationSpec ind(m), dep(m, std::nullopt, Generator::independence());
        for (double x : {0.05, 0.4, 1.3}) {
            CHECK(std::abs(min_survival(ind, x) - min_survival(dep, x)) <= 1e-12);
            CHECK(std::abs(max_cdf(ind, x) - max_cdf(dep, x)) <= 1e-12);
        }
    }
}

TEST_CASE("minimum hazard is minus the log-survival slope") {
    Rng rng(21);
    for (int k = 0; k < 10; ++k) {
        const PopulationSpec pop(random_members(rng, 3));
        for (double x : {0.2, 0.7, 1.5}) {
            const double h = 1e-5;
            const double fd = -(std::log(min_survival(pop, x + h)) - std::log(min_survival(pop, x - h))) / (2 * h);
            CHECK(min_hazard(pop, x) == doctest::Approx(fd).epsilon(1e-7));
        }
    }
}

TEST_CASE("densities integrate to the continuous mass") {
    Rng rng(33);
    std::vector<PopulationSpec> pops;
    pops.emplace_back(random_members(rng, 3));
    pops.emplace_back(random_members(rng, 2), random_p(rng, 2));
    pops.emplace_back(random_members(rng, 3), std::nullopt, Generator::clayton(1.5));
    pops.emplace_back(random_members(rng, 2), std::nullopt, Generator::gumbel(2));
    for (const auto& pop : pops) {
        const double hi_min = upper_support(pop, Extreme::Min);
        const double hi_max = upper_support(pop, Extreme::Max);
        const double mmin = integrate([&](double x) { return min_density(pop, x); }, 0.0, hi_min);
        const double mmax = integrate([&](double x) { return max_density(pop, x); }, 0.0, hi_max);
        CHECK(mmin == doctest::Approx(1 - atom_at_zero(pop, Extreme::Min)).epsilon(1e-6));
        CHECK(mmax == doctest::Approx(1 - atom_at_zero(pop, Extreme::Max)).epsilon(1e-6));
        // Partial mass matches the curve itself.
        const double x1 = 0.3 * hi_max;
        const double part = integrate([&](double x) { return max_density(pop, x); }, 0.0, x1);
        CHECK(part == doctest::Approx(max_cdf(pop, x1) - max_cdf(pop, 0.0)).epsilon(1e-6));
    }
}

TEST_CASE("curves and support") {
    const PopulationSpec pop({GMParams(1, 1, 1), GMParams(0.5, 0.2, 0.1)});
    const auto c = make_curve(pop, CurveKind::MaxCdf);
    CHECK(c.kind == CurveKind::MaxCdf);
    CHECK(c(1.0) == max_cdf(pop, 1.0));
    const double hi = upper_support(pop, Extreme::Max);
    CHECK(1 - max_cdf(pop, hi) <= 1e-12);
    CHECK(1 - max_cdf(pop, hi * 0.9) > 1e-12);
}

}
