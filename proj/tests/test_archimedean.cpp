#include <doctest.h>

#include <cmath>
#include <vector>

#include "gmorder/archimedean.hpp"
#include "gmorder/errors.hpp"

using namespace gmorder;
using V = std::vector<double>;

TEST_SUITE("archimedean") {

TEST_CASE("copula values") {
    CHECK(copula_value(Generator::independence(), V{0.5, 0.5}) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(copula_value(Generator::clayton(2), V{0.5, 0.5}) ==
          doctest::Approx(0.377964473009227227).epsilon(1e-14));
    for (const auto& g : {Generator::independence(), Generator::clayton(3), Generator::gumbel(2)}) {
        CHECK(copula_value(g, V{0.3, 0.0, 0.9}) == 0.0);
        CHECK(copula_value(g, V{0.3, 1.0}) == doctest::Approx(0.3).epsilon(1e-12));
        CHECK(g.psi(0.0) == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(copula_value(Generator::clayton(1), V{0.5, 1.5}), DomainError);
    CHECK_THROWS_AS(Generator::clayton(0), DomainError);
    CHECK_THROWS_AS(Generator::gumbel(0.5), DomainError);
}

TEST_CASE("inverse pairs and log forms") {
    for (const auto& g : {Generator::independence(), Generator::clayton(0.5), Generator::gumbel(1.7)}) {
        for (double t : {1e-6, 0.01, 0.5, 3.0, 40.0}) {
            CHECK(g.phi(g.psi(t)) == doctest::Approx(t).epsilon(1e-9));
            CHECK(g.log_psi(t) == doctest::Approx(std::log(g.psi(t))).epsilon(1e-12));
            CHECK(g.phi_from_log(g.log_psi(t)) == doctest::Approx(t).epsilon(1e-9));
        }
    }
}

TEST_CASE("clayton near zero approaches independence") {
    const auto c = Generator::clayton(1e-6);
    for (const auto& u : product_u_grid(uniform_levels(10), 2)) {
        CHECK(std::abs(copula_value(c, u) - u[0] * u[1]) < 1e-4);
    }
}

TEST_CASE("log convexity") {
    CHECK(is_log_convex(Generator::independence()).holds());
    CHECK(is_log_convex(Generator::clayton(2)).holds());
    CHECK(is_log_convex(Generator::gumbel(1)).holds());
    const auto gauss = Generator::custom(
        "gauss", [](double t) { return std::exp(-t * t); },
        [](double u) { return std::sqrt(-std::log(u)); });
    const auto v = is_log_convex(gauss, log_grid(1e-3, 5, 200));
    CHECK(v.status == Status::Violated);
    CHECK(v.witness.has_value());
}

TEST_CASE("d-monotonicity") {
    CHECK(is_d_monotone(Generator::independence(), 5).holds());
    CHECK(is_d_monotone(Generator::clayton(1), 3).holds());
    const auto kink = Generator::custom(
        "kink", [](double t) { return std::max(0.0, 1.0 - t); },
        [](double u) { return 1.0 - u; });
    V grid;
    for (int i = 1; i <= 400; ++i) grid.push_back(i * 0.005);
    const auto v = is_d_monotone(kink, 3, grid);
    CHECK_FALSE(v.holds());
    REQUIRE(v.witness.has_value());
    CHECK(std::abs(v.witness->x - 1.0) < 0.05);
}

TEST_CASE("super-additive composition") {
    CHECK(super_additive_compose(Generator::clayton(2), Generator::clayton(2)).holds());
    CHECK(super_additive_compose(Generator::clayton(1), Generator::clayton(2)).holds());
    CHECK(super_additive_compose(Generator::gumbel(1), Generator::clayton(1)).holds());
    const auto bad = super_additive_compose(Generator::clayton(2), Generator::clayton(1));
    CHECK(bad.status == Status::Violated);
    CHECK(bad.witness.has_value());
}

TEST_CASE("copula dominance") {
    const auto grid = product_u_grid(uniform_levels(50), 2);
    CHECK(copula_dominates(Generator::clayton(2), Generator::clayton(2), grid).holds());
    CHECK(copula_dominates(Generator::clayton(1), Generator::clayton(2), grid).holds());
    const auto bad = copula_dominates(Generator::clayton(2), Generator::clayton(1), grid);
    CHECK(bad.status == Status::Violated);
    CHECK(bad.witness.has_value());
}

}
