#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gmorder/verdict.hpp"

namespace gmorder {

enum class Family { Independence, Clayton, Gumbel, Custom };

const char* to_string(Family f);

// Smallest u passed to phi; u = 0 itself is handled as a grounded copula.
inline constexpr double kUClamp = 1e-300;

// Archimedean generator psi with its inverse phi. Immutable once built.
class Generator {
public:
    using Fn = std::function<double(double)>;

    static Generator independence();
    static Generator clayton(double theta);
    static Generator gumbel(double theta);
    // User-supplied pair; phi must be the right-continuous inverse of psi.
    static Generator custom(std::string name, Fn psi, Fn phi);

    Family family() const { return family_; }
    double theta() const { return theta_; }
    std::string name() const;

    double psi(double t) const;
    double phi(double u) const;
    double log_psi(double t) const;
    // phi evaluated from log(u), accurate when u is close to 1.
    double phi_from_log(double log_u) const;

private:
    Generator(Family f, double theta) : family_(f), theta_(theta) {}

    Family family_;
    double theta_;
    std::string custom_name_;
    Fn custom_psi_;
    Fn custom_phi_;
};

using GeneratorSpec = Generator;

// psi(sum phi(u_i)); any u_i = 0 gives 0.
double copula_value(const Generator& g, std::span<const double> u);

// n points log-spaced on [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t n);
// Default predicate grid: 200 log-spaced points on [1e-6, 50].
std::vector<double> default_t_grid();

PredicateVerdict is_log_convex(const Generator& g, std::span<const double> grid,
                               const Tolerance& tol = {});
PredicateVerdict is_log_convex(const Generator& g);

PredicateVerdict is_d_monotone(const Generator& g, int d, std::span<const double> grid,
                               const Tolerance& tol = {});
PredicateVerdict is_d_monotone(const Generator& g, int d);

// f = phi2 ∘ psi1 checked for f(x+y) >= f(x) + f(y) over grid × grid.
PredicateVerdict super_additive_compose(const Generator& g1, const Generator& g2,
                                        std::span<const double> grid, const Tolerance& tol = {});
PredicateVerdict super_additive_compose(const Generator& g1, const Generator& g2);

// Product grid of u-vectors in dimension n with the given 1-D levels.
std::vector<std::vector<double>> product_u_grid(std::span<const double> levels, std::size_t n);
// Levels k/m for k = 1..m.
std::vector<double> uniform_levels(std::size_t m);

// C_{g1}(u) <= C_{g2}(u) on every u of the grid.
PredicateVerdict copula_dominates(const Generator& g1, const Generator& g2,
                                  const std::vector<std::vector<double>>& ugrid,
                                  const Tolerance& tol = {});

}  // namespace gmorder
