#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "gmorder/rng.hpp"

namespace gmorder {

using ParamVector = std::vector<double>;

inline constexpr double kMajorizationSlack = 1e-12;

enum class Cone { D, E };

const char* to_string(Cone c);
Cone opposite(Cone c);

// x m≻ y: sorted-decreasing partial sums of x dominate those of y, equal totals.
bool majorizes(std::span<const double> x, std::span<const double> y);
// x ⪰^w y: increasing-order partial sums of x are <= those of y.
bool weak_supermajorizes(std::span<const double> x, std::span<const double> y);
// x ⪰_w y: tail sums of the increasing arrangement of x are >= those of y.
bool weak_submajorizes(std::span<const double> x, std::span<const double> y);

bool in_D_plus(std::span<const double> x);
bool in_E_plus(std::span<const double> x);
bool in_cone(std::span<const double> x, Cone c);

// Sorted uniform draw on [lo, hi] arranged for the cone.
ParamVector draw_in_cone(std::size_t n, double lo, double hi, Cone c, Rng& rng);

// Random Robin-Hood transfers from larger to smaller entries that keep the
// arrangement of the cone. The result y satisfies x m≻ y and stays in the cone.
ParamVector robin_hood(const ParamVector& x, Cone c, Rng& rng, int transfers = 6);

enum class SchurKind { Convex, Concave, Both, Neither, Inconclusive };

const char* to_string(SchurKind k);

struct SchurWitness {
    ParamVector x;
    ParamVector y;
    double fx = 0.0;
    double fy = 0.0;
};

struct SchurVerdict {
    SchurKind kind = SchurKind::Inconclusive;
    std::optional<SchurWitness> convex_counter;   // x m≻ y with f(x) < f(y)
    std::optional<SchurWitness> concave_counter;  // x m≻ y with f(x) > f(y)
    int pairs = 0;
};

struct SchurProbe {
    std::size_t n = 3;
    int trials = 200;
    std::uint64_t seed = 1;
    double lo = 0.05;
    double hi = 20.0;
    double tol_abs = 1e-9;
    double tol_rel = 1e-9;
};

SchurVerdict check_schur(const std::function<double(std::span<const double>)>& f, Cone region,
                         const SchurProbe& probe = {});

}  // namespace gmorder
