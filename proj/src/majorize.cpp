#include "gmorder/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gmorder/errors.hpp"

namespace gmorder {

namespace {

void require_same_length(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw DomainError("vectors must have equal length");
}

std::vector<double> sorted(std::span<const double> v, bool descending) {
    std::vector<double> out(v.begin(), v.end());
    if (descending) {
        std::stable_sort(out.begin(), out.end(), std::greater<>());
    } else {
        std::stable_sort(out.begin(), out.end());
    }
    return out;
}

// True iff every prefix sum of a is >= the matching prefix sum of b (within slack).
bool prefix_dominates(const std::vector<double>& a, const std::vector<double>& b) {
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa - sb < -kMajorizationSlack) return false;
    }
    return true;
}

}  // namespace

const char* to_string(Cone c) { return c == Cone::D ? "D+" : "E+"; }

Cone opposite(Cone c) { return c == Cone::D ? Cone::E : Cone::D; }

bool majorizes(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    const auto xs = sorted(x, true);
    const auto ys = sorted(y, true);
    double tx = 0.0;
    double ty = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        tx += xs[i];
        ty += ys[i];
    }
    return std::fabs(tx - ty) <= kMajorizationSlack && prefix_dominates(xs, ys);
}

bool weak_supermajorizes(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    return prefix_dominates(sorted(y, false), sorted(x, false));
}

bool weak_submajorizes(std::span<const double> x, std::span<const double> y) {
    require_same_length(x, y);
    // Tail sums of the increasing arrangement are prefix sums of the decreasing one.
    return prefix_dominates(sorted(x, true), sorted(y, true));
}

bool in_D_plus(std::span<const double> x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0)) return false;
        if (i > 0 && x[i] > x[i - 1]) return false;
    }
    return true;
}

bool in_E_plus(std::span<const double> x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0)) return false;
        if (i > 0 && x[i] < x[i - 1]) return false;
    }
    return true;
}

bool in_cone(std::span<const double> x, Cone c) {
    return c == Cone::D ? in_D_plus(x) : in_E_plus(x);
}

ParamVector draw_in_cone(std::size_t n, double lo, double hi, Cone c, Rng& rng) {
    ParamVector v(n);
    for (auto& e : v) e = rng.uniform(lo, hi);
    if (c == Cone::D) {
        std::sort(v.begin(), v.end(), std::greater<>());
    } else {
        std::sort(v.begin(), v.end());
    }
    return v;
}

ParamVector robin_hood(const ParamVector& x, Cone c, Rng& rng, int transfers) {
    ParamVector y = x;
    const std::size_t n = y.size();
    if (n < 2) return y;
    if (c == Cone::E) std::reverse(y.begin(), y.end());
    // y is nonincreasing here; move mass from a richer index i to a poorer j > i.
    for (int t = 0; t < transfers; ++t) {
        std::size_t i = rng.below(n);
        std::size_t j = rng.below(n - 1);
        if (j >= i) ++j;
        if (i > j) std::swap(i, j);
        double cap = 0.5 * (y[i] - y[j]);
        if (i + 1 != j) {
            cap = std::min(cap, y[i] - y[i + 1]);
            cap = std::min(cap, y[j - 1] - y[j]);
        }
        if (!(cap > 0.0)) continue;
        const double d = rng.uniform(0.0, cap);
        y[i] -= d;
        y[j] += d;
    }
    if (c == Cone::E) std::reverse(y.begin(), y.end());
    return y;
}

const char* to_string(SchurKind k) {
    switch (k) {
        case SchurKind::Convex: return "schur-convex";
        case SchurKind::Concave: return "schur-concave";
        case SchurKind::Both: return "schur-constant";
        case SchurKind::Neither: return "neither";
        case SchurKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

SchurVerdict check_schur(const std::function<double(std::span<const double>)>& f, Cone region,
                         const SchurProbe& probe) {
    SchurVerdict out;
    Rng rng(probe.seed);
    double worst_convex = 0.0;
    double worst_concave = 0.0;
    try {
        for (int t = 0; t < probe.trials; ++t) {
            const ParamVector x = draw_in_cone(probe.n, probe.lo, probe.hi, region, rng);
            const ParamVector y = robin_hood(x, region, rng);
            const double fx = f(x);
            const double fy = f(y);
            if (!std::isfinite(fx) || !std::isfinite(fy)) {
                out.kind = SchurKind::Inconclusive;
                return out;
            }
            ++out.pairs;
            const double slack = 10.0 * (probe.tol_abs +
                                         probe.tol_rel * std::max(std::fabs(fx), std::fabs(fy)));
            const double d = fx - fy;
            if (d < -slack && -d > worst_convex) {
                worst_convex = -d;
                out.convex_counter = SchurWitness{x, y, fx, fy};
            }
            if (d > slack && d > worst_concave) {
                worst_concave = d;
                out.concave_counter = SchurWitness{x, y, fx, fy};
            }
        }
    } catch (const std::exception&) {
        out.kind = SchurKind::Inconclusive;
        return out;
    }
    const bool convex = !out.convex_counter;
    const bool concave = !out.concave_counter;
    if (convex && concave) {
        out.kind = SchurKind::Both;
    } else if (convex) {
        out.kind = SchurKind::Convex;
    } else if (concave) {
        out.kind = SchurKind::Concave;
    } else {
        out.kind = SchurKind::Neither;
    }
    return out;
}

}  // namespace gmorder
