#include "gmorder/stochorder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gmorder/errors.hpp"

namespace gmorder {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Sampled {
    std::vector<double> x;
    std::vector<double> a;
    std::vector<double> b;
    std::string error;
};

Sampled sample_pair(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                    double (*transform)(const ExtremeCurve&, double)) {
    Sampled s;
    s.x = grid.values();
    s.a.resize(s.x.size());
    s.b.resize(s.x.size());
    try {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            s.a[i] = transform(A, s.x[i]);
            s.b[i] = transform(B, s.x[i]);
        }
    } catch (const EvaluationError& e) {
        s.error = e.what();
    }
    return s;
}

double complement_of(const ExtremeCurve& c, double x) {
    return c.complement ? c.complement(x) : 1.0 - c(x);
}
double as_cdf(const ExtremeCurve& c, double x) {
    return c.kind == CurveKind::MinSurvival ? complement_of(c, x) : c(x);
}
double as_survival(const ExtremeCurve& c, double x) {
    return c.kind == CurveKind::MaxCdf ? complement_of(c, x) : c(x);
}
double as_is(const ExtremeCurve& c, double x) { return c(x); }

void require_kind(const ExtremeCurve& c, std::initializer_list<CurveKind> allowed,
                  const char* relation) {
    for (CurveKind k : allowed) {
        if (c.kind == k) return;
    }
    throw DomainError(std::string(relation) + " check cannot use a " + to_string(c.kind) +
                      " curve");
}

OrderingVerdict inconclusive(Relation rel, const Tolerance& tol, std::string why) {
    OrderingVerdict v;
    v.relation = rel;
    v.tol = tol;
    v.status = Status::Inconclusive;
    v.detail = std::move(why);
    return v;
}

void fill(OrderingVerdict& v, const DirectionScan& fwd, const DirectionScan& rev) {
    v.witness.reset();
    v.reverse_witness.reset();
    v.forward_holds = fwd.worst <= 1.0;
    v.reverse_holds = rev.worst <= 1.0;
    v.forward_violated = fwd.worst > v.tol.violation_factor;
    v.reverse_violated = rev.worst > v.tol.violation_factor;
    if (!v.forward_holds) v.witness = fwd.witness;
    if (!v.reverse_holds) v.reverse_witness = rev.witness;
    v.status = classify(fwd, rev, v.tol);
}

// Ratio num/den with trimming of points where either side is below the floor.
std::vector<double> trimmed_ratio(const std::vector<double>& x, const std::vector<double>& num,
                                  const std::vector<double>& den, std::vector<Interval>& trimmed) {
    std::vector<double> r(x.size(), kNaN);
    bool open = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const bool cut = !(num[i] >= kTrimFloor) || !(den[i] >= kTrimFloor);
        if (cut) {
            if (!open) trimmed.push_back(Interval{x[i], x[i]});
            trimmed.back().hi = x[i];
            open = true;
        } else {
            r[i] = num[i] / den[i];
            open = false;
        }
    }
    return r;
}

bool any_finite(const std::vector<double>& r) {
    return std::any_of(r.begin(), r.end(), [](double v) { return !std::isnan(v); });
}

OrderingVerdict ratio_check(Relation rel, const Sampled& s, bool a_over_b, const Tolerance& tol,
                            const char* a_name, const char* b_name, const char* diag_name) {
    if (!s.error.empty()) return inconclusive(rel, tol, s.error);
    OrderingVerdict v;
    v.relation = rel;
    v.tol = tol;
    const auto r = a_over_b ? trimmed_ratio(s.x, s.a, s.b, v.trimmed)
                            : trimmed_ratio(s.x, s.b, s.a, v.trimmed);
    v.trace = Trace{s.x, s.a, s.b, r, a_name, b_name, diag_name};
    if (!any_finite(r)) {
        v.status = Status::Inconclusive;
        v.detail = "every grid point was trimmed";
        return v;
    }
    fill(v, scan_monotone(s.x, r, true, tol), scan_monotone(s.x, r, false, tol));
    return v;
}

}  // namespace

const char* to_string(Relation r) {
    switch (r) {
        case Relation::St: return "st";
        case Relation::Hr: return "hr";
        case Relation::Rh: return "rh";
        case Relation::Lr: return "lr";
        case Relation::RHr: return "R-hr";
    }
    return "?";
}

std::optional<Relation> parse_relation(const std::string& s) {
    if (s == "st") return Relation::St;
    if (s == "hr") return Relation::Hr;
    if (s == "rh") return Relation::Rh;
    if (s == "lr") return Relation::Lr;
    if (s == "R-hr" || s == "rhr" || s == "R-HR") return Relation::RHr;
    return std::nullopt;
}

void Grid::validate() const {
    if (!(x_min >= 0.0) || !std::isfinite(x_min)) throw DomainError("grid x_min must be >= 0");
    if (!(x_max > x_min) || !std::isfinite(x_max)) throw DomainError("grid x_max must exceed x_min");
    if (points < 16) throw DomainError("grid needs at least 16 points");
}

std::vector<double> Grid::values() const {
    validate();
    std::vector<double> v(points);
    if (spacing == Spacing::Linear) {
        const double w = x_max - x_min;
        for (std::size_t i = 0; i < points; ++i) {
            v[i] = x_min + w * static_cast<double>(i) / static_cast<double>(points - 1);
        }
        v.back() = x_max;
        return v;
    }
    if (x_min > 0.0) return log_grid(x_min, x_max, points);
    const auto tail = log_grid(x_max * 1e-6, x_max, points - 1);
    v[0] = 0.0;
    std::copy(tail.begin(), tail.end(), v.begin() + 1);
    return v;
}

Grid default_grid(double x_hi) { return Grid{0.0, x_hi, 2000, Spacing::Linear}; }

DirectionScan scan_dominance(std::span<const double> x, std::span<const double> a,
                             std::span<const double> b, const Tolerance& tol) {
    DirectionScan out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double scale = std::max(std::fabs(a[i]), std::fabs(b[i]));
        const double excess = (b[i] - a[i]) / tol.bound(scale);
        if (excess > out.worst) {
            out.worst = excess;
            out.witness = Witness{x[i], x[i], a[i], b[i]};
        }
    }
    return out;
}

DirectionScan scan_monotone(std::span<const double> x, std::span<const double> r,
                            bool increasing, const Tolerance& tol) {
    DirectionScan out;
    bool have = false;
    double extreme = 0.0;
    double x_extreme = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::isnan(r[i])) continue;
        if (!have) {
            extreme = r[i];
            x_extreme = x[i];
            have = true;
            continue;
        }
        const double drop = increasing ? extreme - r[i] : r[i] - extreme;
        const double scale = std::max(std::fabs(extreme), std::fabs(r[i]));
        const double excess = drop / tol.bound(scale);
        if (excess > out.worst) {
            out.worst = excess;
            out.witness = Witness{x[i], x_extreme, extreme, r[i]};
        }
        if (increasing ? r[i] > extreme : r[i] < extreme) {
            extreme = r[i];
            x_extreme = x[i];
        }
    }
    return out;
}

Status classify(const DirectionScan& forward, const DirectionScan& reverse, const Tolerance& tol) {
    if (forward.worst <= 1.0) return Status::Holds;
    if (reverse.worst <= 1.0) return Status::HoldsReversed;
    if (forward.worst > tol.violation_factor && reverse.worst > tol.violation_factor) {
        return Status::Violated;
    }
    return Status::Inconclusive;
}

OrderingVerdict check_st(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                         const Tolerance& tol) {
    require_kind(A, {CurveKind::MinSurvival, CurveKind::MaxCdf}, "st");
    require_kind(B, {CurveKind::MinSurvival, CurveKind::MaxCdf}, "st");
    const Sampled s = sample_pair(A, B, grid, as_cdf);
    if (!s.error.empty()) return inconclusive(Relation::St, tol, s.error);
    OrderingVerdict v;
    v.relation = Relation::St;
    v.tol = tol;
    std::vector<double> diff(s.x.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = s.a[i] - s.b[i];
    v.trace = Trace{s.x, s.a, s.b, diff, "F_A", "F_B", "F_A-F_B"};
    // A <=st B iff F_A >= F_B.
    fill(v, scan_dominance(s.x, s.a, s.b, tol), scan_dominance(s.x, s.b, s.a, tol));
    return v;
}

OrderingVerdict check_hr(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                         const Tolerance& tol, const ExtremeCurve* hazard_a,
                         const ExtremeCurve* hazard_b) {
    require_kind(A, {CurveKind::MinSurvival, CurveKind::MaxCdf}, "hr");
    require_kind(B, {CurveKind::MinSurvival, CurveKind::MaxCdf}, "hr");
    const Sampled s = sample_pair(A, B, grid, as_survival);
    OrderingVerdict v = ratio_check(Relation::Hr, s, false, tol, "S_A", "S_B", "S_B/S_A");
    if (!s.error.empty() || v.trace.x.empty()) return v;

    // With an atom at zero both survivals equal 1 just below 0, so the ratio
    // starts from 1 and the jump to S_B(0)/S_A(0) is part of the verdict.
    const bool atoms = A.atom_at_zero > 0.0 || B.atom_at_zero > 0.0;
    if (atoms && s.x.front() == 0.0 && any_finite(v.trace.diag)) {
        v.continuous = OrderingVerdict::ContinuousPart{v.status, v.forward_holds, v.reverse_holds};
        std::vector<double> x{0.0};
        std::vector<double> r{1.0};
        x.insert(x.end(), s.x.begin(), s.x.end());
        r.insert(r.end(), v.trace.diag.begin(), v.trace.diag.end());
        fill(v, scan_monotone(x, r, true, tol), scan_monotone(x, r, false, tol));
    }

    if (hazard_a && hazard_b) {
        try {
            std::vector<double> ha(s.x.size());
            std::vector<double> hb(s.x.size());
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                ha[i] = (*hazard_a)(s.x[i]);
                hb[i] = (*hazard_b)(s.x[i]);
            }
            // A <=hr B iff r_A >= r_B.
            v.hazard_crosscheck = classify(scan_dominance(s.x, ha, hb, tol),
                                           scan_dominance(s.x, hb, ha, tol), tol);
        } catch (const EvaluationError&) {
            v.hazard_crosscheck = Status::Inconclusive;
        }
    }
    return v;
}

OrderingVerdict check_rh(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                         const Tolerance& tol) {
    require_kind(A, {CurveKind::MinSurvival, CurveKind::MaxCdf}, "rh");
    require_kind(B, {CurveKind::MinSurvival, CurveKind::MaxCdf}, "rh");
    return ratio_check(Relation::Rh, sample_pair(A, B, grid, as_cdf), false, tol, "F_A", "F_B",
                       "F_B/F_A");
}

OrderingVerdict check_lr(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                         const Tolerance& tol) {
    require_kind(A, {CurveKind::MinDensity, CurveKind::MaxDensity}, "lr");
    require_kind(B, {CurveKind::MinDensity, CurveKind::MaxDensity}, "lr");
    return ratio_check(Relation::Lr, sample_pair(A, B, grid, as_is), false, tol, "f_A", "f_B",
                       "f_B/f_A");
}

OrderingVerdict check_ageing_faster(const ExtremeCurve& A, const ExtremeCurve& B,
                                    const Grid& grid, const Tolerance& tol) {
    require_kind(A, {CurveKind::MinHazard}, "R-hr");
    require_kind(B, {CurveKind::MinHazard}, "R-hr");
    return ratio_check(Relation::RHr, sample_pair(A, B, grid, as_is), true, tol, "r_A", "r_B",
                       "r_A/r_B");
}

OrderingVerdict check_relation(Relation rel, const PopulationSpec& A, const PopulationSpec& B,
                               Extreme e, const Grid& grid, const Tolerance& tol) {
    const CurveKind dist = e == Extreme::Min ? CurveKind::MinSurvival : CurveKind::MaxCdf;
    switch (rel) {
        case Relation::St: return check_st(make_curve(A, dist), make_curve(B, dist), grid, tol);
        case Relation::Hr: {
            if (e == Extreme::Min && A.regime() != Regime::Dependent &&
                B.regime() != Regime::Dependent) {
                const auto ha = make_curve(A, CurveKind::MinHazard);
                const auto hb = make_curve(B, CurveKind::MinHazard);
                return check_hr(make_curve(A, dist), make_curve(B, dist), grid, tol, &ha, &hb);
            }
            return check_hr(make_curve(A, dist), make_curve(B, dist), grid, tol);
        }
        case Relation::Rh: return check_rh(make_curve(A, dist), make_curve(B, dist), grid, tol);
        case Relation::Lr: {
            const CurveKind dens = e == Extreme::Min ? CurveKind::MinDensity : CurveKind::MaxDensity;
            return check_lr(make_curve(A, dens), make_curve(B, dens), grid, tol);
        }
        case Relation::RHr:
            if (e != Extreme::Min) throw DomainError("R-hr is implemented for minima only");
            return check_ageing_faster(make_curve(A, CurveKind::MinHazard),
                                       make_curve(B, CurveKind::MinHazard), grid, tol);
    }
    throw DomainError("unknown relation");
}

double comparison_upper(const PopulationSpec& A, const PopulationSpec& B, Extreme e) {
    return std::max(upper_support(A, e), upper_support(B, e));
}

}  // namespace gmorder
