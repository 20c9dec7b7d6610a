#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gmorder/extremes.hpp"
#include "gmorder/verdict.hpp"

namespace gmorder {

enum class Relation { St, Hr, Rh, Lr, RHr };

const char* to_string(Relation r);
std::optional<Relation> parse_relation(const std::string& s);

enum class Spacing { Linear, Log };

struct Grid {
    double x_min = 0.0;
    double x_max = 1.0;
    std::size_t points = 2000;
    Spacing spacing = Spacing::Linear;

    void validate() const;
    // Strictly increasing evaluation points. A log grid starting at 0 keeps 0
    // and spaces the rest from x_max * 1e-6.
    std::vector<double> values() const;
};

// Linear grid with the default 2000 points on [0, x_hi].
Grid default_grid(double x_hi);

inline constexpr double kTrimFloor = 1e-290;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

// Sampled curves behind a verdict, kept for CSV emission. diag is NaN on
// trimmed points.
struct Trace {
    std::vector<double> x;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> diag;
    std::string a_name;
    std::string b_name;
    std::string diag_name;
};

// Verdict on "A <=_rel B". HOLDS when that direction holds, HOLDS_REVERSED
// when only B <=_rel A holds, VIOLATED when both fail beyond 10x tolerance.
struct OrderingVerdict {
    Relation relation = Relation::St;
    Status status = Status::Inconclusive;
    bool forward_holds = false;
    bool reverse_holds = false;
    bool forward_violated = false;  // fails by more than 10x tolerance
    bool reverse_violated = false;
    std::optional<Witness> witness;          // worst failure of A <= B
    std::optional<Witness> reverse_witness;  // worst failure of B <= A
    Tolerance tol;
    std::vector<Interval> trimmed;
    std::string detail;
    // Hazard order with atoms at zero: verdict on x >= 0 alone, without the
    // jump from the common value 1 just below zero.
    struct ContinuousPart {
        Status status = Status::Inconclusive;
        bool forward_holds = false;
        bool reverse_holds = false;
    };
    std::optional<ContinuousPart> continuous;
    // Hazard order cross-checked by pointwise hazard dominance when available.
    std::optional<Status> hazard_crosscheck;
    Trace trace;
};

// Two-sided classification helpers on sampled series.
struct DirectionScan {
    double worst = 0.0;  // largest shortfall in units of the tolerance band
    std::optional<Witness> witness;
};

// Shortfall of "a >= b" at each point.
DirectionScan scan_dominance(std::span<const double> x, std::span<const double> a,
                             std::span<const double> b, const Tolerance& tol);
// Shortfall of "r nondecreasing" (or nonincreasing) against the running extreme.
// Points with NaN ratios are skipped.
DirectionScan scan_monotone(std::span<const double> x, std::span<const double> r,
                            bool increasing, const Tolerance& tol);

Status classify(const DirectionScan& forward, const DirectionScan& reverse, const Tolerance& tol);

// A, B must be MinSurvival or MaxCdf curves (converted to cdfs).
OrderingVerdict check_st(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                         const Tolerance& tol = {});
// A, B must be MinSurvival or MaxCdf curves (converted to survivals). Hazard
// curves, when given, add the pointwise-dominance cross-check.
OrderingVerdict check_hr(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                         const Tolerance& tol = {}, const ExtremeCurve* hazard_a = nullptr,
                         const ExtremeCurve* hazard_b = nullptr);
OrderingVerdict check_rh(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                         const Tolerance& tol = {});
// Density curves.
OrderingVerdict check_lr(const ExtremeCurve& A, const ExtremeCurve& B, const Grid& grid,
                         const Tolerance& tol = {});
// Hazard curves; A <=_{R-hr} B iff r_A / r_B is nondecreasing.
OrderingVerdict check_ageing_faster(const ExtremeCurve& A, const ExtremeCurve& B,
                                    const Grid& grid, const Tolerance& tol = {});

// Builds the curves the relation needs for the chosen extreme and checks them.
OrderingVerdict check_relation(Relation rel, const PopulationSpec& A, const PopulationSpec& B,
                               Extreme e, const Grid& grid, const Tolerance& tol = {});

// Default x_hi for comparing A and B on extreme e.
double comparison_upper(const PopulationSpec& A, const PopulationSpec& B, Extreme e);

}  // namespace gmorder
