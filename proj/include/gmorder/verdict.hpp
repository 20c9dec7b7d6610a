#pragma once

#include <optional>
#include <string>

namespace gmorder {

enum class Status { Holds, HoldsReversed, Violated, Inconclusive };

const char* to_string(Status s);

// Absolute plus relative slack used by every grid predicate. A failure is only
// declared when it exceeds violation_factor times the slack.
struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;
    double violation_factor = 10.0;

    double bound(double scale) const { return abs + rel * scale; }
    double strict_bound(double scale) const { return violation_factor * bound(scale); }

    static Tolerance uniform(double t) { return Tolerance{t, t, 10.0}; }
};

// Where a predicate failed: x (and a reference point x_ref for two-point
// comparisons) together with the two compared quantities.
struct Witness {
    double x = 0.0;
    double x_ref = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct PredicateVerdict {
    Status status = Status::Inconclusive;
    std::optional<Witness> witness;
    Tolerance tol;
    std::string detail;

    bool holds() const { return status == Status::Holds; }
};

}  // namespace gmorder
