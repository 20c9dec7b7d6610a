#include "gmorder/extremes.hpp"

#include <cmath>
#include <string>

#include "gmorder/errors.hpp"

namespace gmorder {

namespace {

double log_survival_sum(const PopulationSpec& pop, double x) {
    double s = 0.0;
    for (const auto& m : pop.members()) s += log_survival(m, x);
    return s;
}

double hazard_sum(const PopulationSpec& pop, double x) {
    double s = 0.0;
    for (const auto& m : pop.members()) s += hazard(m, x);
    return s;
}

// 1 - S from log S without cancellation.
double cdf_from_log_survival(double ls) { return -std::expm1(ls); }

// log(1 - S) from log S, accurate at both ends.
double log_cdf_from_log_survival(double ls) {
    if (ls < -0.6931471805599453) return std::log1p(-std::exp(ls));
    return std::log(-std::expm1(ls));
}

// Fourth-order finite-difference derivative with step max(1e-5, 1e-4 x).
// Central stencil when it fits inside [0, inf), forward stencil otherwise.
double derivative(const std::function<double(double)>& f, double x) {
    const double h = std::max(1e-5, 1e-4 * x);
    if (x >= 2.0 * h) {
        return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
    }
    return (-25 * f(x) + 48 * f(x + h) - 36 * f(x + 2 * h) + 16 * f(x + 3 * h) - 3 * f(x + 4 * h)) /
           (12 * h);
}

void require_point(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("evaluation point must be finite and >= 0, got " + std::to_string(x));
    }
}

}  // namespace

const char* to_string(Regime r) {
    switch (r) {
        case Regime::Dependent: return "dependent";
        case Regime::Independent: return "independent";
        case Regime::Shock: return "shock";
    }
    return "?";
}

const char* to_string(Extreme e) { return e == Extreme::Min ? "min" : "max"; }

const char* to_string(CurveKind k) {
    switch (k) {
        case CurveKind::MinSurvival: return "min-survival";
        case CurveKind::MaxCdf: return "max-cdf";
        case CurveKind::MinHazard: return "min-hazard";
        case CurveKind::MinDensity: return "min-density";
        case CurveKind::MaxDensity: return "max-density";
    }
    return "?";
}

PopulationSpec::PopulationSpec(std::vector<GMParams> members,
                               std::optional<std::vector<double>> shock_p,
                               std::optional<Generator> copula)
    : members_(std::move(members)), shock_p_(std::move(shock_p)), copula_(std::move(copula)) {
    if (members_.empty()) throw DomainError("population needs at least one member");
    if (shock_p_ && copula_) throw DomainError("shock probabilities and a copula are exclusive");
    if (shock_p_) {
        if (shock_p_->size() != members_.size()) {
            throw DomainError("shock_p length must match the number of members");
        }
        for (double p : *shock_p_) {
            if (!(p > 0.0 && p <= 1.0)) throw DomainError("shock probabilities must lie in (0, 1]");
        }
    }
}

Regime PopulationSpec::regime() const {
    if (shock_p_) return Regime::Shock;
    if (copula_) return Regime::Dependent;
    return Regime::Independent;
}

double PopulationSpec::shock_product() const {
    double prod = 1.0;
    if (shock_p_) {
        for (double p : *shock_p_) prod *= p;
    }
    return prod;
}

double PopulationSpec::shock_complement_product() const {
    if (!shock_p_) return 0.0;
    double prod = 1.0;
    for (double p : *shock_p_) prod *= 1.0 - p;
    return prod;
}

double min_survival(const PopulationSpec& pop, double x) {
    require_point(x);
    switch (pop.regime()) {
        case Regime::Independent: return std::exp(log_survival_sum(pop, x));
        case Regime::Shock: return pop.shock_product() * std::exp(log_survival_sum(pop, x));
        case Regime::Dependent: {
            const Generator& g = *pop.copula();
            double s = 0.0;
            for (const auto& m : pop.members()) s += g.phi_from_log(log_survival(m, x));
            return g.psi(s);
        }
    }
    return 0.0;
}

double min_cdf(const PopulationSpec& pop, double x) {
    require_point(x);
    switch (pop.regime()) {
        case Regime::Independent: return cdf_from_log_survival(log_survival_sum(pop, x));
        case Regime::Shock:
            return cdf_from_log_survival(std::log(pop.shock_product()) + log_survival_sum(pop, x));
        case Regime::Dependent: {
            const Generator& g = *pop.copula();
            double s = 0.0;
            for (const auto& m : pop.members()) s += g.phi_from_log(log_survival(m, x));
            return cdf_from_log_survival(g.log_psi(s));
        }
    }
    return 0.0;
}

double min_density(const PopulationSpec& pop, double x) {
    require_point(x);
    if (pop.regime() == Regime::Dependent) {
        // Difference whichever side of the curve is small; it carries full precision.
        if (min_survival(pop, x) < 0.5) {
            return -derivative([&](double t) { return min_survival(pop, t); }, x);
        }
        return derivative([&](double t) { return min_cdf(pop, t); }, x);
    }
    const double ls = log_survival_sum(pop, x);
    const double f = std::exp(std::log(hazard_sum(pop, x)) + ls);
    return pop.regime() == Regime::Shock ? pop.shock_product() * f : f;
}

double min_hazard(const PopulationSpec& pop, double x) {
    require_point(x);
    if (pop.regime() == Regime::Dependent) {
        const double s = min_survival(pop, x);
        if (!(s > 0.0)) throw EvaluationError("minimum survival underflowed; hazard undefined");
        return min_density(pop, x) / s;
    }
    return hazard_sum(pop, x);
}

double max_cdf(const PopulationSpec& pop, double x) {
    require_point(x);
    const auto& ms = pop.members();
    switch (pop.regime()) {
        case Regime::Independent: {
            double prod = 1.0;
            for (const auto& m : ms) prod *= cdf_from_log_survival(log_survival(m, x));
            return prod;
        }
        case Regime::Shock: {
            const auto& p = *pop.shock_p();
            double prod = 1.0;
            for (std::size_t k = 0; k < ms.size(); ++k) {
                const double ls = log_survival(ms[k], x);
                prod *= p[k] == 1.0 ? cdf_from_log_survival(ls) : 1.0 - p[k] * std::exp(ls);
            }
            return prod;
        }
        case Regime::Dependent: {
            const Generator& g = *pop.copula();
            double s = 0.0;
            for (const auto& m : ms) {
                const double ls = log_survival(m, x);
                if (ls == 0.0) return 0.0;  // a zero cdf grounds the copula
                s += g.phi_from_log(log_cdf_from_log_survival(ls));
            }
            return g.psi(s);
        }
    }
    return 0.0;
}

double max_survival(const PopulationSpec& pop, double x) {
    require_point(x);
    const auto& ms = pop.members();
    if (pop.regime() == Regime::Dependent) {
        const Generator& g = *pop.copula();
        double s = 0.0;
        for (const auto& m : ms) {
            const double ls = log_survival(m, x);
            if (ls == 0.0) return 1.0;
            s += g.phi_from_log(log_cdf_from_log_survival(ls));
        }
        return cdf_from_log_survival(g.log_psi(s));
    }
    // 1 - prod G_k = -expm1(sum log G_k) with log G_k = log1p(-p_k S_k).
    double lg = 0.0;
    for (std::size_t k = 0; k < ms.size(); ++k) {
        const double p = pop.shock_p() ? (*pop.shock_p())[k] : 1.0;
        const double ls = log_survival(ms[k], x);
        lg += p == 1.0 ? log_cdf_from_log_survival(ls) : std::log1p(-p * std::exp(ls));
    }
    return cdf_from_log_survival(lg);
}

double max_density(const PopulationSpec& pop, double x) {
    require_point(x);
    const auto& ms = pop.members();
    const std::size_t n = ms.size();
    if (pop.regime() == Regime::Dependent) {
        if (max_cdf(pop, x) < 0.5) return derivative([&](double t) { return max_cdf(pop, t); }, x);
        return -derivative([&](double t) { return max_survival(pop, t); }, x);
    }
    // d/dx prod_k G_k = sum_k G_k' prod_{j != k} G_j with G_k = 1 - p_k S_k.
    std::vector<double> G(n);
    std::vector<double> dG(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = pop.shock_p() ? (*pop.shock_p())[k] : 1.0;
        const double ls = log_survival(ms[k], x);
        G[k] = p == 1.0 ? cdf_from_log_survival(ls) : 1.0 - p * std::exp(ls);
        dG[k] = p * pdf(ms[k], x);
    }
    double total = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double term = dG[k];
        for (std::size_t j = 0; j < n && term != 0.0; ++j) {
            if (j != k) term *= G[j];
        }
        total += term;
    }
    return total;
}

double shock_survival(const GMParams& member, double p, double x) {
    require_point(x);
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("shock probability must lie in (0, 1]");
    if (x == 0.0) return 1.0;
    return p * survival(member, x);
}

double atom_at_zero(const PopulationSpec& pop, Extreme e) {
    if (pop.regime() != Regime::Shock) return 0.0;
    return e == Extreme::Min ? 1.0 - pop.shock_product() : pop.shock_complement_product();
}

ExtremeCurve make_curve(const PopulationSpec& pop, CurveKind kind) {
    ExtremeCurve c{kind, pop.regime(), 0.0, {}, {}};
    switch (kind) {
        case CurveKind::MinSurvival:
            c.atom_at_zero = atom_at_zero(pop, Extreme::Min);
            c.eval = [pop](double x) { return min_survival(pop, x); };
            c.complement = [pop](double x) { return min_cdf(pop, x); };
            break;
        case CurveKind::MinHazard:
            c.eval = [pop](double x) { return min_hazard(pop, x); };
            break;
        case CurveKind::MinDensity:
            c.atom_at_zero = atom_at_zero(pop, Extreme::Min);
            c.eval = [pop](double x) { return min_density(pop, x); };
            break;
        case CurveKind::MaxCdf:
            c.atom_at_zero = atom_at_zero(pop, Extreme::Max);
            c.eval = [pop](double x) { return max_cdf(pop, x); };
            c.complement = [pop](double x) { return max_survival(pop, x); };
            break;
        case CurveKind::MaxDensity:
            c.atom_at_zero = atom_at_zero(pop, Extreme::Max);
            c.eval = [pop](double x) { return max_density(pop, x); };
            break;
    }
    return c;
}

double upper_support(const PopulationSpec& pop, Extreme e, double threshold) {
    auto negligible = [&](double x) {
        try {
            const double tail = e == Extreme::Min ? min_survival(pop, x) : max_survival(pop, x);
            return tail < threshold;
        } catch (const EvaluationError&) {
            return true;  // past the exponent cap every survival is zero
        }
    };
    double lo = 0.0;
    double hi = 1.0;
    while (!negligible(hi)) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) throw EvaluationError("upper support search diverged");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (negligible(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

}  // namespace gmorder
