#include "gmorder/gm_core.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gmorder/errors.hpp"
#include "gmorder/rng.hpp"

namespace gmorder {

namespace {

// exp underflows to zero below this.
constexpr double kLogUnderflow = -745.0;

void require_nonnegative(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("evaluation point must be a finite nonnegative number, got " +
                          std::to_string(x));
    }
}

void require_under_cap(double beta, double x) {
    if (beta * x > kExponentCap) {
        throw EvaluationError("beta*x = " + std::to_string(beta * x) +
                              " exceeds the exponent cap of 700");
    }
}

}  // namespace

GMParams::GMParams(double alpha, double beta, double lambda)
    : alpha_(alpha), beta_(beta), lambda_(lambda) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(lambda)) {
        throw DomainError("GM parameters must be finite");
    }
    if (!(alpha > 0.0)) throw DomainError("GM alpha must be > 0");
    if (beta < 0.0) throw DomainError("GM beta must be >= 0");
    if (lambda < 0.0) throw DomainError("GM lambda must be >= 0");
}

double gompertz_growth(double beta, double x) {
    if (beta == 0.0) return x;
    require_under_cap(beta, x);
    return std::expm1(beta * x) / beta;
}

double cumulative_hazard(const GMParams& p, double x) {
    require_nonnegative(x);
    return p.lambda() * x + p.alpha() * gompertz_growth(p.beta(), x);
}

double hazard(const GMParams& p, double x) {
    require_nonnegative(x);
    require_under_cap(p.beta(), x);
    return p.alpha() * std::exp(p.beta() * x) + p.lambda();
}

double log_survival(const GMParams& p, double x) { return -cumulative_hazard(p, x); }

double survival(const GMParams& p, double x) {
    const double ls = log_survival(p, x);
    return ls < kLogUnderflow ? 0.0 : std::exp(ls);
}

double pdf(const GMParams& p, double x) {
    const double ls = log_survival(p, x);
    if (ls < kLogUnderflow) return 0.0;
    return std::exp(std::log(hazard(p, x)) + ls);
}

double cdf(const GMParams& p, double x) { return -std::expm1(log_survival(p, x)); }

double quantile(const GMParams& p, double q) {
    if (!(q >= 0.0) || !(q < 1.0)) {
        throw DomainError("quantile level must lie in [0, 1), got " + std::to_string(q));
    }
    if (q == 0.0) return 0.0;
    const double target = -std::log1p(-q);

    double lo = 0.0;
    double hi = 1.0;
    while (cumulative_hazard(p, hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (p.beta() * hi > kExponentCap && p.beta() > 0.0) {
            throw EvaluationError("quantile bracket exceeded the exponent cap");
        }
    }

    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double f = cumulative_hazard(p, x) - target;
        if (f == 0.0) return x;
        if (f < 0.0) lo = x; else hi = x;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;

        double next = x - f / hazard(p, x);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == x) break;
        x = next;
    }
    return x;
}

std::vector<double> sample(const GMParams& p, std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(quantile(p, rng.uniform()));
    return out;
}

}  // namespace gmorder
