#include "gmorder/archimedean.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gmorder/errors.hpp"

namespace gmorder {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double kLogUClamp = std::log(kUClamp);

// Collects the worst excess over the tolerance band and turns it into a verdict.
class Judge {
public:
    explicit Judge(const Tolerance& tol) : tol_(tol) {}

    // shortfall > 0 means the predicate is missed by that much at this point.
    void observe(double shortfall, double scale, double noise, const Witness& w) {
        const double band = tol_.bound(scale) + noise;
        const double ratio = shortfall / band;
        if (ratio > worst_) {
            worst_ = ratio;
            witness_ = w;
        }
        ++observed_;
    }

    void fail_evaluation(const std::string& why) { eval_error_ = why; }

    PredicateVerdict verdict() const {
        PredicateVerdict v;
        v.tol = tol_;
        if (!eval_error_.empty()) {
            v.status = Status::Inconclusive;
            v.detail = eval_error_;
            return v;
        }
        if (observed_ == 0) {
            v.status = Status::Inconclusive;
            v.detail = "no grid points could be evaluated";
            return v;
        }
        if (worst_ <= 1.0) {
            v.status = Status::Holds;
        } else if (worst_ > tol_.violation_factor) {
            v.status = Status::Violated;
            v.witness = witness_;
        } else {
            v.status = Status::Inconclusive;
            v.witness = witness_;
            v.detail = "violation inside the tolerance margin";
        }
        return v;
    }

private:
    Tolerance tol_;
    double worst_ = 0.0;
    Witness witness_;
    std::size_t observed_ = 0;
    std::string eval_error_;
};

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::Independence: return "independence";
        case Family::Clayton: return "clayton";
        case Family::Gumbel: return "gumbel-hougaard";
        case Family::Custom: return "custom";
    }
    return "?";
}

Generator Generator::independence() { return Generator(Family::Independence, 0.0); }

Generator Generator::clayton(double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta)) throw DomainError("clayton theta must be > 0");
    return Generator(Family::Clayton, theta);
}

Generator Generator::gumbel(double theta) {
    if (!(theta >= 1.0) || !std::isfinite(theta)) throw DomainError("gumbel theta must be >= 1");
    return Generator(Family::Gumbel, theta);
}

Generator Generator::custom(std::string name, Fn psi, Fn phi) {
    if (!psi || !phi) throw DomainError("custom generator needs both psi and phi");
    Generator g(Family::Custom, 0.0);
    g.custom_name_ = std::move(name);
    g.custom_psi_ = std::move(psi);
    g.custom_phi_ = std::move(phi);
    return g;
}

std::string Generator::name() const {
    char buf[64];
    switch (family_) {
        case Family::Independence: return "independence";
        case Family::Clayton: std::snprintf(buf, sizeof buf, "clayton(%g)", theta_); return buf;
        case Family::Gumbel: std::snprintf(buf, sizeof buf, "gumbel(%g)", theta_); return buf;
        case Family::Custom: return custom_name_.empty() ? "custom" : custom_name_;
    }
    return "?";
}

double Generator::psi(double t) const {
    if (family_ == Family::Custom) return custom_psi_(t);
    if (std::isinf(t)) return 0.0;
    return std::exp(log_psi(t));
}

double Generator::log_psi(double t) const {
    switch (family_) {
        case Family::Independence: return -t;
        case Family::Clayton: return -std::log1p(theta_ * t) / theta_;
        case Family::Gumbel: return -std::pow(t, 1.0 / theta_);
        case Family::Custom: return std::log(custom_psi_(t));
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double Generator::phi(double u) const {
    u = std::clamp(u, kUClamp, 1.0);
    if (family_ == Family::Custom) return custom_phi_(u);
    return phi_from_log(std::log(u));
}

double Generator::phi_from_log(double log_u) const {
    log_u = std::clamp(log_u, kLogUClamp, 0.0);
    switch (family_) {
        case Family::Independence: return -log_u;
        case Family::Clayton: return std::expm1(-theta_ * log_u) / theta_;
        case Family::Gumbel: return std::pow(-log_u, theta_);
        case Family::Custom: return custom_phi_(std::exp(log_u));
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double copula_value(const Generator& g, std::span<const double> u) {
    double s = 0.0;
    for (double ui : u) {
        if (!(ui >= 0.0 && ui <= 1.0)) throw DomainError("copula arguments must lie in [0, 1]");
        if (ui == 0.0) return 0.0;
        s += g.phi(ui);
    }
    return g.psi(s);
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) throw DomainError("log grid needs 0 < lo < hi, n >= 2");
    std::vector<double> t(n);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    t.front() = lo;
    t.back() = hi;
    return t;
}

std::vector<double> default_t_grid() { return log_grid(1e-6, 50.0, 200); }

PredicateVerdict is_log_convex(const Generator& g, std::span<const double> grid,
                               const Tolerance& tol) {
    Judge judge(tol);
    const std::size_t m = grid.size();
    std::vector<double> L(m);
    for (std::size_t i = 0; i < m; ++i) {
        L[i] = g.log_psi(grid[i]);
        if (!std::isfinite(L[i])) {
            judge.fail_evaluation("log psi not finite at t = " + std::to_string(grid[i]));
            return judge.verdict();
        }
    }
    for (std::size_t i = 0; i + 2 < m; ++i) {
        const double h1 = grid[i + 1] - grid[i];
        const double h2 = grid[i + 2] - grid[i + 1];
        const double s1 = (L[i + 1] - L[i]) / h1;
        const double s2 = (L[i + 2] - L[i + 1]) / h2;
        const double mag = std::max({std::fabs(L[i]), std::fabs(L[i + 1]), std::fabs(L[i + 2])});
        const double noise = 4.0 * kEps * mag * (1.0 / h1 + 1.0 / h2);
        judge.observe(s1 - s2, std::max(std::fabs(s1), std::fabs(s2)), noise,
                      Witness{grid[i + 1], grid[i], s2, s1});
    }
    return judge.verdict();
}

PredicateVerdict is_log_convex(const Generator& g) {
    const auto grid = default_t_grid();
    return is_log_convex(g, grid);
}

PredicateVerdict is_d_monotone(const Generator& g, int d, std::span<const double> grid,
                               const Tolerance& tol) {
    if (d < 2) throw DomainError("d-monotonicity needs d >= 2");
    Judge judge(tol);
    const std::size_t m = grid.size();
    std::vector<double> dd(m);
    std::vector<double> err(m);
    for (std::size_t i = 0; i < m; ++i) {
        dd[i] = g.psi(grid[i]);
        if (!std::isfinite(dd[i])) {
            judge.fail_evaluation("psi not finite at t = " + std::to_string(grid[i]));
            return judge.verdict();
        }
        err[i] = 4.0 * kEps * std::fabs(dd[i]);
    }
    // Divided differences of order k carry the sign of the k-th derivative.
    // Orders 0..d-2 give alternating signs; orders d-1 and d make the
    // (d-2)-th derivative (signed) decreasing and convex.
    for (int k = 0; k <= d; ++k) {
        if (k > 0) {
            for (std::size_t i = 0; i + k < m; ++i) {
                const double span = grid[i + k] - grid[i];
                dd[i] = (dd[i + 1] - dd[i]) / span;
                err[i] = (err[i + 1] + err[i]) / span;
            }
        }
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        for (std::size_t i = 0; i + k < m; ++i) {
            const double v = sign * dd[i];
            if (err[i] > std::fabs(dd[i]) && err[i] > tol.abs) continue;  // noise-dominated window
            judge.observe(-v, std::fabs(v), err[i],
                          Witness{grid[i + k / 2], grid[i], v, 0.0});
        }
    }
    return judge.verdict();
}

PredicateVerdict is_d_monotone(const Generator& g, int d) {
    const auto grid = default_t_grid();
    return is_d_monotone(g, d, grid);
}

PredicateVerdict super_additive_compose(const Generator& g1, const Generator& g2,
                                        std::span<const double> grid, const Tolerance& tol) {
    Judge judge(tol);
    auto f = [&](double t) { return g2.phi_from_log(g1.log_psi(t)); };
    const std::size_t m = grid.size();
    std::vector<double> fv(m);
    for (std::size_t i = 0; i < m; ++i) {
        fv[i] = f(grid[i]);
        if (!std::isfinite(fv[i])) {
            judge.fail_evaluation("phi2(psi1(t)) overflowed at t = " + std::to_string(grid[i]));
            return judge.verdict();
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const double lhs = f(grid[i] + grid[j]);
            if (!std::isfinite(lhs)) {
                judge.fail_evaluation("phi2(psi1(t)) overflowed at t = " +
                                      std::to_string(grid[i] + grid[j]));
                return judge.verdict();
            }
            const double rhs = fv[i] + fv[j];
            const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
            judge.observe(rhs - lhs, scale, 4.0 * kEps * scale,
                          Witness{grid[i], grid[j], lhs, rhs});
        }
    }
    return judge.verdict();
}

PredicateVerdict super_additive_compose(const Generator& g1, const Generator& g2) {
    const auto grid = default_t_grid();
    return super_additive_compose(g1, g2, grid);
}

std::vector<std::vector<double>> product_u_grid(std::span<const double> levels, std::size_t n) {
    std::vector<std::vector<double>> out;
    if (n == 0 || levels.empty()) return out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<double> u(n);
        for (std::size_t k = 0; k < n; ++k) u[k] = levels[idx[k]];
        out.push_back(std::move(u));
        std::size_t k = 0;
        while (k < n && ++idx[k] == levels.size()) idx[k++] = 0;
        if (k == n) break;
    }
    return out;
}

std::vector<double> uniform_levels(std::size_t m) {
    std::vector<double> v(m);
    for (std::size_t k = 0; k < m; ++k) v[k] = static_cast<double>(k + 1) / static_cast<double>(m);
    return v;
}

PredicateVerdict copula_dominates(const Generator& g1, const Generator& g2,
                                  const std::vector<std::vector<double>>& ugrid,
                                  const Tolerance& tol) {
    Judge judge(tol);
    for (const auto& u : ugrid) {
        const double c1 = copula_value(g1, u);
        const double c2 = copula_value(g2, u);
        if (!std::isfinite(c1) || !std::isfinite(c2)) {
            judge.fail_evaluation("copula value not finite");
            return judge.verdict();
        }
        const double scale = std::max(c1, c2);
        judge.observe(c1 - c2, scale, 4.0 * kEps * scale,
                      Witness{u.empty() ? 0.0 : u[0], u.size() > 1 ? u[1] : 0.0, c1, c2});
    }
    return judge.verdict();
}

}  // namespace gmorder
