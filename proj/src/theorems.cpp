#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "gmorder/errors.hpp"
#include "gmorder/veriharness.hpp"

namespace gmorder {

namespace {

// Parameter ranges for generated scenarios.
constexpr double kAlphaLo = 0.05, kAlphaHi = 20.0;
constexpr double kBetaLo = 0.05, kBetaHi = 2.0;
constexpr double kLambdaLo = 0.05, kLambdaHi = 20.0;
constexpr double kPLo = 0.2;
// 1/beta range used when reciprocals of beta are compared.
constexpr double kNuLo = 1.0 / kBetaHi, kNuHi = 1.0 / kBetaLo;

using Vec = std::vector<double>;

Vec alphas(const PopulationSpec& p) {
    Vec v;
    for (const auto& m : p.members()) v.push_back(m.alpha());
    return v;
}
Vec betas(const PopulationSpec& p) {
    Vec v;
    for (const auto& m : p.members()) v.push_back(m.beta());
    return v;
}
Vec lambdas(const PopulationSpec& p) {
    Vec v;
    for (const auto& m : p.members()) v.push_back(m.lambda());
    return v;
}
Vec reciprocal(Vec v) {
    for (auto& e : v) e = 1.0 / e;
    return v;
}
double sum(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0.0); }
double product(const Vec& v) {
    double p = 1.0;
    for (double e : v) p *= e;
    return p;
}
bool all_equal(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
}
Vec filled(std::size_t n, double v) { return Vec(n, v); }
Vec uniform_vec(std::size_t n, double lo, double hi, Rng& rng) {
    Vec v(n);
    for (auto& e : v) e = rng.uniform(lo, hi);
    return v;
}

PopulationSpec population(const Vec& a, const Vec& b, const Vec& l,
                          std::optional<Vec> p = std::nullopt,
                          std::optional<Generator> g = std::nullopt) {
    std::vector<GMParams> ms;
    for (std::size_t i = 0; i < a.size(); ++i) ms.emplace_back(a[i], b[i], l[i]);
    return PopulationSpec(std::move(ms), std::move(p), std::move(g));
}

Cone draw_cone(Rng& rng) { return rng.coin() ? Cone::D : Cone::E; }

// x ⪰_w y: Robin-Hood transfers then a uniform shrink.
std::pair<Vec, Vec> weak_sub_pair(std::size_t n, double lo, double hi, Cone c, Rng& rng) {
    Vec x = draw_in_cone(n, lo, hi, c, rng);
    Vec y = robin_hood(x, c, rng);
    const double s = rng.uniform(0.5, 1.0);
    for (auto& e : y) e = std::max(e * s, lo);
    return {x, y};
}

// x ⪰^w y: Robin-Hood transfers then a uniform stretch.
std::pair<Vec, Vec> weak_sup_pair(std::size_t n, double lo, double hi, Cone c, Rng& rng) {
    Vec x = draw_in_cone(n, lo, hi, c, rng);
    Vec y = robin_hood(x, c, rng);
    const double s = rng.uniform(1.0, 1.5);
    for (auto& e : y) e = std::min(e * s, hi);
    return {x, y};
}

std::pair<Vec, Vec> majorized_pair(std::size_t n, double lo, double hi, Cone c, Rng& rng) {
    Vec x = draw_in_cone(n, lo, hi, c, rng);
    return {x, robin_hood(x, c, rng)};
}

// Generator pairs (psi1 for X, psi2 for Y) used by the copula theorems.
struct GeneratorPair {
    Generator g1;
    Generator g2;
};

GeneratorPair draw_pair(Rng& rng) {
    switch (rng.below(3)) {
        case 0: return {Generator::independence(), Generator::independence()};
        case 1: return {Generator::clayton(1.0), Generator::clayton(2.0)};
        default: return {Generator::gumbel(1.0), Generator::clayton(1.0)};
    }
}

// Predicate verdicts depend only on the generators, so they are memoized by name.
bool cached_predicate(const std::string& key, const std::function<bool()>& compute) {
    static std::mutex mu;
    static std::map<std::string, bool> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const bool value = compute();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, value);
    return value;
}

void copula_hypotheses(const Scenario& s, std::vector<HypothesisResult>& out) {
    if (!s.A.copula() || !s.B.copula()) {
        out.push_back({"both samples carry an Archimedean copula", false});
        return;
    }
    const Generator& g1 = *s.A.copula();
    const Generator& g2 = *s.B.copula();
    const bool sa = cached_predicate("sa:" + g1.name() + ">" + g2.name(), [&] {
        return super_additive_compose(g1, g2).holds();
    });
    const bool lc = cached_predicate("lc:" + g1.name(), [&] { return is_log_convex(g1).holds(); }) ||
                    cached_predicate("lc:" + g2.name(), [&] { return is_log_convex(g2).holds(); });
    out.push_back({"phi2 o psi1 super-additive", sa});
    out.push_back({"psi1 or psi2 log-convex", lc});
}

std::string cone_name(const char* what, Cone c) { return std::string(what) + " in " + to_string(c); }

void in_cone_hyp(std::vector<HypothesisResult>& out, const char* what, const Vec& v, Cone c) {
    out.push_back({cone_name(what, c), in_cone(v, c)});
}

// Shock probabilities: h(p) drawn in the cone opposite to the branch.
struct ShockDraw {
    Transform h;
    Vec p;
    Vec p_star;
};

double p_hi(Transform h) { return h == Transform::Identity ? 1.0 : 0.99; }

ShockDraw draw_shock(std::size_t n, Cone branch, Rng& rng, bool with_star) {
    ShockDraw d;
    d.h = rng.coin() ? Transform::Identity : Transform::NegLogComplement;
    const double lo = apply(d.h, kPLo);
    const double hi = apply(d.h, p_hi(d.h));
    Vec u;
    Vec u_star;
    if (with_star) {
        std::tie(u, u_star) = weak_sub_pair(n, lo, hi, opposite(branch), rng);
    } else {
        u = draw_in_cone(n, lo, hi, opposite(branch), rng);
        u_star = u;
    }
    for (double e : u) d.p.push_back(std::min(invert(d.h, e), 1.0));
    for (double e : u_star) d.p_star.push_back(std::min(invert(d.h, e), 1.0));
    return d;
}

bool transform_increasing_convex(Transform h) {
    // Checked on a fine grid of (0, 1); both shipped transforms pass.
    const std::size_t m = 200;
    double prev_v = apply(h, 0.0);
    double prev_slope = -1.0;
    for (std::size_t i = 1; i < m; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(m);
        const double v = apply(h, p);
        const double slope = (v - prev_v) * static_cast<double>(m);
        if (!(slope > 0.0) || slope < prev_slope - 1e-9) return false;
        prev_v = v;
        prev_slope = slope;
    }
    return true;
}

void shock_hypotheses(const Scenario& s, std::vector<HypothesisResult>& out, bool compare_p) {
    if (!s.h || !s.A.shock_p() || !s.B.shock_p()) {
        out.push_back({"both samples carry shock probabilities and a transform", false});
        return;
    }
    const Transform h = *s.h;
    const Vec hp = apply(h, *s.A.shock_p());
    out.push_back({std::string("h = ") + to_string(h) + " strictly increasing and convex",
                   transform_increasing_convex(h)});
    out.push_back({cone_name("h(p)", opposite(s.branch)), in_cone(hp, opposite(s.branch))});
    if (compare_p) {
        out.push_back({"h(p) weakly submajorizes h(p*)",
                       weak_submajorizes(hp, apply(h, *s.B.shock_p()))});
    } else {
        out.push_back({"X and Y share p", *s.A.shock_p() == *s.B.shock_p()});
    }
}

void product_hypothesis(const Scenario& s, std::vector<HypothesisResult>& out) {
    const double pa = s.A.shock_product();
    const double pb = s.B.shock_product();
    if (s.branch == Cone::D) {
        out.push_back({"prod p >= prod p*", pa >= pb});
    } else {
        out.push_back({"prod p <= prod p*", pa <= pb});
    }
}

// Draws p and p* and orders them so the product condition of the branch holds.
std::pair<Vec, Vec> draw_shock_products(std::size_t n, Cone branch, Rng& rng) {
    Vec p = uniform_vec(n, kPLo, 1.0, rng);
    Vec q = uniform_vec(n, kPLo, 1.0, rng);
    const bool p_larger = product(p) >= product(q);
    if ((branch == Cone::D) != p_larger) std::swap(p, q);
    return {p, q};
}

bool block_structure(const Vec& v, std::size_t n1) {
    if (n1 == 0 || n1 >= v.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != (i < n1 ? v.front() : v.back())) return false;
    }
    return true;
}

Vec blocks(std::size_t n, std::size_t n1, double first, double second) {
    Vec v(n, second);
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n1), first);
    return v;
}

// Pulls both block values toward their weighted mean; the result is majorized.
std::pair<double, double> shrink_blocks(std::size_t n, std::size_t n1, double v1, double v2,
                                        Rng& rng) {
    const double n_d = static_cast<double>(n);
    const double m = (static_cast<double>(n1) * v1 + static_cast<double>(n - n1) * v2) / n_d;
    const double t = rng.uniform();
    return {m + t * (v1 - m), m + t * (v2 - m)};
}

Direction forward(const Scenario&) { return Direction::Forward; }
Direction reverse(const Scenario&) { return Direction::Reverse; }
Direction by_branch(const Scenario& s) {
    return s.branch == Cone::D ? Direction::Forward : Direction::Reverse;
}

std::vector<TheoremSpec> build_registry() {
    std::vector<TheoremSpec> r;
    const char* kShared = "";

    // Dependent minima, usual stochastic order.
    r.push_back({"T1", TheoremRegime::Dependent, Relation::St, Extreme::Min,
                 "alpha weakly submajorizes alpha* => X_{1:n} <=st Y_{1:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const auto g = draw_pair(rng);
                     auto [a, a2] = weak_sub_pair(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = draw_in_cone(n, kBetaLo, kBetaHi, c, rng);
                     const Vec l = draw_in_cone(n, kLambdaLo, kLambdaHi, c, rng);
                     return Scenario{population(a, b, l, std::nullopt, g.g1),
                                     population(a2, b, l, std::nullopt, g.g2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "alpha*", alphas(s.B), s.branch);
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     h.push_back({"X and Y share beta, lambda",
                                  betas(s.A) == betas(s.B) && lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"alpha weakly submajorizes alpha*",
                                  weak_submajorizes(alphas(s.A), alphas(s.B))});
                     copula_hypotheses(s, h);
                     return h;
                 },
                 forward});

    r.push_back({"T2", TheoremRegime::Dependent, Relation::St, Extreme::Min,
                 "beta weakly submajorizes beta* => X_{1:n} <=st Y_{1:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const auto g = draw_pair(rng);
                     const Vec a = draw_in_cone(n, kAlphaLo, kAlphaHi, c, rng);
                     auto [b, b2] = weak_sub_pair(n, kBetaLo, kBetaHi, c, rng);
                     const Vec l = draw_in_cone(n, kLambdaLo, kLambdaHi, c, rng);
                     return Scenario{population(a, b, l, std::nullopt, g.g1),
                                     population(a, b2, l, std::nullopt, g.g2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "beta*", betas(s.B), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     h.push_back({"X and Y share alpha, lambda",
                                  alphas(s.A) == alphas(s.B) && lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"beta weakly submajorizes beta*",
                                  weak_submajorizes(betas(s.A), betas(s.B))});
                     copula_hypotheses(s, h);
                     return h;
                 },
                 forward});

    r.push_back({"T3", TheoremRegime::Dependent, Relation::St, Extreme::Min,
                 "lambda weakly submajorizes lambda* => X_{1:n} <=st Y_{1:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const auto g = draw_pair(rng);
                     const Vec a = draw_in_cone(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = draw_in_cone(n, kBetaLo, kBetaHi, c, rng);
                     auto [l, l2] = weak_sub_pair(n, kLambdaLo, kLambdaHi, c, rng);
                     return Scenario{population(a, b, l, std::nullopt, g.g1),
                                     population(a, b, l2, std::nullopt, g.g2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     in_cone_hyp(h, "lambda*", lambdas(s.B), s.branch);
                     h.push_back({"X and Y share alpha, beta",
                                  alphas(s.A) == alphas(s.B) && betas(s.A) == betas(s.B)});
                     h.push_back({"lambda weakly submajorizes lambda*",
                                  weak_submajorizes(lambdas(s.A), lambdas(s.B))});
                     copula_hypotheses(s, h);
                     return h;
                 },
                 forward});

    // Independent minima, hazard rate order.
    r.push_back({"T4", TheoremRegime::Independent, Relation::Hr, Extreme::Min,
                 "alpha majorizes alpha*, beta in D+ => X_{1:n} <=hr Y_{1:n} (>=hr for E+)",
                 kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     auto [a, a2] = majorized_pair(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = draw_in_cone(n, kBetaLo, kBetaHi, Cone::D, rng);
                     const Vec l = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     return Scenario{population(a, b, l), population(a2, b, l), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "alpha*", alphas(s.B), s.branch);
                     in_cone_hyp(h, "beta", betas(s.A), Cone::D);
                     h.push_back({"X and Y share beta, lambda",
                                  betas(s.A) == betas(s.B) && lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"alpha majorizes alpha*", majorizes(alphas(s.A), alphas(s.B))});
                     return h;
                 },
                 by_branch});

    r.push_back({"T5", TheoremRegime::Independent, Relation::Hr, Extreme::Min,
                 "beta majorizes beta* => X_{1:n} <=hr Y_{1:n}",
                 "The E+ branch is the D+ branch with every vector reversed; minima of "
                 "independent samples are permutation invariant, so both branches are tested "
                 "against the single stated direction.",
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const Vec a = draw_in_cone(n, kAlphaLo, kAlphaHi, c, rng);
                     auto [b, b2] = majorized_pair(n, kBetaLo, kBetaHi, c, rng);
                     const Vec l = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     return Scenario{population(a, b, l), population(a, b2, l), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "beta*", betas(s.B), s.branch);
                     h.push_back({"X and Y share alpha, lambda",
                                  alphas(s.A) == alphas(s.B) && lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"beta majorizes beta*", majorizes(betas(s.A), betas(s.B))});
                     return h;
                 },
                 forward});

    r.push_back({"T6", TheoremRegime::Independent, Relation::Hr, Extreme::Min,
                 "sum lambda >= sum lambda* => X_{1:n} <=hr Y_{1:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Vec a = uniform_vec(n, kAlphaLo, kAlphaHi, rng);
                     const Vec b = uniform_vec(n, kBetaLo, kBetaHi, rng);
                     Vec l = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     Vec l2 = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     if (sum(l) < sum(l2)) std::swap(l, l2);
                     return Scenario{population(a, b, l), population(a, b, l2), Cone::D, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     h.push_back({"X and Y share alpha, beta",
                                  alphas(s.A) == alphas(s.B) && betas(s.A) == betas(s.B)});
                     h.push_back({"sum lambda >= sum lambda*",
                                  sum(lambdas(s.A)) >= sum(lambdas(s.B))});
                     return h;
                 },
                 forward});

    // Multiple-outlier minima, ageing faster order.
    r.push_back({"T9", TheoremRegime::MultipleOutlier, Relation::RHr, Extreme::Min,
                 "alpha1 <= (>=) alpha2, beta1 >= beta2, block alpha majorizes block alpha* => "
                 "X_{1:n} <=R-hr (>=R-hr) Y_{1:n}",
                 "Branch E+ stands for alpha1 <= alpha2, branch D+ for alpha1 >= alpha2.",
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const std::size_t n1 = 1 + rng.below(n - 1);
                     const Vec av = draw_in_cone(2, kAlphaLo, kAlphaHi, c, rng);
                     const Vec bv = draw_in_cone(2, kBetaLo, kBetaHi, Cone::D, rng);
                     const Vec lv = uniform_vec(2, kLambdaLo, kLambdaHi, rng);
                     const auto [s1, s2] = shrink_blocks(n, n1, av[0], av[1], rng);
                     const Vec b = blocks(n, n1, bv[0], bv[1]);
                     const Vec l = blocks(n, n1, lv[0], lv[1]);
                     return Scenario{population(blocks(n, n1, av[0], av[1]), b, l),
                                     population(blocks(n, n1, s1, s2), b, l), c, {}, n1};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     const Vec a = alphas(s.A), a2 = alphas(s.B), b = betas(s.A);
                     h.push_back({"multiple-outlier block structure",
                                  block_structure(a, s.n1) && block_structure(a2, s.n1) &&
                                      block_structure(b, s.n1) &&
                                      block_structure(lambdas(s.A), s.n1)});
                     h.push_back({"X and Y share beta, lambda",
                                  b == betas(s.B) && lambdas(s.A) == lambdas(s.B)});
                     if (s.branch == Cone::E) {
                         h.push_back({"alpha1 <= alpha2", a.front() <= a.back()});
                     } else {
                         h.push_back({"alpha1 >= alpha2", a.front() >= a.back()});
                     }
                     h.push_back({"beta1 >= beta2", b.front() >= b.back()});
                     h.push_back({"block alpha majorizes block alpha*", majorizes(a, a2)});
                     return h;
                 },
                 [](const Scenario& s) {
                     return s.branch == Cone::E ? Direction::Forward : Direction::Reverse;
                 }});

    r.push_back({"T10", TheoremRegime::MultipleOutlier, Relation::RHr, Extreme::Min,
                 "alpha1 >= alpha2, beta1 >= beta2, block beta majorizes block beta* => "
                 "X_{1:n} >=R-hr Y_{1:n}",
                 kShared,
                 [](std::size_t n, Rng& rng) {
                     const std::size_t n1 = 1 + rng.below(n - 1);
                     const Vec av = draw_in_cone(2, kAlphaLo, kAlphaHi, Cone::D, rng);
                     const Vec bv = draw_in_cone(2, kBetaLo, kBetaHi, Cone::D, rng);
                     const Vec lv = uniform_vec(2, kLambdaLo, kLambdaHi, rng);
                     const auto [s1, s2] = shrink_blocks(n, n1, bv[0], bv[1], rng);
                     const Vec a = blocks(n, n1, av[0], av[1]);
                     const Vec l = blocks(n, n1, lv[0], lv[1]);
                     return Scenario{population(a, blocks(n, n1, bv[0], bv[1]), l),
                                     population(a, blocks(n, n1, s1, s2), l), Cone::D, {}, n1};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     const Vec a = alphas(s.A), b = betas(s.A), b2 = betas(s.B);
                     h.push_back({"multiple-outlier block structure",
                                  block_structure(a, s.n1) && block_structure(b, s.n1) &&
                                      block_structure(b2, s.n1) &&
                                      block_structure(lambdas(s.A), s.n1)});
                     h.push_back({"X and Y share alpha, lambda",
                                  a == alphas(s.B) && lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"alpha1 >= alpha2", a.front() >= a.back()});
                     h.push_back({"beta1 >= beta2", b.front() >= b.back()});
                     h.push_back({"block beta majorizes block beta*", majorizes(b, b2)});
                     return h;
                 },
                 reverse});

    r.push_back({"T11", TheoremRegime::Independent, Relation::RHr, Extreme::Min,
                 "sum lambda >= sum lambda* => X_{1:n} >=R-hr Y_{1:n}",
                 "The right-hand sum is read as the sum of lambda*_k.",
                 [](std::size_t n, Rng& rng) {
                     const Vec a = uniform_vec(n, kAlphaLo, kAlphaHi, rng);
                     const Vec b = uniform_vec(n, kBetaLo, kBetaHi, rng);
                     Vec l = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     Vec l2 = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     if (sum(l) < sum(l2)) std::swap(l, l2);
                     return Scenario{population(a, b, l), population(a, b, l2), Cone::D, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     h.push_back({"X and Y share alpha, beta",
                                  alphas(s.A) == alphas(s.B) && betas(s.A) == betas(s.B)});
                     h.push_back({"sum lambda >= sum lambda*",
                                  sum(lambdas(s.A)) >= sum(lambdas(s.B))});
                     return h;
                 },
                 reverse});

    // Dependent maxima, usual stochastic order.
    r.push_back({"T12", TheoremRegime::Dependent, Relation::St, Extreme::Max,
                 "alpha weakly supermajorizes alpha* => X_{n:n} >=st Y_{n:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const auto g = draw_pair(rng);
                     auto [a, a2] = weak_sup_pair(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = filled(n, rng.uniform(kBetaLo, kBetaHi));
                     const Vec l = draw_in_cone(n, kLambdaLo, kLambdaHi, c, rng);
                     return Scenario{population(a, b, l, std::nullopt, g.g1),
                                     population(a2, b, l, std::nullopt, g.g2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "alpha*", alphas(s.B), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     h.push_back({"common scalar beta", all_equal(betas(s.A)) &&
                                                            betas(s.A) == betas(s.B)});
                     h.push_back({"X and Y share lambda", lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"alpha weakly supermajorizes alpha*",
                                  weak_supermajorizes(alphas(s.A), alphas(s.B))});
                     copula_hypotheses(s, h);
                     return h;
                 },
                 reverse});

    r.push_back({"T13", TheoremRegime::Dependent, Relation::St, Extreme::Max,
                 "lambda weakly supermajorizes lambda* => X_{n:n} >=st Y_{n:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const auto g = draw_pair(rng);
                     const Vec a = draw_in_cone(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = filled(n, rng.uniform(kBetaLo, kBetaHi));
                     auto [l, l2] = weak_sup_pair(n, kLambdaLo, kLambdaHi, c, rng);
                     return Scenario{population(a, b, l, std::nullopt, g.g1),
                                     population(a, b, l2, std::nullopt, g.g2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     in_cone_hyp(h, "lambda*", lambdas(s.B), s.branch);
                     h.push_back({"common scalar beta", all_equal(betas(s.A)) &&
                                                            betas(s.A) == betas(s.B)});
                     h.push_back({"X and Y share alpha", alphas(s.A) == alphas(s.B)});
                     h.push_back({"lambda weakly supermajorizes lambda*",
                                  weak_supermajorizes(lambdas(s.A), lambdas(s.B))});
                     copula_hypotheses(s, h);
                     return h;
                 },
                 reverse});

    r.push_back({"T14", TheoremRegime::Dependent, Relation::St, Extreme::Max,
                 "lambda weakly supermajorizes lambda*, common alpha => X_{n:n} >=st Y_{n:n}",
                 kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const auto g = draw_pair(rng);
                     const Vec a = filled(n, rng.uniform(kAlphaLo, kAlphaHi));
                     const Vec b = draw_in_cone(n, kBetaLo, kBetaHi, c, rng);
                     auto [l, l2] = weak_sup_pair(n, kLambdaLo, kLambdaHi, c, rng);
                     return Scenario{population(a, b, l, std::nullopt, g.g1),
                                     population(a, b, l2, std::nullopt, g.g2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     in_cone_hyp(h, "lambda*", lambdas(s.B), s.branch);
                     h.push_back({"common scalar alpha", all_equal(alphas(s.A)) &&
                                                             alphas(s.A) == alphas(s.B)});
                     h.push_back({"X and Y share beta", betas(s.A) == betas(s.B)});
                     h.push_back({"lambda weakly supermajorizes lambda*",
                                  weak_supermajorizes(lambdas(s.A), lambdas(s.B))});
                     copula_hypotheses(s, h);
                     return h;
                 },
                 reverse});

    r.push_back({"T15", TheoremRegime::Dependent, Relation::St, Extreme::Max,
                 "1/beta weakly submajorizes 1/beta* => X_{n:n} >=st Y_{n:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const auto g = draw_pair(rng);
                     const Vec a = filled(n, rng.uniform(kAlphaLo, kAlphaHi));
                     auto [nu, nu2] = weak_sub_pair(n, kNuLo, kNuHi, opposite(c), rng);
                     const Vec l = draw_in_cone(n, kLambdaLo, kLambdaHi, c, rng);
                     return Scenario{population(a, reciprocal(nu), l, std::nullopt, g.g1),
                                     population(a, reciprocal(nu2), l, std::nullopt, g.g2), c,
                                     {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "beta*", betas(s.B), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     h.push_back({"common scalar alpha", all_equal(alphas(s.A)) &&
                                                             alphas(s.A) == alphas(s.B)});
                     h.push_back({"X and Y share lambda", lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"1/beta weakly submajorizes 1/beta*",
                                  weak_submajorizes(reciprocal(betas(s.A)),
                                                    reciprocal(betas(s.B)))});
                     copula_hypotheses(s, h);
                     return h;
                 },
                 reverse});

    // Shocked maxima, usual stochastic order.
    r.push_back({"T16", TheoremRegime::ShockMax, Relation::St, Extreme::Max,
                 "h(p) weakly submajorizes h(p*) => X_{n:n} >=st Y_{n:n}",
                 "h is drawn from {p, -ln(1-p)}.",
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const Vec a = draw_in_cone(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = filled(n, rng.uniform(kBetaLo, kBetaHi));
                     const Vec l = draw_in_cone(n, kLambdaLo, kLambdaHi, c, rng);
                     const auto d = draw_shock(n, c, rng, true);
                     return Scenario{population(a, b, l, d.p), population(a, b, l, d.p_star), c,
                                     d.h, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     h.push_back({"common scalar beta", all_equal(betas(s.A))});
                     h.push_back({"U and V identically distributed",
                                  s.A.members() == s.B.members()});
                     shock_hypotheses(s, h, true);
                     return h;
                 },
                 reverse});

    r.push_back({"T17", TheoremRegime::ShockMax, Relation::St, Extreme::Max,
                 "h(p) weakly submajorizes h(p*), common alpha => X_{n:n} >=st Y_{n:n}",
                 "The cone condition on the scalar alpha is read as a condition on beta.",
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const Vec a = filled(n, rng.uniform(kAlphaLo, kAlphaHi));
                     const Vec b = draw_in_cone(n, kBetaLo, kBetaHi, c, rng);
                     const Vec l = draw_in_cone(n, kLambdaLo, kLambdaHi, c, rng);
                     const auto d = draw_shock(n, c, rng, true);
                     return Scenario{population(a, b, l, d.p), population(a, b, l, d.p_star), c,
                                     d.h, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     h.push_back({"common scalar alpha", all_equal(alphas(s.A))});
                     h.push_back({"U and V identically distributed",
                                  s.A.members() == s.B.members()});
                     shock_hypotheses(s, h, true);
                     return h;
                 },
                 reverse});

    r.push_back({"T18", TheoremRegime::ShockMax, Relation::St, Extreme::Max,
                 "alpha weakly supermajorizes alpha* => X_{n:n} >=st Y_{n:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     auto [a, a2] = weak_sup_pair(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = filled(n, rng.uniform(kBetaLo, kBetaHi));
                     const Vec l = draw_in_cone(n, kLambdaLo, kLambdaHi, c, rng);
                     const auto d = draw_shock(n, c, rng, false);
                     return Scenario{population(a, b, l, d.p), population(a2, b, l, d.p), c, d.h,
                                     0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "alpha*", alphas(s.B), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     h.push_back({"common scalar beta", all_equal(betas(s.A)) &&
                                                            betas(s.A) == betas(s.B)});
                     h.push_back({"X and Y share lambda", lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"alpha weakly supermajorizes alpha*",
                                  weak_supermajorizes(alphas(s.A), alphas(s.B))});
                     shock_hypotheses(s, h, false);
                     return h;
                 },
                 reverse});

    r.push_back({"T19", TheoremRegime::ShockMax, Relation::St, Extreme::Max,
                 "lambda weakly supermajorizes lambda* => X_{n:n} >=st Y_{n:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const Vec a = draw_in_cone(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = filled(n, rng.uniform(kBetaLo, kBetaHi));
                     auto [l, l2] = weak_sup_pair(n, kLambdaLo, kLambdaHi, c, rng);
                     const auto d = draw_shock(n, c, rng, false);
                     return Scenario{population(a, b, l, d.p), population(a, b, l2, d.p), c, d.h,
                                     0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     in_cone_hyp(h, "lambda*", lambdas(s.B), s.branch);
                     h.push_back({"common scalar beta", all_equal(betas(s.A)) &&
                                                            betas(s.A) == betas(s.B)});
                     h.push_back({"X and Y share alpha", alphas(s.A) == alphas(s.B)});
                     h.push_back({"lambda weakly supermajorizes lambda*",
                                  weak_supermajorizes(lambdas(s.A), lambdas(s.B))});
                     shock_hypotheses(s, h, false);
                     return h;
                 },
                 reverse});

    r.push_back({"T20", TheoremRegime::ShockMax, Relation::St, Extreme::Max,
                 "lambda weakly supermajorizes lambda*, common alpha => X_{n:n} >=st Y_{n:n}",
                 "The cone condition on the scalar alpha is read as a condition on beta.",
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const Vec a = filled(n, rng.uniform(kAlphaLo, kAlphaHi));
                     const Vec b = draw_in_cone(n, kBetaLo, kBetaHi, c, rng);
                     auto [l, l2] = weak_sup_pair(n, kLambdaLo, kLambdaHi, c, rng);
                     const auto d = draw_shock(n, c, rng, false);
                     return Scenario{population(a, b, l, d.p), population(a, b, l2, d.p), c, d.h,
                                     0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     in_cone_hyp(h, "lambda*", lambdas(s.B), s.branch);
                     h.push_back({"common scalar alpha", all_equal(alphas(s.A)) &&
                                                             alphas(s.A) == alphas(s.B)});
                     h.push_back({"X and Y share beta", betas(s.A) == betas(s.B)});
                     h.push_back({"lambda weakly supermajorizes lambda*",
                                  weak_supermajorizes(lambdas(s.A), lambdas(s.B))});
                     shock_hypotheses(s, h, false);
                     return h;
                 },
                 reverse});

    r.push_back({"T21", TheoremRegime::ShockMax, Relation::St, Extreme::Max,
                 "1/beta weakly submajorizes 1/beta* => X_{n:n} >=st Y_{n:n}", kShared,
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const Vec a = filled(n, rng.uniform(kAlphaLo, kAlphaHi));
                     auto [nu, nu2] = weak_sub_pair(n, kNuLo, kNuHi, opposite(c), rng);
                     const Vec l = draw_in_cone(n, kLambdaLo, kLambdaHi, c, rng);
                     const auto d = draw_shock(n, c, rng, false);
                     return Scenario{population(a, reciprocal(nu), l, d.p),
                                     population(a, reciprocal(nu2), l, d.p), c, d.h, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "beta*", betas(s.B), s.branch);
                     in_cone_hyp(h, "lambda", lambdas(s.A), s.branch);
                     h.push_back({"common scalar alpha", all_equal(alphas(s.A)) &&
                                                             alphas(s.A) == alphas(s.B)});
                     h.push_back({"X and Y share lambda", lambdas(s.A) == lambdas(s.B)});
                     h.push_back({"1/beta weakly submajorizes 1/beta*",
                                  weak_submajorizes(reciprocal(betas(s.A)),
                                                    reciprocal(betas(s.B)))});
                     shock_hypotheses(s, h, false);
                     return h;
                 },
                 reverse});

    // Shocked minima, hazard rate order.
    r.push_back({"T22", TheoremRegime::ShockMin, Relation::Hr, Extreme::Min,
                 "alpha majorizes alpha*, beta in D+, prod p >= (<=) prod p* => "
                 "X_{1:n} <=hr (>=hr) Y_{1:n}",
                 "The verdict includes the step of the survival ratio at zero caused by the "
                 "atoms; the continuous part is reported separately.",
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     auto [a, a2] = majorized_pair(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = draw_in_cone(n, kBetaLo, kBetaHi, Cone::D, rng);
                     const Vec l = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     auto [p, p2] = draw_shock_products(n, c, rng);
                     return Scenario{population(a, b, l, p), population(a2, b, l, p2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "alpha*", alphas(s.B), s.branch);
                     in_cone_hyp(h, "beta", betas(s.A), Cone::D);
                     h.push_back({"X and Y share beta, lambda",
                                  betas(s.A) == betas(s.B) && lambdas(s.A) == lambdas(s.B)});
                     product_hypothesis(s, h);
                     h.push_back({"alpha majorizes alpha*", majorizes(alphas(s.A), alphas(s.B))});
                     return h;
                 },
                 by_branch});

    r.push_back({"T23", TheoremRegime::ShockMin, Relation::Hr, Extreme::Min,
                 "beta majorizes beta*, prod p >= (<=) prod p* => X_{1:n} <=hr Y_{1:n}",
                 "The verdict includes the step of the survival ratio at zero caused by the "
                 "atoms; the continuous part is reported separately.",
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const Vec a = draw_in_cone(n, kAlphaLo, kAlphaHi, c, rng);
                     auto [b, b2] = majorized_pair(n, kBetaLo, kBetaHi, c, rng);
                     const Vec l = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     auto [p, p2] = draw_shock_products(n, c, rng);
                     return Scenario{population(a, b, l, p), population(a, b2, l, p2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     in_cone_hyp(h, "beta*", betas(s.B), s.branch);
                     h.push_back({"X and Y share alpha, lambda",
                                  alphas(s.A) == alphas(s.B) && lambdas(s.A) == lambdas(s.B)});
                     product_hypothesis(s, h);
                     h.push_back({"beta majorizes beta*", majorizes(betas(s.A), betas(s.B))});
                     return h;
                 },
                 forward});

    r.push_back({"T24", TheoremRegime::ShockMin, Relation::Hr, Extreme::Min,
                 "sum lambda >= sum lambda*, prod p >= (<=) prod p* => X_{1:n} <=hr Y_{1:n}",
                 "beta* is not defined in this setting; the cone condition is checked on alpha "
                 "and beta. The verdict includes the step of the survival ratio at zero.",
                 [](std::size_t n, Rng& rng) {
                     const Cone c = draw_cone(rng);
                     const Vec a = draw_in_cone(n, kAlphaLo, kAlphaHi, c, rng);
                     const Vec b = draw_in_cone(n, kBetaLo, kBetaHi, c, rng);
                     Vec l = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     Vec l2 = uniform_vec(n, kLambdaLo, kLambdaHi, rng);
                     if (sum(l) < sum(l2)) std::swap(l, l2);
                     auto [p, p2] = draw_shock_products(n, c, rng);
                     return Scenario{population(a, b, l, p), population(a, b, l2, p2), c, {}, 0};
                 },
                 [](const Scenario& s) {
                     std::vector<HypothesisResult> h;
                     in_cone_hyp(h, "alpha", alphas(s.A), s.branch);
                     in_cone_hyp(h, "beta", betas(s.A), s.branch);
                     h.push_back({"X and Y share alpha, beta",
                                  alphas(s.A) == alphas(s.B) && betas(s.A) == betas(s.B)});
                     product_hypothesis(s, h);
                     h.push_back({"sum lambda >= sum lambda*",
                                  sum(lambdas(s.A)) >= sum(lambdas(s.B))});
                     return h;
                 },
                 forward});

    return r;
}

}  // namespace

const char* to_string(TheoremRegime r) {
    switch (r) {
        case TheoremRegime::Dependent: return "dependent";
        case TheoremRegime::Independent: return "independent";
        case TheoremRegime::MultipleOutlier: return "multiple-outlier";
        case TheoremRegime::ShockMax: return "shock-max";
        case TheoremRegime::ShockMin: return "shock-min";
    }
    return "?";
}

const char* to_string(Direction d) { return d == Direction::Forward ? "A<=B" : "A>=B"; }

const char* to_string(Transform t) { return t == Transform::Identity ? "p" : "-ln(1-p)"; }

std::optional<Transform> parse_transform(const std::string& s) {
    if (s == "p" || s == "identity") return Transform::Identity;
    if (s == "-ln(1-p)" || s == "neglog") return Transform::NegLogComplement;
    return std::nullopt;
}

double apply(Transform t, double p) { return t == Transform::Identity ? p : -std::log1p(-p); }

double invert(Transform t, double u) { return t == Transform::Identity ? u : -std::expm1(-u); }

std::vector<double> apply(Transform t, const std::vector<double>& p) {
    std::vector<double> out;
    out.reserve(p.size());
    for (double e : p) out.push_back(apply(t, e));
    return out;
}

const std::vector<TheoremSpec>& theorem_registry() {
    static const std::vector<TheoremSpec> registry = build_registry();
    return registry;
}

const TheoremSpec* find_theorem(const std::string& id) {
    for (const auto& t : theorem_registry()) {
        if (t.id == id) return &t;
    }
    return nullptr;
}

}  // namespace gmorder
