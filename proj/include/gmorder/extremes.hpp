#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gmorder/archimedean.hpp"
#include "gmorder/gm_core.hpp"

namespace gmorder {

enum class Regime { Dependent, Independent, Shock };
enum class Extreme { Min, Max };
enum class CurveKind { MinSurvival, MaxCdf, MinHazard, MinDensity, MaxDensity };

const char* to_string(Regime r);
const char* to_string(Extreme e);
const char* to_string(CurveKind k);

// One sample of n GM lifetimes. Shocks (Bernoulli masks with success
// probabilities p_i) and an Archimedean copula are mutually exclusive.
class PopulationSpec {
public:
    explicit PopulationSpec(std::vector<GMParams> members,
                            std::optional<std::vector<double>> shock_p = std::nullopt,
                            std::optional<Generator> copula = std::nullopt);

    const std::vector<GMParams>& members() const { return members_; }
    const std::optional<std::vector<double>>& shock_p() const { return shock_p_; }
    const std::optional<Generator>& copula() const { return copula_; }
    std::size_t size() const { return members_.size(); }
    Regime regime() const;

    // Product of the shock probabilities (1 without shocks).
    double shock_product() const;
    // Product of (1 - p_i) (0 without shocks).
    double shock_complement_product() const;

private:
    std::vector<GMParams> members_;
    std::optional<std::vector<double>> shock_p_;
    std::optional<Generator> copula_;
};

// Survival of X_{1:n}. Under shocks this is right-continuous: the value at 0
// is prod p_i, the mass 1 - prod p_i sitting at zero.
double min_survival(const PopulationSpec& pop, double x);
// Sum of member hazards; for shocked samples the hazard of the continuous part.
// 1 - min_survival, accurate when small.
double min_cdf(const PopulationSpec& pop, double x);
double min_hazard(const PopulationSpec& pop, double x);
double min_density(const PopulationSpec& pop, double x);
// Cdf of X_{n:n}; under shocks max_cdf(0) = prod (1 - p_i).
double max_cdf(const PopulationSpec& pop, double x);
// 1 - max_cdf, accurate in the upper tail.
double max_survival(const PopulationSpec& pop, double x);
double max_density(const PopulationSpec& pop, double x);

// P(X >= x) for X = I·U with P(I = 1) = p: 1 at x = 0, p·S(x) beyond.
double shock_survival(const GMParams& member, double p, double x);

// Probability mass at zero of the extreme (nonzero only under shocks).
double atom_at_zero(const PopulationSpec& pop, Extreme e);

// Evaluable curve of one extreme of one population.
struct ExtremeCurve {
    CurveKind kind;
    Regime regime;
    double atom_at_zero = 0.0;
    std::function<double(double)> eval;
    // 1 - eval computed without cancellation (survival and cdf curves only).
    std::function<double(double)> complement;

    double operator()(double x) const { return eval(x); }
};

ExtremeCurve make_curve(const PopulationSpec& pop, CurveKind kind);

// Smallest x (doubling then bisection) beyond which the extreme is negligible:
// min_survival < 1e-12 for minima, max_survival < 1e-12 for maxima.
double upper_support(const PopulationSpec& pop, Extreme e, double threshold = 1e-12);

}  // namespace gmorder
