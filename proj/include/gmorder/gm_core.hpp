#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace gmorder {

// Largest admissible beta*x. Beyond it exp(beta*x) is within a few decades of
// overflow and every evaluation raises EvaluationError instead of returning inf.
inline constexpr double kExponentCap = 700.0;

// Parameters of a Gompertz-Makeham lifetime with hazard alpha*exp(beta*x) + lambda.
// beta = 0 and lambda = 0 are accepted; beta = 0 is the exponential limit.
class GMParams {
public:
    GMParams(double alpha, double beta, double lambda);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double lambda() const { return lambda_; }

    friend bool operator==(const GMParams&, const GMParams&) = default;

private:
    double alpha_;
    double beta_;
    double lambda_;
};

// (exp(beta*x) - 1) / beta, equal to x at beta = 0.
double gompertz_growth(double beta, double x);

// Cumulative hazard lambda*x + alpha*(exp(beta*x) - 1)/beta.
double cumulative_hazard(const GMParams& p, double x);

double hazard(const GMParams& p, double x);
double log_survival(const GMParams& p, double x);
double survival(const GMParams& p, double x);
double pdf(const GMParams& p, double x);
double cdf(const GMParams& p, double x);

// Inverse cdf on [0, 1). Newton steps on the cumulative hazard, safeguarded by
// bisection inside a bracket grown by doubling from x = 1.
double quantile(const GMParams& p, double q);

// Inverse-cdf draws driven by Rng(seed).
std::vector<double> sample(const GMParams& p, std::uint64_t seed, std::size_t n);

}  // namespace gmorder
