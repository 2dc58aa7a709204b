#pragma once

#include <string>
#include <vector>

#include "gebayes/dataset.hpp"

namespace gebayes {

// Hyperparameters of the vague prior family pi(alpha, lambda) = 1/(alpha^a lambda^b).
// The default is the independence Jeffreys prior a = b = 1.
struct PriorSpec {
  double a = 1.0;
  double b = 1.0;
};

struct ProprietyReport {
  bool proper = false;
  std::vector<std::string> reasons;  // empty iff proper
};

// Sufficient conditions for a proper joint posterior: a >= 1, b <= 1 and
// n > a - 1. Each violated condition is named in the report.
ProprietyReport check_propriety(const Dataset& data, const PriorSpec& prior);

// Unnormalized log kernel of the joint posterior:
// (n-a) ln(alpha) + (n-b) ln(lambda) + (alpha-1) sum ln(1-e^{-lambda x_i}) - lambda sum x_i.
double log_joint_posterior(double alpha, double lambda, const Dataset& data,
                           const PriorSpec& prior);

// Shape/rate pair of a Gamma law (density ~ t^{shape-1} e^{-rate t}).
struct GammaParams {
  double shape;
  double rate;
};

// Exact conditional posterior of alpha given lambda:
// Gamma(n - a + 1, -sum ln(1-e^{-lambda x_i})).
GammaParams conditional_alpha_params(double lambda, const Dataset& data,
                                     const PriorSpec& prior);

// Unnormalized log kernel of the lambda marginal posterior.
double log_marginal_lambda(double lambda, const Dataset& data, const PriorSpec& prior);

// The same kernel after the change of variable z = ln(lambda), i.e.
// log_marginal_lambda(e^z) + z. Total on the whole real line: returns -inf
// where the kernel is below double resolution, never NaN or +inf.
double log_marginal_lambda_z(double z, const Dataset& data, const PriorSpec& prior);

// sum_i ln(1-e^{-lambda x_i}) evaluated at lambda = e^z, together with the log
// of the conditional Gamma rate. Switches to the asymptotic form
// rate = sum e^{-lambda x_i} once every factor rounds to 1, so log_rate stays
// finite far into the right tail.
struct LogRateTerms {
  double sum_log1mexp;  // S <= 0
  double log_rate;      // ln(-S), by the asymptotic route when -S underflows
};
LogRateTerms log_rate_terms_z(double z, const Dataset& data);

struct PosteriorSummary {
  double norm_const;      // integral of exp(log_marginal_lambda) over (0, inf)
  double log_norm_const;
  double mean_lambda;
  double median_lambda;
  double mean_alpha;
};

struct QuadratureOptions {
  double nat_drop = 50.0;  // bracket where the kernel is within this of its max
  double rel_tol = 1e-10;
  int scan_points = 2048;
};

// Adaptive-quadrature summary of the posterior; the independent oracle for
// the sampler. Finiteness of norm_const is the numerical witness of the
// propriety conditions.
PosteriorSummary quadrature_posterior_summary(const Dataset& data, const PriorSpec& prior,
                                              const QuadratureOptions& options = {});

}  // namespace gebayes
