#pragma once

#include <cstddef>
#include <vector>

#include "gebayes/random_stream.hpp"

namespace gebayes {

// Parameter pair of the generalized exponential law
// F(x) = (1 - e^{-lambda x})^alpha, x > 0.
struct GEParams {
  double alpha;   // shape, dimensionless
  double lambda;  // scale rate, 1/units-of-x

  GEParams(double alpha_, double lambda_);
};

// Entries of the symmetric 2x2 Fisher information for n observations.
struct FisherInfo {
  double i_aa;
  double i_al;
  double i_ll;
  int n;
};

// CDF; x <= 0 returns 0 by convention, non-finite x is rejected.
double ge_cdf(double x, const GEParams& p);

// Log density ln(alpha) + ln(lambda) + (alpha-1) ln(1-e^{-lambda x}) - lambda x;
// x must be positive and finite.
double ge_logpdf(double x, const GEParams& p);

// Closed-form inverse CDF, prob in (0, 1).
double ge_quantile(double prob, const GEParams& p);

// m independent draws by inverse-CDF sampling; deterministic given the stream.
std::vector<double> ge_sample(const GEParams& p, std::size_t m, RandomStream& rng);

// Fisher information for n observations. The closed form has removable
// singularities at alpha = 1 and alpha = 2, which are rejected rather than
// patched (tolerance 1e-6).
FisherInfo fisher_info(const GEParams& p, int n);

}  // namespace gebayes
