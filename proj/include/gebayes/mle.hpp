#pragma once

#include "gebayes/dataset.hpp"

namespace gebayes {

struct MleFit {
  double alpha_hat;
  double lambda_hat;
  double loglik;
  int iterations;
  bool converged;
};

// Closed-form inner maximizer of the log likelihood over alpha at fixed
// lambda: -n / sum ln(1-e^{-lambda x_i}).
double alpha_hat_given_lambda(double lambda, const Dataset& data);

// Log likelihood profiled over alpha: l(alpha_hat(lambda), lambda).
double profile_loglik(double lambda, const Dataset& data);

// Maximum likelihood fit by a 512-point log-spaced scan of the profile over
// [1e-6, 1e4] * (n / sum x), refined by golden section to relative tolerance
// 1e-10 in lambda. Throws numerical_error when the maximum sits on the scan
// boundary.
MleFit fit_mle(const Dataset& data);

}  // namespace gebayes
