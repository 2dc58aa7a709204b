#include "gebayes/mle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gebayes/errors.hpp"
#include "gebayes/optimize.hpp"
#include "gebayes/posterior.hpp"

namespace gebayes {

namespace {

double profile_at_z(double z, const Dataset& data) {
  // l(alpha_hat(lambda), lambda) with lambda = e^z. With alpha_hat = n/rate
  // and S = -rate, the term (alpha_hat - 1) S collapses to rate - n, which
  // stays finite deep into both tails.
  const double n = static_cast<double>(data.size());
  const LogRateTerms terms = log_rate_terms_z(z, data);
  const double rate = std::exp(terms.log_rate);
  return n * (std::log(n) - terms.log_rate) + n * z + (rate - n) -
         std::exp(z) * data.sum();
}

}  // namespace

double alpha_hat_given_lambda(double lambda, const Dataset& data) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("alpha_hat_given_lambda: lambda must be positive");
  }
  const double n = static_cast<double>(data.size());
  return n * std::exp(-log_rate_terms_z(std::log(lambda), data).log_rate);
}

double profile_loglik(double lambda, const Dataset& data) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("profile_loglik: lambda must be positive");
  }
  return profile_at_z(std::log(lambda), data);
}

MleFit fit_mle(const Dataset& data) {
  const auto f = [&](double z) { return profile_at_z(z, data); };

  const double z_center = std::log(static_cast<double>(data.size()) / data.sum());
  const double z_min = z_center + std::log(1e-6);
  const double z_max = z_center + std::log(1e4);
  constexpr int kScan = 512;
  const double step = (z_max - z_min) / (kScan - 1);

  int imax = 0;
  double vmax = f(z_min);
  for (int i = 1; i < kScan; ++i) {
    const double v = f(z_min + i * step);
    if (v > vmax) {
      vmax = v;
      imax = i;
    }
  }
  if (imax == 0 || imax == kScan - 1) {
    throw numerical_error(
        "fit_mle: profile maximum at the scan boundary (lambda in [" +
        std::to_string(std::exp(z_min)) + ", " + std::to_string(std::exp(z_max)) +
        "]); the likelihood has no interior maximum on this range");
  }

  // Absolute tolerance in z equals relative tolerance in lambda.
  const ScalarMax top = golden_section_max(f, z_min + (imax - 1) * step,
                                           z_min + (imax + 1) * step, 1e-10);

  // Near the flat top the profile is noise-indistinguishable over a band far
  // wider than the golden-section interval; one parabolic fit with samples
  // outside that band pins the vertex.
  double z_hat = top.x;
  double f_hat = top.fx;
  {
    const double h = 1e-4;
    const double f_lo = f(top.x - h);
    const double f_hi = f(top.x + h);
    const double denom = f_lo - 2.0 * top.fx + f_hi;
    if (denom < 0.0) {
      const double vertex = top.x + 0.5 * h * (f_lo - f_hi) / denom;
      if (std::abs(vertex - top.x) <= h) {
        z_hat = vertex;
        f_hat = std::max(f_hat, f(vertex));
      }
    }
  }

  MleFit fit;
  fit.lambda_hat = std::exp(z_hat);
  fit.alpha_hat = alpha_hat_given_lambda(fit.lambda_hat, data);
  fit.loglik = f_hat;
  fit.iterations = top.iterations;
  const double h = 1e-5;
  const double deriv = (f(top.x + h) - f(top.x - h)) / (2.0 * h);
  fit.converged = std::abs(deriv) <= 1e-6 * static_cast<double>(data.size());
  return fit;
}

}  // namespace gebayes
