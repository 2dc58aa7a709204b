#include "gebayes/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gebayes/errors.hpp"
#include "gebayes/optimize.hpp"
#include "gebayes/special_functions.hpp"

namespace gebayes {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double shape_of(const Dataset& data, const PriorSpec& prior) {
  return static_cast<double>(data.size()) - prior.a + 1.0;
}

void require_positive_shape(const Dataset& data, const PriorSpec& prior) {
  if (!(shape_of(data, prior) > 0.0)) {
    throw propriety_error(
        "conditional shape n - a + 1 must be positive: the sample size must "
        "exceed a - 1 for the posterior to be proper");
  }
}

}  // namespace

ProprietyReport check_propriety(const Dataset& data, const PriorSpec& prior) {
  ProprietyReport report;
  if (!(prior.a >= 1.0)) report.reasons.push_back("a >= 1 violated");
  if (!(prior.b <= 1.0)) report.reasons.push_back("b <= 1 violated");
  if (!(static_cast<double>(data.size()) > prior.a - 1.0)) {
    report.reasons.push_back("n > a - 1 violated");
  }
  report.proper = report.reasons.empty();
  return report;
}

LogRateTerms log_rate_terms_z(double z, const Dataset& data) {
  // Works on e = z + ln(x_i) so that lambda = e^z never has to be formed;
  // safe for any real z.
  double sum = 0.0;
  for (double lx : data.log_values()) {
    const double e = z + lx;
    double term;
    if (e > 700.0) {
      term = 0.0;  // e^{-u} underflows; ln(1 - e^{-u}) rounds to 0
    } else {
      const double u = std::exp(e);
      // below u ~ 1e-308, ln(1 - e^{-u}) = ln(u) + O(u)
      term = (u > 0.0) ? log1mexp(u) : e;
    }
    sum += term;
  }
  const double rate = -sum;
  if (rate > 0.0) {
    return {sum, std::log(rate)};
  }
  // Every factor rounded to 1: rate = sum_i e^{-u_i}, evaluated as a
  // log-sum-exp anchored at the smallest u_i.
  const double u_min = std::exp(z + data.min_log_value());
  if (!std::isfinite(u_min)) return {0.0, kNegInf};
  double acc = 0.0;
  for (double lx : data.log_values()) {
    const double e = z + lx;
    const double u = (e > 700.0) ? std::numeric_limits<double>::infinity()
                                 : std::exp(e);
    acc += std::exp(u_min - u);  // largest term contributes 1
  }
  return {0.0, -u_min + std::log(acc)};
}

double log_joint_posterior(double alpha, double lambda, const Dataset& data,
                           const PriorSpec& prior) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("log_joint_posterior: alpha must be positive");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("log_joint_posterior: lambda must be positive");
  }
  const double n = static_cast<double>(data.size());
  const LogRateTerms terms = log_rate_terms_z(std::log(lambda), data);
  return (n - prior.a) * std::log(alpha) + (n - prior.b) * std::log(lambda) +
         (alpha - 1.0) * terms.sum_log1mexp - lambda * data.sum();
}

GammaParams conditional_alpha_params(double lambda, const Dataset& data,
                                     const PriorSpec& prior) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("conditional_alpha_params: lambda must be positive");
  }
  require_positive_shape(data, prior);
  const LogRateTerms terms = log_rate_terms_z(std::log(lambda), data);
  const double rate = std::exp(terms.log_rate);
  if (!(rate > 0.0)) {
    throw numerical_error(
        "conditional_alpha_params: Gamma rate underflows at this lambda");
  }
  return {shape_of(data, prior), rate};
}

double log_marginal_lambda_z(double z, const Dataset& data, const PriorSpec& prior) {
  require_positive_shape(data, prior);
  if (!std::isfinite(z)) return kNegInf;
  // Far right tail: by n > a - 1 the e^{-lambda sum x} factor wins over the
  // rate^{-(n-a+1)} growth; past this point the kernel is far below double
  // resolution either way.
  if (z + data.min_log_value() > 30.0) return kNegInf;

  const double n = static_cast<double>(data.size());
  const double shape = shape_of(data, prior);
  const LogRateTerms terms = log_rate_terms_z(z, data);
  if (!std::isfinite(terms.log_rate)) return kNegInf;

  const double lambda_sum_x = std::exp(z) * data.sum();
  const double log_marg = (n - prior.b) * z - lambda_sum_x - terms.sum_log1mexp +
                          std::lgamma(shape) - shape * terms.log_rate;
  return log_marg + z;  // Jacobian of z = ln(lambda)
}

double log_marginal_lambda(double lambda, const Dataset& data, const PriorSpec& prior) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("log_marginal_lambda: lambda must be positive");
  }
  const double z = std::log(lambda);
  return log_marginal_lambda_z(z, data, prior) - z;
}

PosteriorSummary quadrature_posterior_summary(const Dataset& data, const PriorSpec& prior,
                                              const QuadratureOptions& options) {
  const ProprietyReport gate = check_propriety(data, prior);
  if (!gate.proper) {
    std::string msg = "quadrature_posterior_summary: posterior is not proper:";
    for (const auto& r : gate.reasons) msg += " [" + r + "]";
    throw propriety_error(msg);
  }

  const auto log_p = [&](double z) { return log_marginal_lambda_z(z, data, prior); };

  // Log-spaced lambda scan over [1e-8, 1e8] * (n / sum x) == uniform z grid.
  const double z_center = std::log(static_cast<double>(data.size()) / data.sum());
  const double half_span = 8.0 * 2.302585092994046;
  const double z_min = z_center - half_span;
  const double z_max = z_center + half_span;
  const int scan = std::max(options.scan_points, 16);
  const double step = (z_max - z_min) / (scan - 1);

  std::vector<double> vals(scan);
  int imax = -1;
  for (int i = 0; i < scan; ++i) {
    vals[i] = log_p(z_min + i * step);
    if (imax < 0 || vals[i] > vals[imax]) imax = i;
  }
  if (!std::isfinite(vals[imax])) {
    throw numerical_error("quadrature_posterior_summary: kernel vanished on the scan range");
  }
  if (imax == 0 || imax == scan - 1) {
    throw numerical_error(
        "quadrature_posterior_summary: posterior mode not bracketed by the "
        "scanned lambda range [" + std::to_string(std::exp(z_min)) + ", " +
        std::to_string(std::exp(z_max)) + "]");
  }

  const ScalarMax mode = golden_section_max(log_p, z_min + (imax - 1) * step,
                                            z_min + (imax + 1) * step, 1e-12);
  const double log_max = std::max(mode.fx, vals[imax]);

  // Expand from the mode until the kernel drops nat_drop below the max,
  // capped at the scan range.
  int ilo = imax;
  while (ilo > 0 && vals[ilo] > log_max - options.nat_drop) --ilo;
  int ihi = imax;
  while (ihi < scan - 1 && vals[ihi] > log_max - options.nat_drop) ++ihi;
  const double z_lo = z_min + ilo * step;
  const double z_hi = z_min + ihi * step;

  using quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  const auto integrate = [&](const std::function<double(double)>& f, double lo,
                             double hi) {
    return quad::integrate(f, lo, hi, 15, options.rel_tol);
  };

  const auto shifted = [&](double z) { return std::exp(log_p(z) - log_max); };
  const double m0 = integrate(shifted, z_lo, z_hi);
  if (!(m0 > 0.0) || !std::isfinite(m0)) {
    throw numerical_error("quadrature_posterior_summary: normalization integral failed");
  }

  const double m_lambda =
      integrate([&](double z) { return std::exp(z) * shifted(z); }, z_lo, z_hi);

  const double shape = shape_of(data, prior);
  const double m_alpha = integrate(
      [&](double z) {
        return shape * std::exp(-log_rate_terms_z(z, data).log_rate) * shifted(z);
      },
      z_lo, z_hi);

  // Median by bisection on the partial mass.
  double lo = z_lo, hi = z_hi;
  for (int it = 0; it < 80 && hi - lo > 1e-12 * (1.0 + std::abs(lo) + std::abs(hi));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (integrate(shifted, z_lo, mid) < 0.5 * m0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double z_median = 0.5 * (lo + hi);

  PosteriorSummary out;
  out.log_norm_const = log_max + std::log(m0);
  out.norm_const = std::exp(out.log_norm_const);
  out.mean_lambda = m_lambda / m0;
  out.median_lambda = std::exp(z_median);
  out.mean_alpha = m_alpha / m0;
  return out;
}

}  // namespace gebayes
