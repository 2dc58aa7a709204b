#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gebayes/dataset.hpp"

namespace gebayes {

enum class KsMethod { exact, asymptotic };

struct KsResult {
  double statistic;
  double p_value;
  std::size_t n;
  KsMethod method;
};

// One-sample Kolmogorov-Smirnov test of the sample against a hypothesized
// CDF. Exact p-value (matrix-power method) for n <= 100, the asymptotic
// Kolmogorov series beyond. Ties in the sample are permitted.
KsResult ks_test(std::span<const double> sample,
                 const std::function<double(double)>& cdf);
KsResult ks_test(const Dataset& data, const std::function<double(double)>& cdf);

// Geweke convergence z-score comparing the means of the first frac_first and
// last frac_last segments, using plain segment sample variances (the chains
// this library produces are iid draws, so no spectral correction is applied).
double geweke_z(std::span<const double> chain, double frac_first = 0.1,
                double frac_last = 0.5);

// Autocorrelation estimates for lags 0..max_lag with the biased
// (divide-by-total-sum) normalization; acf[0] == 1.
std::vector<double> acf(std::span<const double> chain, std::size_t max_lag);

struct ScaledErrors {
  double sbias;
  double srmse;
};

// Scaled bias (mean(est) - truth)/truth and scaled RMSE
// sqrt(mean((est - truth)^2))/|truth|.
ScaledErrors scaled_errors(std::span<const double> estimates, double truth);

// Order-statistic quantile with linear interpolation (q in [0, 1]).
double sample_quantile(std::span<const double> values, double q);

}  // namespace gebayes
