#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "gebayes/dataset.hpp"
#include "gebayes/posterior.hpp"

namespace gebayes {

enum class PointEstimator { median, mean };

double point_estimate(std::span<const double> draws, PointEstimator estimator);

struct FitOptions {
  PriorSpec prior;
  double r = 1.0;
  std::size_t draws = 10000;
  std::uint64_t seed = 42;
  PointEstimator estimator = PointEstimator::median;
};

// Bayes and maximum-likelihood fits of one dataset, with goodness-of-fit and
// sampler diagnostics.
struct FitReport {
  double bayes_alpha;
  double bayes_lambda;
  double bayes_ks_statistic;
  double bayes_ks_p_value;
  double geweke_z_alpha;
  double geweke_z_lambda;
  double acceptance_rate;

  double mle_alpha;
  double mle_lambda;
  double mle_ks_statistic;
  double mle_ks_p_value;
  double mle_loglik;
  bool mle_converged;

  std::size_t n;
  FitOptions options;
};

FitReport run_fit(const Dataset& data, const FitOptions& options);

// Human-readable report.
std::string fit_report_text(const FitReport& report);

// Machine-readable key/value document (JSON); byte-identical across runs
// with identical inputs and seed.
std::string fit_report_json(const FitReport& report);

}  // namespace gebayes
