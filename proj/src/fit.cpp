#include "gebayes/fit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gebayes/diagnostics.hpp"
#include "gebayes/ge_dist.hpp"
#include "gebayes/mle.hpp"
#include "gebayes/rou_sampler.hpp"

namespace gebayes {

double point_estimate(std::span<const double> draws, PointEstimator estimator) {
  if (estimator == PointEstimator::median) {
    return sample_quantile(draws, 0.5);
  }
  double mean = 0.0;
  for (double d : draws) mean += d;
  return mean / static_cast<double>(draws.size());
}

FitReport run_fit(const Dataset& data, const FitOptions& options) {
  RandomStream rng(options.seed);
  const PosteriorSample sample =
      sample_posterior(data, options.prior, options.r, options.draws, rng);

  FitReport report;
  report.bayes_alpha = point_estimate(sample.alphas, options.estimator);
  report.bayes_lambda = point_estimate(sample.lambdas, options.estimator);
  report.geweke_z_alpha = geweke_z(sample.alphas);
  report.geweke_z_lambda = geweke_z(sample.lambdas);
  report.acceptance_rate = sample.acceptance_rate;

  const MleFit mle = fit_mle(data);
  report.mle_alpha = mle.alpha_hat;
  report.mle_lambda = mle.lambda_hat;
  report.mle_loglik = mle.loglik;
  report.mle_converged = mle.converged;

  const GEParams bayes_params(report.bayes_alpha, report.bayes_lambda);
  const KsResult ks_bayes =
      ks_test(data, [&](double x) { return ge_cdf(x, bayes_params); });
  report.bayes_ks_statistic = ks_bayes.statistic;
  report.bayes_ks_p_value = ks_bayes.p_value;

  const GEParams mle_params(report.mle_alpha, report.mle_lambda);
  const KsResult ks_mle =
      ks_test(data, [&](double x) { return ge_cdf(x, mle_params); });
  report.mle_ks_statistic = ks_mle.statistic;
  report.mle_ks_p_value = ks_mle.p_value;

  report.n = data.size();
  report.options = options;
  return report;
}

std::string fit_report_text(const FitReport& r) {
  std::ostringstream os;
  os.precision(6);
  os << "dataset: n = " << r.n << "\n";
  os << "prior: a = " << r.options.prior.a << ", b = " << r.options.prior.b
     << "   sampler: r = " << r.options.r << ", M = " << r.options.draws
     << ", seed = " << r.options.seed << ", estimator = "
     << (r.options.estimator == PointEstimator::median ? "median" : "mean")
     << "\n\n";
  os << "method   alpha_hat   lambda_hat    K-S stat   p-value\n";
  os << "bayes    " << r.bayes_alpha << "    " << r.bayes_lambda << "    "
     << r.bayes_ks_statistic << "   " << r.bayes_ks_p_value << "\n";
  os << "mle      " << r.mle_alpha << "    " << r.mle_lambda << "    "
     << r.mle_ks_statistic << "   " << r.mle_ks_p_value << "\n\n";
  os << "bayes diagnostics: acceptance_rate = " << r.acceptance_rate
     << ", geweke_z_alpha = " << r.geweke_z_alpha
     << ", geweke_z_lambda = " << r.geweke_z_lambda << "\n";
  os << "mle diagnostics: loglik = " << r.mle_loglik << ", converged = "
     << (r.mle_converged ? "yes" : "no") << "\n";
  return os.str();
}

std::string fit_report_json(const FitReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["seed"] = r.options.seed;
  j["r"] = r.options.r;
  j["M"] = r.options.draws;
  j["prior_a"] = r.options.prior.a;
  j["prior_b"] = r.options.prior.b;
  j["estimator"] =
      r.options.estimator == PointEstimator::median ? "median" : "mean";
  j["bayes"] = {{"method", "bayes"},
                {"alpha_hat", r.bayes_alpha},
                {"lambda_hat", r.bayes_lambda},
                {"ks_statistic", r.bayes_ks_statistic},
                {"ks_p_value", r.bayes_ks_p_value},
                {"geweke_z_alpha", r.geweke_z_alpha},
                {"geweke_z_lambda", r.geweke_z_lambda},
                {"acceptance_rate", r.acceptance_rate}};
  j["mle"] = {{"method", "mle"},
              {"alpha_hat", r.mle_alpha},
              {"lambda_hat", r.mle_lambda},
              {"ks_statistic", r.mle_ks_statistic},
              {"ks_p_value", r.mle_ks_p_value},
              {"loglik", r.mle_loglik},
              {"converged", r.mle_converged}};
  return j.dump(2) + "\n";
}

}  // namespace gebayes
