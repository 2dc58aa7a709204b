#include "gebayes/ge_dist.hpp"

#include <cmath>
#include <stdexcept>

#include "gebayes/special_functions.hpp"

namespace gebayes {

namespace {

constexpr double kEuler = 0.5772156649015328606;
constexpr double kPiSq = 9.869604401089358619;

void validate_params(double alpha, double lambda) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("GEParams: alpha must be positive and finite");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("GEParams: lambda must be positive and finite");
  }
}

}  // namespace

GEParams::GEParams(double alpha_, double lambda_) : alpha(alpha_), lambda(lambda_) {
  validate_params(alpha, lambda);
}

double ge_cdf(double x, const GEParams& p) {
  if (!std::isfinite(x)) {
    throw std::domain_error("ge_cdf: x must be finite");
  }
  if (x <= 0.0) return 0.0;
  return std::exp(p.alpha * log1mexp(p.lambda * x));
}

double ge_logpdf(double x, const GEParams& p) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("ge_logpdf: x must be positive and finite");
  }
  const double u = p.lambda * x;
  return std::log(p.alpha) + std::log(p.lambda) + (p.alpha - 1.0) * log1mexp(u) - u;
}

double ge_quantile(double prob, const GEParams& p) {
  if (!(prob > 0.0) || !(prob < 1.0)) {
    throw std::domain_error("ge_quantile: prob must lie in (0, 1)");
  }
  // 1 - prob^{1/alpha} = 1 - e^{-t} with t = -ln(prob)/alpha
  const double t = -std::log(prob) / p.alpha;
  return -log1mexp(t) / p.lambda;
}

std::vector<double> ge_sample(const GEParams& p, std::size_t m, RandomStream& rng) {
  if (m < 1) {
    throw std::invalid_argument("ge_sample: m must be at least 1");
  }
  std::vector<double> out;
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    out.push_back(ge_quantile(rng.uniform(), p));
  }
  return out;
}

FisherInfo fisher_info(const GEParams& p, int n) {
  if (n < 1) {
    throw std::invalid_argument("fisher_info: n must be at least 1");
  }
  const double alpha = p.alpha;
  const double lambda = p.lambda;
  const double tol = 1e-6;
  if (std::abs(alpha - 1.0) <= tol) {
    throw std::domain_error(
        "fisher_info: the closed form is singular at alpha = 1 (excluded)");
  }
  if (std::abs(alpha - 2.0) <= tol) {
    throw std::domain_error(
        "fisher_info: the closed form is singular at alpha = 2 (excluded)");
  }
  const double nn = static_cast<double>(n);
  const double psi_a = digamma(alpha);
  const double i_aa = nn / (alpha * alpha);
  const double i_al =
      nn * (digamma(2.0) - digamma(alpha + 1.0)) / (lambda * (alpha - 1.0));
  const double bracket = kPiSq - 6.0 * trigamma(alpha) - 12.0 * kEuler -
                         12.0 * psi_a + 6.0 * kEuler * kEuler +
                         12.0 * kEuler * psi_a + 6.0 * psi_a * psi_a;
  const double i_ll = nn / (lambda * lambda) +
                      nn * alpha * bracket / (6.0 * lambda * lambda * (alpha - 2.0));
  return {i_aa, i_al, i_ll, n};
}

}  // namespace gebayes
