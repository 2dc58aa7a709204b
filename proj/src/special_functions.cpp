#include "gebayes/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gebayes {

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("digamma: argument must be positive and finite");
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_{2k}/(2k x^{2k})
  const double inv = 1.0 / x;
  const double t = inv * inv;
  const double series =
      t * (1.0 / 12 -
           t * (1.0 / 120 -
                t * (1.0 / 252 -
                     t * (1.0 / 240 -
                          t * (1.0 / 132 - t * (691.0 / 32760 - t * (1.0 / 12)))))));
  return acc + std::log(x) - 0.5 * inv - series;
}

double trigamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("trigamma: argument must be positive and finite");
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  // psi'(x) ~ 1/x + 1/(2x^2) + sum B_{2k}/x^{2k+1}
  const double inv = 1.0 / x;
  const double t = inv * inv;
  const double series =
      inv * t *
      (1.0 / 6 -
       t * (1.0 / 30 -
            t * (1.0 / 42 -
                 t * (1.0 / 30 - t * (5.0 / 66 - t * (691.0 / 2730 - t * (7.0 / 6)))))));
  return acc + inv + 0.5 * t + series;
}

double log1mexp(double u) {
  if (u < 0.0 || std::isnan(u)) {
    throw std::domain_error("log1mexp: argument must be nonnegative");
  }
  if (u == 0.0) return -std::numeric_limits<double>::infinity();
  if (u >= 0.6931471805599453) return std::log1p(-std::exp(-u));
  return std::log(-std::expm1(-u));
}

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z * 0.7071067811865476);
}

}  // namespace gebayes
