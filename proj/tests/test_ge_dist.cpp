#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "gebayes/diagnostics.hpp"
#include "gebayes/ge_dist.hpp"
#include "gebayes/random_stream.hpp"
#include "gebayes/special_functions.hpp"

using namespace gebayes;

namespace {

double quad(const std::function<double(double)>& f, double lo, double hi) {
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, 12,
                                                                       1e-10);
}

}  // namespace

TEST_CASE("GEParams rejects invalid parameters") {
  CHECK_THROWS_AS(GEParams(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GEParams(-2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(GEParams(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(GEParams(1.0, std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(GEParams(std::numeric_limits<double>::infinity(), 1.0),
                  std::invalid_argument);
}

TEST_CASE("ge_cdf: exponential case, limits and the inverted median") {
  const GEParams expo(1.0, 1.0);
  CHECK(ge_cdf(std::log(2.0), expo) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(ge_cdf(0.0, expo) == 0.0);
  CHECK(ge_cdf(-3.0, expo) == 0.0);
  CHECK(ge_cdf(800.0, expo) == doctest::Approx(1.0).epsilon(1e-14));
  const GEParams p21(2.0, 1.0);
  // x = -ln(1 - 0.5^{1/2}), where the CDF crosses one half
  CHECK(ge_cdf(1.2279471772995157, p21) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_THROWS_AS(ge_cdf(std::nan(""), expo), std::domain_error);
  CHECK_THROWS_AS(ge_cdf(std::numeric_limits<double>::infinity(), expo),
                  std::domain_error);
}

TEST_CASE("ge_logpdf values and domain errors") {
  CHECK(ge_logpdf(1.0, GEParams(1.0, 1.0)) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ge_logpdf(1.0, GEParams(2.0, 1.0)) ==
        doctest::Approx(-0.76552796482713658).epsilon(1e-13));
  CHECK_THROWS_AS(ge_logpdf(0.0, GEParams(1.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(ge_logpdf(-1.0, GEParams(1.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(ge_logpdf(std::nan(""), GEParams(1.0, 1.0)), std::domain_error);
}

TEST_CASE("ge_logpdf integrates to one over the parameter grid") {
  // tanh-sinh handles the x^{alpha-1} endpoint singularity of the alpha < 1 cases
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      const GEParams p(alpha, lambda);
      const double mass = ts.integrate(
          [&](double x) { return x > 0.0 ? std::exp(ge_logpdf(x, p)) : 0.0; }, 0.0,
          200.0 / lambda, 1e-10);
      CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("alpha = 1 reduces to the exponential log density exactly") {
  for (double lambda : {0.25, 1.0, 3.5}) {
    for (double x : {0.1, 1.0, 7.3}) {
      CHECK(ge_logpdf(x, GEParams(1.0, lambda)) == std::log(lambda) - lambda * x);
    }
  }
}

TEST_CASE("ge_quantile: closed form and round trip") {
  CHECK(ge_quantile(0.5, GEParams(1.0, 1.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(ge_quantile(0.25, GEParams(1.0, 2.0)) ==
        doctest::Approx(0.14384103622589046).epsilon(1e-13));
  CHECK_THROWS_AS(ge_quantile(0.0, GEParams(1.0, 1.0)), std::domain_error);
  CHECK_THROWS_AS(ge_quantile(1.0, GEParams(1.0, 1.0)), std::domain_error);

  for (double alpha : {0.5, 1.0, 4.0}) {
    for (double lambda : {0.1, 1.0, 20.0}) {
      const GEParams p(alpha, lambda);
      for (int i = 1; i <= 99; ++i) {
        const double u = i / 100.0;
        CHECK(ge_cdf(ge_quantile(u, p), p) == doctest::Approx(u).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("ge_sample: determinism, exponential mean, K-S distance") {
  const GEParams expo(1.0, 1.0);
  RandomStream a(42), b(42);
  const auto s1 = ge_sample(expo, 5, a);
  const auto s2 = ge_sample(expo, 5, b);
  CHECK(s1 == s2);

  RandomStream rng(4242);
  const std::size_t m = 100000;
  const auto draws = ge_sample(expo, m, rng);
  double mean = 0.0;
  for (double d : draws) {
    CHECK(d > 0.0);
    mean += d;
  }
  mean /= static_cast<double>(m);
  CHECK(std::abs(mean - 1.0) < 3.0 / std::sqrt(static_cast<double>(m)));

  const GEParams p21(2.0, 1.0);
  RandomStream rng2(777);
  const auto draws2 = ge_sample(p21, m, rng2);
  const KsResult ks =
      ks_test(draws2, [&](double x) { return ge_cdf(x, p21); });
  CHECK(ks.statistic < 1.63 / std::sqrt(static_cast<double>(m)));
}

TEST_CASE("CDF is monotone for random parameter draws") {
  RandomStream rng(5);
  for (int i = 0; i < 200; ++i) {
    const GEParams p(0.1 + 5.0 * rng.uniform(), 0.1 + 5.0 * rng.uniform());
    double x1 = 10.0 * rng.uniform();
    double x2 = 10.0 * rng.uniform();
    if (x1 > x2) std::swap(x1, x2);
    CHECK(ge_cdf(x1, p) <= ge_cdf(x2, p));
  }
}

TEST_CASE("numerical derivative of the CDF matches the density") {
  for (double alpha : {0.5, 2.0, 5.0}) {
    const GEParams p(alpha, 1.3);
    for (double x = 0.3; x < 4.0; x += 0.37) {
      const double h = 1e-6;
      const double deriv = (ge_cdf(x + h, p) - ge_cdf(x - h, p)) / (2.0 * h);
      CHECK(deriv == doctest::Approx(std::exp(ge_logpdf(x, p))).epsilon(1e-5));
    }
  }
}

TEST_CASE("fisher_info: closed form against simple and quadrature oracles") {
  const FisherInfo ten = fisher_info(GEParams(3.0, 1.0), 10);
  CHECK(ten.i_aa == doctest::Approx(10.0 / 9.0).epsilon(1e-14));
  CHECK(ten.n == 10);

  const FisherInfo cross = fisher_info(GEParams(3.0, 2.0), 1);
  CHECK(cross.i_al == doctest::Approx(-5.0 / 24.0).epsilon(1e-12));

  // score-variance oracle: I_ll = E[(d/d lambda ln f)^2]
  const GEParams p(3.0, 1.0);
  const auto score_sq = [&](double x) {
    const double e = std::exp(-x);
    const double s = 1.0 + 2.0 * x * e / (-std::expm1(-x)) - x;
    return s * s * std::exp(ge_logpdf(x, p));
  };
  const double oracle = quad(score_sq, 1e-12, 120.0);
  CHECK(oracle == doctest::Approx(2.5).epsilon(1e-6));
  CHECK(fisher_info(p, 1).i_ll == doctest::Approx(oracle).epsilon(5e-3));
}

TEST_CASE("fisher_info: positive diagonal, symmetric storage, cross-term sign") {
  for (double alpha : {0.3, 0.8, 1.4, 3.0, 7.0}) {
    const FisherInfo fi = fisher_info(GEParams(alpha, 0.7), 4);
    CHECK(fi.i_aa > 0.0);
    CHECK(fi.i_ll > 0.0);
    // the numerator psi(2) - psi(alpha+1) flips sign at alpha = 1 while the
    // cross information itself stays negative
    const double numerator = digamma(2.0) - digamma(alpha + 1.0);
    if (alpha > 1.0) CHECK(numerator < 0.0);
    if (alpha < 1.0) CHECK(numerator > 0.0);
    CHECK(fi.i_al < 0.0);
  }
}

TEST_CASE("fisher_info refuses the removable singularities") {
  CHECK_THROWS_WITH_AS(static_cast<void>(fisher_info(GEParams(1.0, 1.0), 1)),
                       doctest::Contains("alpha = 1"), std::domain_error);
  CHECK_THROWS_WITH_AS(static_cast<void>(fisher_info(GEParams(1.0 + 5e-7, 1.0), 1)),
                       doctest::Contains("alpha = 1"), std::domain_error);
  CHECK_THROWS_WITH_AS(static_cast<void>(fisher_info(GEParams(2.0, 1.0), 1)),
                       doctest::Contains("alpha = 2"), std::domain_error);
  CHECK_NOTHROW(static_cast<void>(fisher_info(GEParams(1.01, 1.0), 1)));
}

TEST_CASE("lower and upper exponential bounds hold strictly on (0, 50]") {
  RandomStream rng(2024);
  for (int i = 0; i < 10000; ++i) {
    const double x = 50.0 * rng.uniform();
    const double v = -std::expm1(-x);  // 1 - e^{-x}
    CHECK(x - 0.5 * x * x < v);
    CHECK(v < x);
  }
}
