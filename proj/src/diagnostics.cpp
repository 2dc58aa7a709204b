#include "gebayes/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gebayes/errors.hpp"

namespace gebayes {

namespace {

// P(D_n < d) for the one-sample Kolmogorov-Smirnov statistic by the
// matrix-power method of Marsaglia, Tsang and Wang (2003). The (2k-1)^2
// matrix here is tiny for the sample sizes this library meets, so plain
// row-major vectors suffice.
struct ScaledMatrix {
  std::vector<double> a;  // m x m, row major
  int m = 0;
  double exponent = 0.0;  // matrix is implicitly a * 10^exponent

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * m + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * m + j]; }
};

ScaledMatrix multiply(const ScaledMatrix& x, const ScaledMatrix& y) {
  ScaledMatrix out;
  out.m = x.m;
  out.a.assign(static_cast<std::size_t>(x.m) * x.m, 0.0);
  for (int i = 0; i < x.m; ++i) {
    for (int k = 0; k < x.m; ++k) {
      const double v = x.at(i, k);
      if (v == 0.0) continue;
      for (int j = 0; j < x.m; ++j) {
        out.at(i, j) += v * y.at(k, j);
      }
    }
  }
  out.exponent = x.exponent + y.exponent;
  const int mid = x.m / 2;
  if (out.at(mid, mid) > 1e140) {
    for (double& v : out.a) v *= 1e-140;
    out.exponent += 140;
  }
  return out;
}

ScaledMatrix matrix_power(const ScaledMatrix& h, int n) {
  if (n == 1) return h;
  ScaledMatrix half = matrix_power(h, n / 2);
  ScaledMatrix out = multiply(half, half);
  if (n % 2 == 1) out = multiply(h, out);
  return out;
}

double ks_exact_cdf(int n, double d) {
  if (d <= 0.0) return 0.0;
  if (d >= 1.0) return 1.0;
  const int k = static_cast<int>(n * d) + 1;
  const int m = 2 * k - 1;
  const double h = k - n * d;

  ScaledMatrix H;
  H.m = m;
  H.a.assign(static_cast<std::size_t>(m) * m, 0.0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i - j + 1 >= 0) H.at(i, j) = 1.0;
    }
  }
  for (int i = 0; i < m; ++i) {
    H.at(i, 0) -= std::pow(h, i + 1);
    H.at(m - 1, i) -= std::pow(h, m - i);
  }
  H.at(m - 1, 0) += (2.0 * h - 1.0 > 0.0) ? std::pow(2.0 * h - 1.0, m) : 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i - j + 1 > 0) {
        for (int g = 1; g <= i - j + 1; ++g) H.at(i, j) /= g;
      }
    }
  }

  ScaledMatrix Q = matrix_power(H, n);
  double s = Q.at(k - 1, k - 1);
  double exponent = Q.exponent;
  for (int i = 1; i <= n; ++i) {
    s = s * i / n;
    if (s < 1e-140) {
      s *= 1e140;
      exponent -= 140;
    }
  }
  return s * std::pow(10.0, exponent);
}

// Asymptotic survival function Q(t) = 2 sum (-1)^{k-1} e^{-2 k^2 t^2}.
double ks_asymptotic_p(double t) {
  if (t <= 0.0) return 1.0;
  double acc = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 200; ++k) {
    const double term = std::exp(-2.0 * k * k * t * t);
    acc += sign * term;
    if (term < 1e-16 * std::abs(acc)) break;
    sign = -sign;
  }
  return std::clamp(2.0 * acc, 0.0, 1.0);
}

void segment_stats(std::span<const double> seg, double& mean, double& var) {
  double m = 0.0;
  for (double v : seg) m += v;
  m /= static_cast<double>(seg.size());
  double s = 0.0;
  for (double v : seg) s += (v - m) * (v - m);
  var = seg.size() > 1 ? s / static_cast<double>(seg.size() - 1) : 0.0;
  mean = m;
}

}  // namespace

KsResult ks_test(std::span<const double> sample,
                 const std::function<double(double)>& cdf) {
  if (sample.empty()) {
    throw std::invalid_argument("ks_test: empty sample");
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());

  const std::size_t n = sorted.size();
  const double dn = static_cast<double>(n);
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted[i]);
    if (!(f >= 0.0) || !(f <= 1.0)) {
      throw std::domain_error("ks_test: cdf value outside [0, 1]");
    }
    d = std::max(d, (static_cast<double>(i) + 1.0) / dn - f);
    d = std::max(d, f - static_cast<double>(i) / dn);
  }

  KsResult out;
  out.statistic = d;
  out.n = n;
  if (n <= 100) {
    out.method = KsMethod::exact;
    out.p_value = std::clamp(1.0 - ks_exact_cdf(static_cast<int>(n), d), 0.0, 1.0);
  } else {
    out.method = KsMethod::asymptotic;
    out.p_value = ks_asymptotic_p(std::sqrt(dn) * d);
  }
  return out;
}

KsResult ks_test(const Dataset& data, const std::function<double(double)>& cdf) {
  return ks_test(std::span<const double>(data.values()), cdf);
}

double geweke_z(std::span<const double> chain, double frac_first, double frac_last) {
  if (chain.size() < 100) {
    throw std::invalid_argument("geweke_z: chain must hold at least 100 draws");
  }
  if (!(frac_first > 0.0) || !(frac_last > 0.0) || frac_first + frac_last > 1.0) {
    throw std::invalid_argument("geweke_z: invalid segment fractions");
  }
  const auto n1 = static_cast<std::size_t>(frac_first * static_cast<double>(chain.size()));
  const auto n2 = static_cast<std::size_t>(frac_last * static_cast<double>(chain.size()));
  double m1, v1, m2, v2;
  segment_stats(chain.first(n1), m1, v1);
  segment_stats(chain.last(n2), m2, v2);
  if (v1 == 0.0 && v2 == 0.0) {
    throw numerical_error("geweke_z: degenerate chain (zero variance in both segments)");
  }
  return (m1 - m2) / std::sqrt(v1 / static_cast<double>(n1) + v2 / static_cast<double>(n2));
}

std::vector<double> acf(std::span<const double> chain, std::size_t max_lag) {
  if (chain.size() < 2 || max_lag >= chain.size() / 2) {
    throw std::invalid_argument("acf: need max_lag < chain length / 2");
  }
  const double n = static_cast<double>(chain.size());
  double mean = 0.0;
  for (double v : chain) mean += v;
  mean /= n;
  double denom = 0.0;
  for (double v : chain) denom += (v - mean) * (v - mean);
  if (denom == 0.0) {
    throw numerical_error("acf: degenerate chain (zero variance)");
  }
  std::vector<double> out(max_lag + 1);
  for (std::size_t k = 0; k <= max_lag; ++k) {
    double num = 0.0;
    for (std::size_t t = 0; t + k < chain.size(); ++t) {
      num += (chain[t] - mean) * (chain[t + k] - mean);
    }
    out[k] = num / denom;
  }
  return out;
}

ScaledErrors scaled_errors(std::span<const double> estimates, double truth) {
  if (estimates.empty()) {
    throw std::invalid_argument("scaled_errors: empty estimates");
  }
  if (truth == 0.0 || !std::isfinite(truth)) {
    throw std::invalid_argument("scaled_errors: truth must be a nonzero real");
  }
  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= static_cast<double>(estimates.size());
  double mse = 0.0;
  for (double e : estimates) mse += (e - truth) * (e - truth);
  mse /= static_cast<double>(estimates.size());
  // RMSE scaled by |truth| so srmse >= |sbias| for either sign of truth.
  return {(mean - truth) / truth, std::sqrt(mse) / std::abs(truth)};
}

double sample_quantile(std::span<const double> values, double q) {
  if (values.empty()) {
    throw std::invalid_argument("sample_quantile: empty sample");
  }
  if (!(q >= 0.0) || !(q <= 1.0)) {
    throw std::invalid_argument("sample_quantile: q must lie in [0, 1]");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = q * (static_cast<double>(sorted.size()) - 1.0);
  const auto lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace gebayes
