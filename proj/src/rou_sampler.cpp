#include "gebayes/rou_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gebayes/errors.hpp"
#include "gebayes/optimize.hpp"

namespace gebayes {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr int kScanPoints = 1024;
constexpr double kBoundInflation = 1e-8;

}  // namespace

RouBounds rou_bounds(const std::function<double(double)>& log_density, double r,
                     Interval bracket) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("rou_bounds: r must be a nonnegative real");
  }
  if (!(bracket.lo < bracket.hi) || !std::isfinite(bracket.lo) ||
      !std::isfinite(bracket.hi)) {
    throw std::invalid_argument("rou_bounds: invalid bracket");
  }

  const double step = (bracket.hi - bracket.lo) / (kScanPoints - 1);
  std::vector<double> grid(kScanPoints), vals(kScanPoints);
  int imax = -1;
  for (int i = 0; i < kScanPoints; ++i) {
    grid[i] = bracket.lo + i * step;
    const double v = log_density(grid[i]);
    if (std::isnan(v)) {
      throw numerical_error("rou_bounds: log density is NaN at v = " +
                            std::to_string(grid[i]));
    }
    vals[i] = v;
    if (imax < 0 || v > vals[imax]) imax = i;
  }
  if (vals[imax] == kNegInf) {
    throw numerical_error("rou_bounds: log density is -inf over the whole bracket");
  }
  if (imax == 0 || imax == kScanPoints - 1) {
    throw numerical_error(
        "rou_bounds: density maximum at a bracket endpoint; widen the bracket");
  }

  const double x_tol = 1e-10 * (1.0 + std::abs(bracket.lo) + std::abs(bracket.hi));
  const ScalarMax top =
      golden_section_max(log_density, grid[imax - 1], grid[imax + 1], x_tol);
  double log_shift = std::max(top.fx, vals[imax]);
  // Nudge the shift up so the rescaled density provably stays below 1 despite
  // the finite tolerance of the maximum search.
  log_shift += 1e-12 * (1.0 + std::abs(log_shift));

  const double rp1 = r + 1.0;
  const auto ratio = [&](double v) {
    const double l = log_density(v);
    if (l == kNegInf) return 0.0;  // outside the support, contributes nothing
    return v * std::exp(r * (l - log_shift) / rp1);
  };

  std::vector<double> g(kScanPoints);
  int jmax = 0, jmin = 0;
  for (int i = 0; i < kScanPoints; ++i) {
    g[i] = ratio(grid[i]);
    if (g[i] > g[jmax]) jmax = i;
    if (g[i] < g[jmin]) jmin = i;
  }

  // An extremum on a bracket endpoint signals an uncovered tail only when the
  // density is nonzero there and the value strictly beats the interior
  // neighbor; an endpoint where the density has already vanished is an
  // attained bound.
  const auto resolve = [&](int j, bool maximize) {
    const int last = kScanPoints - 1;
    if (j == 0 || j == last) {
      const int inner = (j == 0) ? 1 : last - 1;
      const bool strictly_better = maximize ? g[j] > g[inner] : g[j] < g[inner];
      if (log_density(grid[j]) > kNegInf && strictly_better) {
        throw numerical_error(
            "rou_bounds: ratio bound attained at a bracket endpoint; widen the "
            "bracket");
      }
      return g[j];
    }
    const auto f = maximize ? std::function<double(double)>(ratio)
                            : std::function<double(double)>(
                                  [&](double v) { return -ratio(v); });
    const ScalarMax m = golden_section_max(f, grid[j - 1], grid[j + 1], x_tol);
    const double refined = maximize ? m.fx : -m.fx;
    return maximize ? std::max(refined, g[j]) : std::min(refined, g[j]);
  };

  double b_plus = resolve(jmax, true);
  double b_minus = resolve(jmin, false);
  b_plus += std::abs(b_plus) * kBoundInflation;
  b_minus -= std::abs(b_minus) * kBoundInflation;
  if (!(b_minus < b_plus)) {
    throw numerical_error("rou_bounds: degenerate ratio bounds");
  }
  return {r, 1.0, b_minus, b_plus, log_shift};
}

RouDraws rou_sample_1d(const std::function<double(double)>& log_density,
                       const RouBounds& bounds, std::size_t m, RandomStream& rng) {
  if (m < 1) {
    throw std::invalid_argument("rou_sample_1d: m must be at least 1");
  }
  const double r = bounds.r;
  const double rp1 = r + 1.0;
  const double span = bounds.b_plus - bounds.b_minus;

  RouDraws out;
  out.draws.reserve(m);
  std::uint64_t proposals = 0;
  while (out.draws.size() < m) {
    ++proposals;
    if (proposals >= 1000000 && (proposals & 0xffff) == 0) {
      const double rate = static_cast<double>(out.draws.size()) /
                          static_cast<double>(proposals);
      if (rate < 1e-4) {
        throw numerical_error(
            "rou_sample_1d: acceptance rate below 1e-4 after " +
            std::to_string(proposals) + " proposals; try a different r");
      }
    }
    const double u = rng.uniform() * bounds.a_bound;
    const double v = bounds.b_minus + span * rng.uniform();
    double rho;
    if (r == 1.0) {
      rho = v / u;
    } else if (r == 0.0) {
      rho = v;
    } else {
      rho = v / std::pow(u, r);
    }
    if (!std::isfinite(rho)) continue;  // target mass there is below resolution
    if (rp1 * std::log(u) <= log_density(rho) - bounds.log_shift) {
      out.draws.push_back(rho);
    }
  }
  out.proposals = proposals;
  out.acceptance_rate =
      static_cast<double>(m) / static_cast<double>(proposals);
  return out;
}

double gamma_variate(double shape, double rate, RandomStream& rng) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::invalid_argument("gamma_variate: shape must be positive");
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("gamma_variate: rate must be positive");
  }
  if (shape < 1.0) {
    // Gamma(shape) = Gamma(shape + 1) * U^{1/shape}
    return gamma_variate(shape + 1.0, rate, rng) *
           std::pow(rng.uniform(), 1.0 / shape);
  }
  // Marsaglia-Tsang (2000) squeeze
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v / rate;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v / rate;
  }
}

PosteriorSample sample_posterior(const Dataset& data, const PriorSpec& prior,
                                 double r, std::size_t m, RandomStream& rng) {
  const ProprietyReport gate = check_propriety(data, prior);
  if (!gate.proper) {
    std::string msg = "sample_posterior: posterior is not proper:";
    for (const auto& reason : gate.reasons) msg += " [" + reason + "]";
    throw propriety_error(msg);
  }
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument(
        "sample_posterior: r must be positive (the log-scale target has "
        "unbounded support, for which r = 0 degenerates)");
  }
  if (m < 1) {
    throw std::invalid_argument("sample_posterior: m must be at least 1");
  }

  const auto log_p = [&](double z) { return log_marginal_lambda_z(z, data, prior); };

  // Mass bracket: start at the exponential-fit rate, expand by 2 nats until
  // the kernel falls 50 nats below the running max, capped at +-60.
  const double z0 = std::log(static_cast<double>(data.size()) / data.sum());
  double best = log_p(z0);
  double lo = z0;
  while (z0 - lo < 60.0) {
    lo -= 2.0;
    const double v = log_p(lo);
    best = std::max(best, v);
    if (v <= best - 50.0) break;
  }
  double hi = z0;
  while (hi - z0 < 60.0) {
    hi += 2.0;
    const double v = log_p(hi);
    best = std::max(best, v);
    if (v <= best - 50.0) break;
  }

  // The v-bound extrema can sit past the mass bracket on the side where the
  // kernel has underflowed (b+ ~ 0 when all the z mass is negative); extend
  // the search bracket across zero so the scan sees that region.
  const Interval search{std::min(lo, -2.0), std::max(hi, 2.0)};
  const RouBounds bounds = rou_bounds(log_p, r, search);
  if (!(log_p(search.lo) <= bounds.log_shift) ||
      !(log_p(search.hi) <= bounds.log_shift)) {
    throw numerical_error(
        "sample_posterior: log-scale target is not bounded on the bracket edges");
  }

  const RouDraws zdraws = rou_sample_1d(log_p, bounds, m, rng);

  PosteriorSample out;
  out.alphas.reserve(m);
  out.lambdas.reserve(m);
  for (double z : zdraws.draws) {
    const double lambda = std::exp(z);
    const GammaParams gp = conditional_alpha_params(lambda, data, prior);
    out.alphas.push_back(gamma_variate(gp.shape, gp.rate, rng));
    out.lambdas.push_back(lambda);
  }
  out.r = r;
  out.acceptance_rate = zdraws.acceptance_rate;
  out.seed = rng.seed();
  out.prior = prior;
  return out;
}

}  // namespace gebayes
