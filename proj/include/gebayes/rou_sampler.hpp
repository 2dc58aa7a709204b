#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gebayes/dataset.hpp"
#include "gebayes/posterior.hpp"
#include "gebayes/random_stream.hpp"

namespace gebayes {

struct Interval {
  double lo;
  double hi;
};

// Bounding rectangle [0, a] x [b_minus, b_plus] of the generalized
// ratio-of-uniforms region for a log density shifted by its maximum.
// After shifting, the sup of the rescaled density is 1, so a_bound == 1.
struct RouBounds {
  double r;
  double a_bound;
  double b_minus;
  double b_plus;
  double log_shift;  // maximum of the log density over the bracket
};

// Locates the log-density maximum and the v-bounds by a 1024-point scan plus
// golden-section refinement. Throws numerical_error when the density
// vanishes on the whole bracket or an extremum sits on a bracket endpoint
// with nonzero density there (bracket too small).
RouBounds rou_bounds(const std::function<double(double)>& log_density, double r,
                     Interval bracket);

struct RouDraws {
  std::vector<double> draws;
  double acceptance_rate;       // draws.size() / proposals
  std::uint64_t proposals;
};

// Exact independent draws from the normalized density by rejection from the
// bounding rectangle: U ~ U(0, a), V ~ U(b-, b+), rho = V/U^r, accepted iff
// (r+1) ln U <= log_density(rho) - log_shift (acceptance on equality).
RouDraws rou_sample_1d(const std::function<double(double)>& log_density,
                       const RouBounds& bounds, std::size_t m, RandomStream& rng);

// One Gamma(shape, rate) draw; Marsaglia-Tsang squeeze for shape >= 1,
// boosted shape+1 draw times U^{1/shape} below 1.
double gamma_variate(double shape, double rate, RandomStream& rng);

// Paired posterior draws with sampler metadata.
struct PosteriorSample {
  std::vector<double> alphas;
  std::vector<double> lambdas;
  double r = 1.0;
  double acceptance_rate = 1.0;
  std::uint64_t seed = 0;
  PriorSpec prior;
};

// Exact joint posterior sampling: ratio-of-uniforms on z = ln(lambda)
// (safe for b = 1, where the lambda-space density is unbounded at 0),
// inverted to lambda, then one conditional Gamma draw of alpha per lambda.
// Requires the propriety gate to pass and r > 0.
PosteriorSample sample_posterior(const Dataset& data, const PriorSpec& prior,
                                 double r, std::size_t m, RandomStream& rng);

}  // namespace gebayes
