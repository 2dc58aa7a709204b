#pragma once

namespace gebayes {

// Digamma psi(x) for x > 0. Recurrence up to x >= 10, then the Bernoulli
// asymptotic series; absolute accuracy better than 1e-12 over the domain.
double digamma(double x);

// Trigamma psi'(x) for x > 0, same scheme as digamma.
double trigamma(double x);

// ln(1 - e^{-u}) for u >= 0 without cancellation: log1p(-exp(-u)) once
// u >= ln 2, log(-expm1(-u)) below it. Returns -inf at u = 0.
double log1mexp(double u);

// Standard normal CDF.
double normal_cdf(double z);

}  // namespace gebayes
