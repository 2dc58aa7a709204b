#pragma once

#include <functional>

namespace gebayes {

struct ScalarMax {
  double x;
  double fx;
  int iterations;
};

// Golden-section maximization of f on [lo, hi], assumed unimodal there.
// Stops when the interval shrinks below x_tol.
ScalarMax golden_section_max(const std::function<double(double)>& f, double lo,
                             double hi, double x_tol);

}  // namespace gebayes
