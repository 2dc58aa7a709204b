#include "gebayes/optimize.hpp"

#include <cmath>
#include <stdexcept>

namespace gebayes {

ScalarMax golden_section_max(const std::function<double(double)>& f, double lo,
                             double hi, double x_tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("golden_section_max: invalid interval");
  }
  const double gr = 0.6180339887498949;  // (sqrt(5)-1)/2
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  int iterations = 0;
  while (hi - lo > x_tol && iterations < 200) {
    ++iterations;
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    }
  }
  const double xm = 0.5 * (lo + hi);
  return {xm, f(xm), iterations};
}

}  // namespace gebayes
