#include "finfiber/core.hpp"

#include <string>

namespace finfiber {

namespace {

double checked_eval(const RealFn& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw EvaluationError("non-finite function value at x = " + std::to_string(x));
  }
  return y;
}

}  // namespace

double fd_derivative(const RealFn& f, double x, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
  const double d1 = checked_eval(f, x + step) - checked_eval(f, x - step);
  const double d2 = checked_eval(f, x + 2.0 * step) - checked_eval(f, x - 2.0 * step);
  return (8.0 * d1 - d2) / (12.0 * step);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) {
    return {lo};
  }
  std::vector<double> out(n + 1);
  const double span = hi - lo;
  for (std::size_t k = 0; k <= n; ++k) {
    out[k] = lo + span * static_cast<double>(k) / static_cast<double>(n);
  }
  out[n] = hi;
  return out;
}

}  // namespace finfiber
