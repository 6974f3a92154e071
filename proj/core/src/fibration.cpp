#include "finfiber/fibration.hpp"

#include <cmath>
#include <string>

namespace finfiber {

namespace {

double scaled(double factor, double capital, const char* what) {
  if (capital == 0.0) {
    return 0.0;
  }
  const double out = factor * capital;
  if (!std::isfinite(out)) {
    throw RangeError(std::string(what) + " overflows the double range");
  }
  return out;
}

double positive_factor(const CapitalizationLaw& f, double t) {
  const double value = f(t);
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw InvalidLawError("capitalization factor must be positive and finite, got " +
                          std::to_string(value) + " at t = " + std::to_string(t));
  }
  return value;
}

}  // namespace

double project_compound(const FinancialEvent& e, Rate rate) {
  return scaled(std::pow(rate.accumulation(), -e.time), e.capital, "present value");
}

double project_general(const FinancialEvent& e, const CapitalizationLaw& f) {
  if (e.time >= 0.0) {
    return scaled(1.0 / positive_factor(f, e.time), e.capital, "present value");
  }
  return scaled(positive_factor(f, -e.time), e.capital, "present value");
}

GluingSlopes gluing_slopes(const CapitalizationLaw& f, double step) {
  const double f0 = positive_factor(f, 0.0);
  const double f1 = positive_factor(f, step);
  const double f2 = positive_factor(f, 2.0 * step);

  // g>(t) = 1/f(t) sampled at 0, h, 2h; g<(t) = f(-t) sampled at 0, -h, -2h.
  const double right = (-3.0 / f0 + 4.0 / f1 - 1.0 / f2) / (2.0 * step);
  const double left = (3.0 * f0 - 4.0 * f1 + f2) / (2.0 * step);

  // f may only be known on [0, inf), so without an analytic derivative use
  // the forward stencil rather than a central one.
  const double slope = f.has_analytic_derivative()
                           ? f.derivative(0.0)
                           : (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * step);
  return {right, left, -slope};
}

bool general_gluing_check(const CapitalizationLaw& f, double tol) {
  const GluingSlopes s = gluing_slopes(f);
  return nearly_equal(s.right, s.expected, tol) && nearly_equal(s.left, s.expected, tol);
}

bool equivalent(const FinancialEvent& e1, const FinancialEvent& e2, Rate rate, double tol) {
  return nearly_equal(project_compound(e1, rate), project_compound(e2, rate), tol);
}

Fiber fiber_of(const FinancialEvent& e, Rate rate) {
  return Fiber{rate, project_compound(e, rate)};
}

double fiber_eval(const Fiber& fiber, double t) {
  return scaled(std::pow(fiber.rate.accumulation(), t), fiber.base_capital, "fiber value");
}

std::weak_ordering fiber_compare(const Fiber& a, const Fiber& b, double tol) {
  if (!(a.rate == b.rate)) {
    throw IncomparableError("fibers induced by different rates are not comparable");
  }
  if (nearly_equal(a.base_capital, b.base_capital, tol)) {
    return std::weak_ordering::equivalent;
  }
  return a.base_capital < b.base_capital ? std::weak_ordering::less
                                         : std::weak_ordering::greater;
}

}  // namespace finfiber
