#include "finfiber/connection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace finfiber {

namespace {

double positive(double value, const char* what, double at) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw InvalidLawError(std::string(what) + " must be positive and finite, got " +
                          std::to_string(value) + " at " + std::to_string(at));
  }
  return value;
}

}  // namespace

FinancialEvent financial_translate(const FinancialEvent& e, double h, const DiscountLaw& F) {
  if (!F.in_neighborhood(h)) {
    throw DomainError("translation " + std::to_string(h) + " exceeds discount law radius " +
                      std::to_string(F.radius()));
  }
  const double factor = positive(F(h), "discount factor", h);
  return {e.time + h, e.capital / factor};
}

TangentComponents translation_derivative(const DiscountLaw& F, double c, double k, double v) {
  const ChristoffelForm G = christoffel_from_discount(F, 0.0);
  return {k, v - G.apply(k, c)};
}

ChristoffelForm christoffel_from_discount(const DiscountLaw& F, double t) {
  if (F.has_analytic_derivative()) {
    return {t, F.derivative(0.0), DerivativeSource::kAnalytic};
  }
  const double step = std::min(kDefaultFdStep, 0.5 * F.radius());
  const RealFn eval = [&F](double h) { return F(h); };
  return {t, fd_derivative(eval, 0.0, step), DerivativeSource::kFiniteDifference};
}

DiscountLaw discount_from_christoffel(const ChristoffelForm& G) {
  const double gamma = G.gamma;
  const double radius = gamma == 0.0 ? 1.0 : std::min(1.0, 0.5 / std::fabs(gamma));
  return DiscountLaw([gamma](double h) { return 1.0 + gamma * h; },
                     [gamma](double) { return gamma; }, radius, "linear");
}

TangentVector connection_apply(const ChristoffelForm& G, double k, const FinancialEvent& e,
                               double tol) {
  if (!nearly_equal(e.time, G.time, tol)) {
    throw FiberError("event at t = " + std::to_string(e.time) +
                     " is not on the fiber over t = " + std::to_string(G.time));
  }
  // + 0.0 folds a negative zero into +0.
  return TangentVector(e, k, -G.apply(k, e.capital) + 0.0);
}

DiscountLaw induced_discount(const CapitalizationLaw& u, double t, std::optional<double> radius) {
  const Interval& domain = u.domain();
  if (!domain.contains(t)) {
    throw DomainError("time " + std::to_string(t) + " outside the capitalization law domain");
  }
  const double ut = positive(u(t), "capitalization factor", t);

  double r = 0.0;
  if (radius) {
    r = *radius;
  } else {
    const double reach = std::min(t - domain.lo, domain.hi - t);
    r = std::isinf(reach) ? reach : 0.5 * reach;
  }
  if (!(r > 0.0)) {
    throw DomainError("no neighborhood of t = " + std::to_string(t) +
                      " inside the capitalization law domain");
  }

  RealFn eval = [u, t, ut](double h) {
    return ut / positive(u(t + h), "capitalization factor", t + h);
  };
  std::optional<RealFn> derivative;
  if (u.has_analytic_derivative()) {
    derivative = [u, t, ut](double h) {
      const double uth = positive(u(t + h), "capitalization factor", t + h);
      return -ut * u.derivative(t + h) / (uth * uth);
    };
  }
  return DiscountLaw(std::move(eval), std::move(derivative), r, "induced-" + u.name());
}

TangentVector global_connection(const CapitalizationLaw& u, double k, const FinancialEvent& e) {
  const DiscountLaw F = induced_discount(u, e.time);
  return connection_apply(christoffel_from_discount(F, e.time), k, e);
}

double force_of_interest(const CapitalizationLaw& u, double t) {
  if (!u.domain().contains(t)) {
    throw DomainError("time " + std::to_string(t) + " outside the capitalization law domain");
  }
  const double ut = positive(u(t), "capitalization factor", t);
  return u.derivative(t) / ut;
}

bool verify_force_relation(const CapitalizationLaw& u, double t, double k, double c,
                           double tol) {
  const ChristoffelForm G = christoffel_from_discount(induced_discount(u, t), t);
  return nearly_equal(-G.apply(k, c), force_of_interest(u, t) * k * c, tol);
}

}  // namespace finfiber
