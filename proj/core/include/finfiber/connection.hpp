#pragma once

#include <optional>

#include "finfiber/core.hpp"
#include "finfiber/laws.hpp"

namespace finfiber {

enum class DerivativeSource { kAnalytic, kFiniteDifference, kExact };

/// Gamma_t(k, c) = gamma k c with gamma = F'(0).
struct ChristoffelForm {
  double time = 0.0;
  double gamma = 0.0;
  DerivativeSource source = DerivativeSource::kExact;

  double apply(double k, double c) const { return gamma * k * c; }
};

/// Financial translation tau_h(t, c) = (t + h, F(h)^-1 c).
/// DomainError if |h| exceeds the law's radius, InvalidLawError if F(h) <= 0.
FinancialEvent financial_translate(const FinancialEvent& e, double h, const DiscountLaw& F);

struct TangentComponents {
  double k;
  double v;
};

/// Derivative of (h, c) -> (t + h, F(h)^-1 c) at (0, c): (k, v) -> (k, v - F'(0) k c).
TangentComponents translation_derivative(const DiscountLaw& F, double c, double k, double v);

ChristoffelForm christoffel_from_discount(const DiscountLaw& F, double t);

/// Converse construction F(h) = 1 + Gamma_t(h, 1) = 1 + gamma h on radius
/// min(1, 0.5/|gamma|) (1 when gamma == 0), where F stays >= 1/2.
DiscountLaw discount_from_christoffel(const ChristoffelForm& G);

/// Horizontal lift C_t((t, k), e) = (e, (k, -Gamma_t(k, c))).
/// Throws FiberError if e is not on the fiber over G.time.
TangentVector connection_apply(const ChristoffelForm& G, double k, const FinancialEvent& e,
                               double tol = kDefaultTolerance);

/// Local discount law at t induced by u: v(h) = u(t) / u(t + h).
///
/// The default radius is half the distance from t to the nearest finite end
/// of u's domain (infinite for laws on the whole line). Throws DomainError if
/// t is outside the domain, InvalidLawError if u(t) <= 0; evaluation throws
/// InvalidLawError if u(t + h) <= 0.
DiscountLaw induced_discount(const CapitalizationLaw& u, double t,
                             std::optional<double> radius = std::nullopt);

/// Connection induced by u, evaluated at the fiber of e.
TangentVector global_connection(const CapitalizationLaw& u, double k, const FinancialEvent& e);

/// delta(t) = u'(t) / u(t). Throws InvalidLawError if u(t) <= 0.
double force_of_interest(const CapitalizationLaw& u, double t);

/// Checks -Gamma_t(k, c) = delta(t) k c for the discount law induced by u at t.
bool verify_force_relation(const CapitalizationLaw& u, double t, double k, double c,
                           double tol = kDefaultTolerance);

}  // namespace finfiber
