#include "finfiber/laws.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace finfiber {

CapitalizationLaw::CapitalizationLaw(RealFn eval, std::optional<RealFn> derivative,
                                     Interval domain, std::string name)
    : eval_(std::move(eval)),
      derivative_(std::move(derivative)),
      domain_(domain),
      name_(std::move(name)) {
  if (!eval_) {
    throw std::invalid_argument("capitalization law needs an evaluator");
  }
  if (!domain_.contains(0.0)) {
    throw std::invalid_argument("capitalization law domain must contain 0");
  }
}

double CapitalizationLaw::derivative(double h) const {
  if (derivative_) {
    return (*derivative_)(h);
  }
  return fd_derivative(eval_, h, kDefaultFdStep);
}

CapitalizationLaw CapitalizationLaw::without_derivative() const {
  return CapitalizationLaw(eval_, std::nullopt, domain_, name_);
}

DiscountLaw::DiscountLaw(RealFn eval, std::optional<RealFn> derivative, double radius,
                         std::string name)
    : eval_(std::move(eval)),
      derivative_(std::move(derivative)),
      radius_(radius),
      name_(std::move(name)) {
  if (!eval_) {
    throw std::invalid_argument("discount law needs an evaluator");
  }
  if (!(radius_ > 0.0)) {
    throw std::invalid_argument("discount law radius must be positive");
  }
}

double DiscountLaw::derivative(double h) const {
  if (derivative_) {
    return (*derivative_)(h);
  }
  return fd_derivative(eval_, h, kDefaultFdStep);
}

DiscountLaw DiscountLaw::without_derivative() const {
  return DiscountLaw(eval_, std::nullopt, radius_, name_);
}

CapitalizationLaw compound_law(Rate rate) {
  const double u = rate.accumulation();
  const double log_u = std::log(u);
  return CapitalizationLaw([u](double h) { return std::pow(u, h); },
                           [u, log_u](double h) { return log_u * std::pow(u, h); },
                           Interval::whole(), std::string(kCompound));
}

CapitalizationLaw simple_law(double i) {
  if (!std::isfinite(i)) {
    throw std::invalid_argument("simple law rate must be finite");
  }
  Interval domain = Interval::whole();
  if (i > 0.0) {
    domain.lo = std::nextafter(-1.0 / i, 0.0);
  } else if (i < 0.0) {
    domain.hi = std::nextafter(-1.0 / i, 0.0);
  }
  return CapitalizationLaw([i](double h) { return 1.0 + i * h; },
                           [i](double) { return i; }, domain, std::string(kSimple));
}

CapitalizationLaw exp_force_law(double delta) {
  if (!std::isfinite(delta)) {
    throw std::invalid_argument("force of interest must be finite");
  }
  return CapitalizationLaw([delta](double h) { return std::exp(delta * h); },
                           [delta](double h) { return delta * std::exp(delta * h); },
                           Interval::whole(), std::string(kExpForce));
}

CapitalizationLaw make_law(std::string_view id, double param) {
  if (id == kCompound) {
    return compound_law(Rate(param));
  }
  if (id == kSimple) {
    return simple_law(param);
  }
  if (id == kExpForce) {
    return exp_force_law(param);
  }
  throw std::invalid_argument("unknown law id '" + std::string(id) + "'");
}

std::vector<std::string_view> registry_ids() { return {kCompound, kSimple, kExpForce}; }

}  // namespace finfiber
