#include "finfiber/morphism.hpp"

#include <cmath>

#include "finfiber/fibration.hpp"

namespace finfiber {

FinancialEvent rate_isomorphism(const FinancialEvent& e, Rate from, Rate to) {
  if (e.capital == 0.0) {
    return e;
  }
  const double ratio = to.accumulation() / from.accumulation();
  const double capital = std::pow(ratio, e.time) * e.capital;
  if (!std::isfinite(capital)) {
    throw RangeError("rate isomorphism overflows the double range");
  }
  return {e.time, capital};
}

ProductChart trivialize(const FinancialEvent& e, Rate rate) {
  return {e.time, project_compound(e, rate)};
}

FinancialEvent untrivialize(double t, double base_capital, Rate rate) {
  return fiber_event(Fiber{rate, base_capital}, t);
}

}  // namespace finfiber
