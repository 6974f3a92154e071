#pragma once

#include "finfiber/core.hpp"

namespace finfiber {

/// Rate-change isomorphism g(t, c) = (t, (u'/u)^t c) from the fibration at
/// rate `from` onto the one at rate `to`. Satisfies pi_to(g(e)) = pi_from(e).
FinancialEvent rate_isomorphism(const FinancialEvent& e, Rate from, Rate to);

/// Global product chart of the compound fibration: (time, base capital).
struct ProductChart {
  double time;
  double base_capital;
};

ProductChart trivialize(const FinancialEvent& e, Rate rate);

/// Inverse chart: (t, c0) -> (t, (1+i)^t c0).
FinancialEvent untrivialize(double t, double base_capital, Rate rate);

}  // namespace finfiber
