#pragma once

#include <compare>

#include "finfiber/core.hpp"
#include "finfiber/laws.hpp"

namespace finfiber {

/// Natural fibration pr1: the time coordinate of an event.
inline double project_natural(const FinancialEvent& e) { return e.time; }

/// Compound-interest projection pi_i(t, c) = (1+i)^(-t) c, the present value at 0.
/// Throws RangeError when the discount factor overflows.
double project_compound(const FinancialEvent& e, Rate rate);

/// Projection induced by a capitalization factor f given on [0, inf):
///   f(t)^-1 c   for t >= 0,
///   f(-t) c     for t < 0.
/// Throws InvalidLawError if f is non-positive or non-finite where evaluated.
double project_general(const FinancialEvent& e, const CapitalizationLaw& f);

/// One-sided slopes at 0 of g>(t) = f(t)^-1 and g<(t) = f(-t), and -f'(0).
struct GluingSlopes {
  double right;     // g>'(0+)
  double left;      // g<'(0-)
  double expected;  // -f'(0)
};

/// Second-order one-sided differences; only evaluates f on [0, 2 step].
GluingSlopes gluing_slopes(const CapitalizationLaw& f, double step = 1e-4);

/// True iff both one-sided slopes agree with -f'(0) within tol (relative scale).
bool general_gluing_check(const CapitalizationLaw& f, double tol = 1e-6);

/// e1 ~_i e2: equal present values at rate i.
bool equivalent(const FinancialEvent& e1, const FinancialEvent& e2, Rate rate,
                double tol = kDefaultTolerance);

/// The class [e]_i, represented by its rate and base capital c0 = pi_i(e).
struct Fiber {
  Rate rate;
  double base_capital;
};

Fiber fiber_of(const FinancialEvent& e, Rate rate);

/// Capital evolution M_c0(t) = (1+i)^t c0 along the fiber.
double fiber_eval(const Fiber& fiber, double t);

/// The fiber as an event at time t.
inline FinancialEvent fiber_event(const Fiber& fiber, double t) {
  return {t, fiber_eval(fiber, t)};
}

/// Present-value preorder on fibers of the same rate: [e] <= [e'] iff pi_i(e) <= pi_i(e').
/// Base capitals within tol (relative) compare equivalent.
/// Throws IncomparableError if the rates differ.
std::weak_ordering fiber_compare(const Fiber& a, const Fiber& b,
                                 double tol = kDefaultTolerance);

}  // namespace finfiber
