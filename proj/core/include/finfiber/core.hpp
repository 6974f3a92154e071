#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace finfiber {

/// Relative tolerance used by every equality check unless the caller says otherwise.
inline constexpr double kDefaultTolerance = 1e-9;

/// Step used when a law carries no analytic derivative.
inline constexpr double kDefaultFdStep = 1e-5;

using RealFn = std::function<double(double)>;

// Error hierarchy. All library failures derive from finfiber::Error so callers
// (the CLI in particular) can separate numeric/domain failures from misuse.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A law or map produced a non-finite value where a finite one was required.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Result overflowed the double range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A capitalization or discount law returned a non-positive factor.
class InvalidLawError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a law, section or neighborhood.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two fibers induced by different rates were compared.
class IncomparableError : public Error {
 public:
  using Error::Error;
};

// An event does not lie on the fiber a connection is attached to.
class FiberError : public Error {
 public:
  using Error::Error;
};

// An operation's hypotheses do not hold (e.g. shortcut test with i <= 0).
class InapplicableError : public Error {
 public:
  using Error::Error;
};

/// Relative comparison: |a - b| <= tol * max(1, |a|, |b|).
inline bool nearly_equal(double a, double b, double tol = kDefaultTolerance) {
  const double scale = std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
  return std::fabs(a - b) <= tol * scale;
}

/// A point (t, c) of the event plane: a time in years and a capital.
struct FinancialEvent {
  double time = 0.0;
  double capital = 0.0;

  FinancialEvent() = default;
  FinancialEvent(double t, double c) : time(t), capital(c) {
    if (!std::isfinite(t) || !std::isfinite(c)) {
      throw EvaluationError("financial event components must be finite");
    }
  }

  friend bool operator==(const FinancialEvent&, const FinancialEvent&) = default;
};

/// Per-period compound interest rate i > -1, with accumulation factor u = 1 + i.
class Rate {
 public:
  explicit Rate(double i) : i_(i) {
    if (!std::isfinite(i) || !(i > -1.0)) {
      throw std::invalid_argument("rate must be finite and greater than -1");
    }
  }

  double value() const { return i_; }
  double accumulation() const { return 1.0 + i_; }

  friend bool operator==(const Rate&, const Rate&) = default;

 private:
  double i_;
};

/// Closed interval [lo, hi]; either end may be infinite.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool contains(double x) const { return x >= lo && x <= hi; }
  static Interval whole() { return {}; }
};

/// An applied vector (k, v) at an event, using T_(t,c)E = R x R.
struct TangentVector {
  FinancialEvent base;
  double k = 0.0;
  double v = 0.0;

  TangentVector() = default;
  TangentVector(FinancialEvent e, double k_, double v_) : base(e), k(k_), v(v_) {
    if (!std::isfinite(k_) || !std::isfinite(v_)) {
      throw EvaluationError("tangent vector components must be finite");
    }
  }
};

/// Richardson-extrapolated central difference,
///   (8[f(x+h) - f(x-h)] - [f(x+2h) - f(x-2h)]) / 12h,
/// exact for polynomials up to degree four and O(h^4) otherwise.
/// Throws EvaluationError if any stencil value is non-finite.
double fd_derivative(const RealFn& f, double x, double step = kDefaultFdStep);

/// n+1 evenly spaced points from lo to hi inclusive (n >= 1), or {lo} when n == 0.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace finfiber
