#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "finfiber/core.hpp"

namespace finfiber {

/// Set of capitals a section is defined on: an interval or a finite sample.
class CapitalDomain {
 public:
  CapitalDomain(Interval interval) : domain_(interval) {}  // NOLINT
  CapitalDomain(std::vector<double> points) : domain_(std::move(points)) {}  // NOLINT

  bool contains(double c) const;

  /// The finite points, or n+1 evenly spaced points of a bounded interval.
  std::vector<double> samples(std::size_t n = 100) const;

 private:
  std::variant<Interval, std::vector<double>> domain_;
};

/// Section c -> (f(c), u^f(c) c) of the compound fibration at a fixed rate.
class Section {
 public:
  Section(RealFn time_map, Rate rate, CapitalDomain domain)
      : time_map_(std::move(time_map)), rate_(rate), domain_(std::move(domain)) {}

  /// Throws DomainError outside the domain, EvaluationError if f(c) is not finite.
  FinancialEvent operator()(double c) const;

  Rate rate() const { return rate_; }
  const CapitalDomain& domain() const { return domain_; }
  const RealFn& time_map() const { return time_map_; }

 private:
  RealFn time_map_;
  Rate rate_;
  CapitalDomain domain_;
};

/// Builds the section from its time map. The map is evaluated on the domain
/// samples up front; a non-finite value raises EvaluationError.
Section section_from_time_map(RealFn time_map, Rate rate, CapitalDomain domain);

inline FinancialEvent section_eval(const Section& s, double c) { return s(c); }

/// Checks s2(c) = c u^s1(c) on every sampled capital.
bool is_section(const RealFn& s1, const RealFn& s2, Rate rate, const CapitalDomain& domain,
                double tol = kDefaultTolerance);

/// A function M from times to capitals together with the grid it is sampled on.
class CapitalEvolution {
 public:
  /// Throws std::invalid_argument unless the grid is nonempty, strictly
  /// increasing and inside the domain.
  CapitalEvolution(RealFn eval, std::optional<RealFn> derivative, Interval domain,
                   std::vector<double> grid);

  /// Evolution known only at its samples. Evaluating off the grid throws DomainError.
  static CapitalEvolution from_samples(std::vector<double> times, std::vector<double> values);

  double operator()(double t) const { return eval_(t); }
  double derivative(double t) const;

  bool has_analytic_derivative() const { return derivative_.has_value(); }
  const Interval& domain() const { return domain_; }
  const std::vector<double>& grid() const { return grid_; }

 private:
  RealFn eval_;
  std::optional<RealFn> derivative_;
  Interval domain_;
  std::vector<double> grid_;
};

enum class TraceFailure { kInjectivity, kSurjectivity, kProjectionMismatch };

std::string_view to_string(TraceFailure failure);

struct TraceReport {
  bool is_trace = false;
  /// h restricted to the sampled graph is injective: v values pairwise distinct.
  bool values_distinct = false;
  /// v strictly monotone along the grid (ties within tolerance fail).
  bool strictly_monotone = false;
  /// Samples (t, v(t)) of f^-1, in grid order.
  std::optional<std::vector<std::pair<double, double>>> witness;
  std::optional<TraceFailure> failure_reason;
  std::string detail;
};

/// Decides whether gr(M) is the trace of a section over `targets`.
///
/// v(t) = M(t) u^-t is computed on the grid. The graph is a trace when v is
/// strictly monotone on the grid and its sampled range covers `targets`
/// (up to tolerance). Non-finite v reports kProjectionMismatch; restricted
/// domains are handled by passing a sub-interval as `targets`.
TraceReport trace_test(const CapitalEvolution& M, Rate rate, Interval targets,
                       double tol = kDefaultTolerance);

/// Sufficient condition for a trace over positive capitals when i > 0:
/// M'(t) < 0 at every grid point. Throws InapplicableError when i <= 0 or M
/// is not strictly positive on the grid.
bool decreasing_evolution_shortcut(const CapitalEvolution& M, Rate rate);

}  // namespace finfiber
