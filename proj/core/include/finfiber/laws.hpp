#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "finfiber/core.hpp"

namespace finfiber {

/// Capitalization law h -> u(h) with u(0) = 1 and u > 0 on its domain.
///
/// The evaluator is an arbitrary closure. When no analytic derivative is
/// supplied, derivative() falls back to fd_derivative with kDefaultFdStep.
class CapitalizationLaw {
 public:
  CapitalizationLaw(RealFn eval, std::optional<RealFn> derivative = std::nullopt,
                    Interval domain = Interval::whole(), std::string name = "custom");

  double operator()(double h) const { return eval_(h); }
  double derivative(double h) const;

  bool has_analytic_derivative() const { return derivative_.has_value(); }
  const Interval& domain() const { return domain_; }
  const std::string& name() const { return name_; }
  const RealFn& evaluator() const { return eval_; }

  /// Same law with the analytic derivative removed.
  CapitalizationLaw without_derivative() const;

 private:
  RealFn eval_;
  std::optional<RealFn> derivative_;
  Interval domain_;
  std::string name_;
};

/// Local discount law h -> F(h) on the neighborhood |h| <= radius of 0.
/// An infinite radius denotes a global law.
class DiscountLaw {
 public:
  DiscountLaw(RealFn eval, std::optional<RealFn> derivative, double radius,
              std::string name = "custom");

  double operator()(double h) const { return eval_(h); }
  double derivative(double h) const;

  bool has_analytic_derivative() const { return derivative_.has_value(); }
  double radius() const { return radius_; }
  bool in_neighborhood(double h) const { return std::fabs(h) <= radius_; }
  const std::string& name() const { return name_; }

  DiscountLaw without_derivative() const;

 private:
  RealFn eval_;
  std::optional<RealFn> derivative_;
  double radius_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Built-in registry. Identifiers are stable and shared with the CLI.

inline constexpr std::string_view kCompound = "compound";
inline constexpr std::string_view kSimple = "simple";
inline constexpr std::string_view kExpForce = "exp-force";

/// u(h) = (1+i)^h on the whole line.
CapitalizationLaw compound_law(Rate rate);
/// u(h) = 1 + i h, restricted to the half-line where 1 + i h > 0.
CapitalizationLaw simple_law(double i);
/// u(h) = exp(delta h).
CapitalizationLaw exp_force_law(double delta);

/// Look up a registry law by id; the parameter is the rate i or the force delta.
/// Throws std::invalid_argument for unknown ids or invalid parameters.
CapitalizationLaw make_law(std::string_view id, double param);
std::vector<std::string_view> registry_ids();

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  kNotUnitAtZero,   // u(0) != 1
  kNonPositive,     // u(h) <= 0
  kNonFinite,       // u(h) is NaN or infinite
  kOutsideDomain,   // grid point outside the law's domain
  kNotC1Plausible,  // finite differences unstable at h
};

struct Violation {
  ViolationKind kind;
  double at;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool c1_plausible = true;

  bool valid() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

std::string_view to_string(ViolationKind kind);

ValidationReport validate_capitalization_law(const CapitalizationLaw& u,
                                             std::span<const double> grid,
                                             double tol = kDefaultTolerance);
ValidationReport validate_discount_law(const DiscountLaw& F, std::span<const double> grid,
                                       double tol = kDefaultTolerance);

}  // namespace finfiber
