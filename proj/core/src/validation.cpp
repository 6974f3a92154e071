#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "finfiber/laws.hpp"

namespace finfiber {

namespace {

constexpr double kCoarseStep = 1e-3;
constexpr double kFineStep = 1e-5;
constexpr double kStabilityTol = 1e-5;

struct LawView {
  const RealFn& eval;
  Interval domain;
  const char* symbol;  // "u" or "F"
};

std::string at_text(double h) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", h);
  return buf;
}

// Central differences at two step sizes must agree, and so must the
// second-order one-sided slopes (central stencils are blind to kinks).
bool c1_plausible_at(const RealFn& f, double x) {
  try {
    const double coarse = fd_derivative(f, x, kCoarseStep);
    const double fine = fd_derivative(f, x, kFineStep);
    const double f0 = f(x);
    const double s = kFineStep;
    const double forward = (-3.0 * f0 + 4.0 * f(x + s) - f(x + 2.0 * s)) / (2.0 * s);
    const double backward = (3.0 * f0 - 4.0 * f(x - s) + f(x - 2.0 * s)) / (2.0 * s);
    if (!std::isfinite(forward) || !std::isfinite(backward)) {
      return false;
    }
    const double scale = std::max({1.0, std::fabs(fine), std::fabs(f0)});
    return std::fabs(coarse - fine) <= kStabilityTol * scale &&
           std::fabs(forward - backward) <= kStabilityTol * scale;
  } catch (const EvaluationError&) {
    return false;
  }
}

ValidationReport validate(const LawView& law, std::span<const double> grid, double tol) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, double at, std::string message) {
    report.violations.push_back({kind, at, std::move(message)});
  };

  if (law.domain.contains(0.0)) {
    const double at_zero = law.eval(0.0);
    if (!(std::fabs(at_zero - 1.0) <= tol)) {
      add(ViolationKind::kNotUnitAtZero, 0.0,
          std::string(law.symbol) + "(0)≠1 (got " + at_text(at_zero) + ")");
    }
  }

  for (const double h : grid) {
    if (!law.domain.contains(h)) {
      add(ViolationKind::kOutsideDomain, h, "grid point " + at_text(h) + " outside domain");
      continue;
    }
    const double value = law.eval(h);
    if (!std::isfinite(value)) {
      add(ViolationKind::kNonFinite, h,
          std::string(law.symbol) + "(" + at_text(h) + ") is not finite");
      report.c1_plausible = false;
      continue;
    }
    if (!(value > 0.0)) {
      add(ViolationKind::kNonPositive, h,
          std::string(law.symbol) + "(" + at_text(h) + ") = " + at_text(value) + " <= 0");
    }
    const double reach = 2.0 * kCoarseStep;
    if (law.domain.contains(h - reach) && law.domain.contains(h + reach) &&
        !c1_plausible_at(law.eval, h)) {
      add(ViolationKind::kNotC1Plausible, h,
          "finite differences unstable at " + at_text(h));
      report.c1_plausible = false;
    }
  }
  return report;
}

}  // namespace

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNotUnitAtZero:
      return "not-unit-at-zero";
    case ViolationKind::kNonPositive:
      return "non-positive";
    case ViolationKind::kNonFinite:
      return "non-finite";
    case ViolationKind::kOutsideDomain:
      return "outside-domain";
    case ViolationKind::kNotC1Plausible:
      return "not-c1-plausible";
  }
  return "unknown";
}

ValidationReport validate_capitalization_law(const CapitalizationLaw& u,
                                             std::span<const double> grid, double tol) {
  return validate({u.evaluator(), u.domain(), "u"}, grid, tol);
}

ValidationReport validate_discount_law(const DiscountLaw& F, std::span<const double> grid,
                                       double tol) {
  const RealFn eval = [&F](double h) { return F(h); };
  return validate({eval, Interval{-F.radius(), F.radius()}, "F"}, grid, tol);
}

}  // namespace finfiber
