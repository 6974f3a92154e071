#include "finfiber/section.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace finfiber {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

bool CapitalDomain::contains(double c) const {
  if (const auto* interval = std::get_if<Interval>(&domain_)) {
    return interval->contains(c);
  }
  const auto& points = std::get<std::vector<double>>(domain_);
  return std::find(points.begin(), points.end(), c) != points.end();
}

std::vector<double> CapitalDomain::samples(std::size_t n) const {
  if (const auto* interval = std::get_if<Interval>(&domain_)) {
    if (!std::isfinite(interval->lo) || !std::isfinite(interval->hi)) {
      throw std::invalid_argument("cannot sample an unbounded capital interval");
    }
    return linspace(interval->lo, interval->hi, n);
  }
  return std::get<std::vector<double>>(domain_);
}

FinancialEvent Section::operator()(double c) const {
  if (!domain_.contains(c)) {
    throw DomainError("capital " + num(c) + " outside the section domain");
  }
  const double t = time_map_(c);
  if (!std::isfinite(t)) {
    throw EvaluationError("time map is not finite at c = " + num(c));
  }
  const double capital = std::pow(rate_.accumulation(), t) * c;
  if (!std::isfinite(capital)) {
    throw RangeError("section value overflows at c = " + num(c));
  }
  return {t, capital};
}

Section section_from_time_map(RealFn time_map, Rate rate, CapitalDomain domain) {
  if (!time_map) {
    throw std::invalid_argument("section needs a time map");
  }
  for (const double c : domain.samples()) {
    if (!std::isfinite(time_map(c))) {
      throw EvaluationError("time map is not finite at c = " + num(c));
    }
  }
  return Section(std::move(time_map), rate, std::move(domain));
}

bool is_section(const RealFn& s1, const RealFn& s2, Rate rate, const CapitalDomain& domain,
                double tol) {
  const double u = rate.accumulation();
  for (const double c : domain.samples()) {
    const double t = s1(c);
    const double capital = s2(c);
    if (!std::isfinite(t) || !std::isfinite(capital)) {
      return false;
    }
    if (!nearly_equal(capital, c * std::pow(u, t), tol)) {
      return false;
    }
  }
  return true;
}

CapitalEvolution::CapitalEvolution(RealFn eval, std::optional<RealFn> derivative,
                                   Interval domain, std::vector<double> grid)
    : eval_(std::move(eval)),
      derivative_(std::move(derivative)),
      domain_(domain),
      grid_(std::move(grid)) {
  if (!eval_) {
    throw std::invalid_argument("capital evolution needs an evaluator");
  }
  if (grid_.empty()) {
    throw std::invalid_argument("capital evolution grid is empty");
  }
  for (std::size_t k = 0; k < grid_.size(); ++k) {
    if (!std::isfinite(grid_[k]) || !domain_.contains(grid_[k])) {
      throw std::invalid_argument("grid point " + num(grid_[k]) + " outside the domain");
    }
    if (k > 0 && !(grid_[k] > grid_[k - 1])) {
      throw std::invalid_argument("grid must be strictly increasing (at t = " +
                                  num(grid_[k]) + ")");
    }
  }
}

CapitalEvolution CapitalEvolution::from_samples(std::vector<double> times,
                                                std::vector<double> values) {
  if (times.size() != values.size()) {
    throw std::invalid_argument("times and values differ in length");
  }
  if (times.empty()) {
    throw std::invalid_argument("capital evolution grid is empty");
  }
  const Interval domain{times.front(), times.back()};
  auto lookup = [times, values](double t) {
    const auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end() || *it != t) {
      throw DomainError("sampled evolution has no value at t = " + num(t));
    }
    return values[static_cast<std::size_t>(it - times.begin())];
  };
  return CapitalEvolution(std::move(lookup), std::nullopt, domain, std::move(times));
}

double CapitalEvolution::derivative(double t) const {
  if (derivative_) {
    return (*derivative_)(t);
  }
  return fd_derivative(eval_, t, kDefaultFdStep);
}

std::string_view to_string(TraceFailure failure) {
  switch (failure) {
    case TraceFailure::kInjectivity:
      return "injectivity";
    case TraceFailure::kSurjectivity:
      return "surjectivity";
    case TraceFailure::kProjectionMismatch:
      return "projection-mismatch";
  }
  return "unknown";
}

TraceReport trace_test(const CapitalEvolution& M, Rate rate, Interval targets, double tol) {
  if (!(targets.lo <= targets.hi)) {
    throw std::invalid_argument("targets interval is empty");
  }
  TraceReport report;
  const auto& grid = M.grid();
  const double u = rate.accumulation();

  std::vector<std::pair<double, double>> witness;
  witness.reserve(grid.size());
  double scale = 1.0;
  for (const double t : grid) {
    const double v = M(t) * std::pow(u, -t);
    if (!std::isfinite(v)) {
      report.failure_reason = TraceFailure::kProjectionMismatch;
      report.detail = "M(t) u^-t is not finite at t = " + num(t);
      return report;
    }
    scale = std::max(scale, std::fabs(v));
    witness.emplace_back(t, v);
  }
  const double gap = tol * scale;

  std::vector<double> sorted(witness.size());
  std::transform(witness.begin(), witness.end(), sorted.begin(),
                 [](const auto& p) { return p.second; });
  std::sort(sorted.begin(), sorted.end());
  report.values_distinct = true;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (!(sorted[k] - sorted[k - 1] > gap)) {
      report.values_distinct = false;
      break;
    }
  }

  bool increasing = true;
  bool decreasing = true;
  std::size_t first_break = 0;
  for (std::size_t k = 1; k < witness.size(); ++k) {
    const double d = witness[k].second - witness[k - 1].second;
    increasing = increasing && d > gap;
    decreasing = decreasing && d < -gap;
    if (!increasing && !decreasing) {
      first_break = k;
      break;
    }
  }
  report.strictly_monotone = increasing || decreasing;

  const double lo = sorted.front();
  const double hi = sorted.back();
  const double slack =
      tol * std::max({scale, std::fabs(targets.lo), std::fabs(targets.hi)});
  const bool covers = std::isfinite(targets.lo) && std::isfinite(targets.hi) &&
                      targets.lo >= lo - slack && targets.hi <= hi + slack;

  report.witness = std::move(witness);
  if (!report.strictly_monotone) {
    report.failure_reason = TraceFailure::kInjectivity;
    const double t = (*report.witness)[first_break].first;
    report.detail = report.values_distinct
                        ? "v changes direction at t = " + num(t)
                        : "v repeats a value (first monotonicity break at t = " + num(t) + ")";
  } else if (!covers) {
    report.failure_reason = TraceFailure::kSurjectivity;
    report.detail = "sampled range [" + num(lo) + ", " + num(hi) + "] does not cover [" +
                    num(targets.lo) + ", " + num(targets.hi) + "]";
  } else {
    report.is_trace = true;
  }
  return report;
}

bool decreasing_evolution_shortcut(const CapitalEvolution& M, Rate rate) {
  if (!(rate.value() > 0.0)) {
    throw InapplicableError("decreasing-evolution test needs a positive rate");
  }
  bool all_negative = true;
  for (const double t : M.grid()) {
    if (!(M(t) > 0.0)) {
      throw InapplicableError("evolution must be strictly positive, M(" + num(t) +
                              ") = " + num(M(t)));
    }
    all_negative = all_negative && M.derivative(t) < 0.0;
  }
  return all_negative;
}

}  // namespace finfiber
