#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "finfiber/finfiber.hpp"

namespace finfiber::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (const char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          out += fmt::format("\\u{:04x}", static_cast<int>(ch));
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

std::string json_value(const Value& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          return "null";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else {
          return json_string(v);
        }
      },
      value);
}

std::string csv_value(const Value& value) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::nullptr_t>) {
          return "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else {
          return v;
        }
      },
      value);
}

std::string json_object(const Fields& fields) {
  std::string out = "{";
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k > 0) {
      out += ',';
    }
    out += json_string(fields[k].first) + ':' + json_value(fields[k].second);
  }
  out += '}';
  return out;
}

std::string csv_row(const std::vector<double>& row) {
  std::string out;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k > 0) {
      out += ',';
    }
    out += format_real(row[k]);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') {
    s.remove_prefix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

Interval parse_targets(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--targets expects lo,hi");
  }
  const auto lo = parse_real(std::string_view(text).substr(0, comma));
  const auto hi = parse_real(std::string_view(text).substr(comma + 1));
  if (!lo || !hi || !(*lo <= *hi)) {
    throw UsageError("--targets expects lo,hi with lo <= hi");
  }
  return {*lo, *hi};
}

enum class Format { kCsv, kJson };

Format parse_format(const std::string& text) {
  if (text == "csv") {
    return Format::kCsv;
  }
  if (text == "json") {
    return Format::kJson;
  }
  throw UsageError("--format must be csv or json");
}

void emit(const OutputRecord& record, Format format, std::ostream& out) {
  out << (format == Format::kJson ? to_json(record) : to_csv(record));
  out.flush();
}

Rate make_rate(double i, const char* flag) {
  if (!std::isfinite(i) || !(i > -1.0)) {
    throw UsageError(fmt::format("{} must be greater than -1", flag));
  }
  return Rate(i);
}

CapitalizationLaw make_registry_law(const std::string& id, double param) {
  try {
    return make_law(id, param);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Options shared by several subcommands; each subcommand binds the subset it uses.
struct Options {
  double t = 0.0;
  double c = 0.0;
  double h = 0.0;
  double rate = 0.0;
  double base = 0.0;
  double from = 0.0;
  double to = 0.0;
  double param = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  double radius = 0.0;
  long steps = 0;
  std::string law;
  std::string input;
  std::string targets;
  std::string witness;
  std::string format;
};

const std::vector<std::string> kLawIds = {std::string(kCompound), std::string(kSimple),
                                          std::string(kExpForce)};

void add_law_options(CLI::App* sub, Options& o, bool required) {
  auto* law = sub->add_option("--law", o.law, "registry law id")
                  ->check(CLI::IsMember(kLawIds));
  auto* param = sub->add_option("--param", o.param, "law parameter (rate i or force delta)");
  param->needs(law);
  law->needs(param);
  if (required) {
    law->required();
    param->required();
  }
}

void add_format(CLI::App* sub, Options& o, const char* fallback) {
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_str(fallback);
}

Format resolve_format(const Options& o, Format fallback) {
  return o.format.empty() ? fallback : parse_format(o.format);
}

int cmd_project(const CLI::App& sub, const Options& o, std::ostream& out) {
  OutputRecord record{"project", {{"t", o.t}, {"c", o.c}}, {}, {}, {}};
  const FinancialEvent e(o.t, o.c);
  double base = 0.0;
  if (sub.count("--rate") > 0) {
    record.inputs.emplace_back("rate", o.rate);
    base = project_compound(e, make_rate(o.rate, "--rate"));
  } else if (sub.count("--law") > 0) {
    record.inputs.emplace_back("law", o.law);
    record.inputs.emplace_back("param", o.param);
    base = project_general(e, make_registry_law(o.law, o.param));
  } else {
    throw UsageError("project needs --rate or --law/--param");
  }
  record.outputs.emplace_back("base", base);
  emit(record, resolve_format(o, Format::kJson), out);
  return kOk;
}

int cmd_fiber(const Options& o, std::ostream& out) {
  if (o.steps < 1) {
    throw UsageError("--steps must be at least 1");
  }
  const Fiber fiber{make_rate(o.rate, "--rate"), o.base};
  OutputRecord record{"fiber",
                      {{"rate", o.rate},
                       {"base", o.base},
                       {"t_min", o.t_min},
                       {"t_max", o.t_max},
                       {"steps", static_cast<double>(o.steps)}},
                      {},
                      {"t", "M"},
                      {}};
  const auto times = linspace(o.t_min, o.t_max, static_cast<std::size_t>(o.steps));
  const Format format = resolve_format(o, Format::kCsv);
  if (format == Format::kCsv) {
    out << "t,M\n";
    for (const double t : times) {
      out << csv_row({t, fiber_eval(fiber, t)}) << '\n';
      out.flush();
    }
    return kOk;
  }
  for (const double t : times) {
    record.rows.push_back({t, fiber_eval(fiber, t)});
  }
  emit(record, format, out);
  return kOk;
}

int cmd_section_check(const Options& o, double tol, std::ostream& out) {
  const Rate rate = make_rate(o.rate, "--rate");
  const Interval targets = parse_targets(o.targets);
  std::ifstream in(o.input);
  if (!in) {
    throw std::runtime_error("cannot open " + o.input);
  }
  Samples samples = read_samples_csv(in, o.input);
  const auto evolution =
      CapitalEvolution::from_samples(std::move(samples.times), std::move(samples.values));
  const TraceReport report = trace_test(evolution, rate, targets, tol);

  Value witness_path = nullptr;
  if (!o.witness.empty() && report.witness) {
    std::ofstream w(o.witness);
    if (!w) {
      throw std::runtime_error("cannot write " + o.witness);
    }
    w << "t,v\n";
    for (const auto& [t, v] : *report.witness) {
      w << csv_row({t, v}) << '\n';
    }
    witness_path = o.witness;
  }

  OutputRecord record{"section-check",
                      {{"input", o.input},
                       {"rate", o.rate},
                       {"targets_lo", targets.lo},
                       {"targets_hi", targets.hi},
                       {"tol", tol}},
                      {},
                      {},
                      {}};
  record.outputs.emplace_back("is_trace", report.is_trace);
  record.outputs.emplace_back(
      "failure_reason",
      report.failure_reason ? Value(std::string(to_string(*report.failure_reason))) : nullptr);
  record.outputs.emplace_back("values_distinct", report.values_distinct);
  record.outputs.emplace_back("strictly_monotone", report.strictly_monotone);
  record.outputs.emplace_back("samples", static_cast<double>(evolution.grid().size()));
  record.outputs.emplace_back("witness_path", witness_path);
  emit(record, resolve_format(o, Format::kJson), out);
  return kOk;
}

int cmd_transport(const CLI::App& sub, const Options& o, std::ostream& out) {
  const auto u = make_registry_law(o.law, o.param);
  OutputRecord record{"transport",
                      {{"t", o.t}, {"c", o.c}, {"h", o.h}, {"law", o.law}, {"param", o.param}},
                      {},
                      {},
                      {}};
  std::optional<double> radius;
  if (sub.count("--radius") > 0) {
    if (!(o.radius > 0.0)) {
      throw UsageError("--radius must be positive");
    }
    radius = o.radius;
    record.inputs.emplace_back("radius", o.radius);
  }
  const DiscountLaw F = induced_discount(u, o.t, radius);
  const FinancialEvent moved = financial_translate(FinancialEvent(o.t, o.c), o.h, F);
  record.outputs = {{"t", moved.time}, {"c", moved.capital}};
  emit(record, resolve_format(o, Format::kJson), out);
  return kOk;
}

int cmd_christoffel(const Options& o, std::ostream& out) {
  const auto u = make_registry_law(o.law, o.param);
  const ChristoffelForm G = christoffel_from_discount(induced_discount(u, o.t), o.t);
  OutputRecord record{"christoffel",
                      {{"law", o.law}, {"param", o.param}, {"t", o.t}},
                      {{"time", G.time}, {"gamma", G.gamma}},
                      {},
                      {}};
  emit(record, resolve_format(o, Format::kJson), out);
  return kOk;
}

int cmd_force(const Options& o, std::ostream& out) {
  const auto u = make_registry_law(o.law, o.param);
  OutputRecord record{"force",
                      {{"law", o.law}, {"param", o.param}, {"t", o.t}},
                      {{"delta", force_of_interest(u, o.t)}},
                      {},
                      {}};
  emit(record, resolve_format(o, Format::kJson), out);
  return kOk;
}

int cmd_isomap(const Options& o, std::ostream& out) {
  const FinancialEvent mapped = rate_isomorphism(
      FinancialEvent(o.t, o.c), make_rate(o.from, "--from"), make_rate(o.to, "--to"));
  OutputRecord record{"isomap",
                      {{"t", o.t}, {"c", o.c}, {"from", o.from}, {"to", o.to}},
                      {{"t", mapped.time}, {"c", mapped.capital}},
                      {},
                      {}};
  emit(record, resolve_format(o, Format::kJson), out);
  return kOk;
}

}  // namespace

std::string format_real(double x) { return fmt::format("{:.17g}", x); }

std::string to_json(const OutputRecord& record) {
  std::string out = "{\"command\":" + json_string(record.command);
  out += ",\"inputs\":" + json_object(record.inputs);
  if (!record.outputs.empty()) {
    out += ",\"outputs\":" + json_object(record.outputs);
  }
  if (!record.columns.empty()) {
    out += ",\"columns\":[";
    for (std::size_t k = 0; k < record.columns.size(); ++k) {
      out += (k > 0 ? "," : "") + json_string(record.columns[k]);
    }
    out += "],\"rows\":[";
    for (std::size_t k = 0; k < record.rows.size(); ++k) {
      out += (k > 0 ? ",[" : "[") + csv_row(record.rows[k]) + "]";
    }
    out += "]";
  }
  out += "}\n";
  return out;
}

std::string to_csv(const OutputRecord& record) {
  std::string out;
  if (!record.columns.empty()) {
    for (std::size_t k = 0; k < record.columns.size(); ++k) {
      out += (k > 0 ? "," : "") + record.columns[k];
    }
    out += '\n';
    for (const auto& row : record.rows) {
      out += csv_row(row) + '\n';
    }
    return out;
  }
  std::string header;
  std::string values;
  for (std::size_t k = 0; k < record.outputs.size(); ++k) {
    header += (k > 0 ? "," : "") + record.outputs[k].first;
    values += (k > 0 ? "," : "") + csv_value(record.outputs[k].second);
  }
  return header + '\n' + values + '\n';
}

Samples read_samples_csv(std::istream& in, const std::string& source) {
  Samples samples;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) {
      continue;
    }
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
      throw std::runtime_error(
          fmt::format("{}:{}: expected exactly two comma-separated fields", source, line_no));
    }
    const auto first = trim(text.substr(0, comma));
    const auto second = trim(text.substr(comma + 1));
    if (!seen_header) {
      if (first != "t" || second != "M") {
        throw std::runtime_error(
            fmt::format("{}:{}: expected header 't,M'", source, line_no));
      }
      seen_header = true;
      continue;
    }
    const auto t = parse_real(first);
    const auto m = parse_real(second);
    if (!t || !m) {
      throw std::runtime_error(fmt::format("{}:{}: cannot parse number", source, line_no));
    }
    if (!std::isfinite(*t) || !std::isfinite(*m)) {
      throw std::runtime_error(fmt::format("{}:{}: non-finite value", source, line_no));
    }
    if (!samples.times.empty() && !(*t > samples.times.back())) {
      throw std::runtime_error(
          fmt::format("{}:{}: t must be strictly increasing", source, line_no));
    }
    samples.times.push_back(*t);
    samples.values.push_back(*m);
  }
  if (samples.times.empty()) {
    throw std::invalid_argument(source + ": no samples");
  }
  return samples;
}

double tolerance_from_env() {
  const char* env = std::getenv("FINFIBER_TOL");
  if (env == nullptr || *env == '\0') {
    return kDefaultTolerance;
  }
  const auto tol = parse_real(env);
  if (!tol || !(*tol > 0.0) || !std::isfinite(*tol)) {
    throw std::invalid_argument("FINFIBER_TOL must be a positive number");
  }
  return *tol;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibrations of financial events: projections, isomorphisms, sections and "
               "connections",
               "finfiber"};
  app.require_subcommand(1);
  Options o;

  auto* project = app.add_subcommand("project", "present value of an event (base capital)");
  project->add_option("--t", o.t, "event time")->required();
  project->add_option("--c", o.c, "event capital")->required();
  auto* project_rate = project->add_option("--rate", o.rate, "compound rate i");
  add_law_options(project, o, false);
  project_rate->excludes(project->get_option("--law"));
  add_format(project, o, "json");

  auto* fiber = app.add_subcommand("fiber", "sample the fiber curve (1+i)^t c0");
  fiber->add_option("--rate", o.rate, "compound rate i")->required();
  fiber->add_option("--base", o.base, "base capital c0")->required();
  fiber->add_option("--t-min", o.t_min)->required();
  fiber->add_option("--t-max", o.t_max)->required();
  fiber->add_option("--steps", o.steps, "number of intervals")->required();
  add_format(fiber, o, "csv");

  auto* section = app.add_subcommand("section-check", "is a sampled evolution a section trace?");
  section->add_option("--input", o.input, "CSV with header t,M")->required();
  section->add_option("--rate", o.rate, "compound rate i")->required();
  section->add_option("--targets", o.targets, "capital interval lo,hi")->required();
  section->add_option("--witness", o.witness, "write witness samples (t,v) to this CSV");
  add_format(section, o, "json");

  auto* transport = app.add_subcommand("transport", "financial translation by h");
  transport->set_help_flag("--help", "Print this help message and exit");
  transport->add_option("--t", o.t)->required();
  transport->add_option("--c", o.c)->required();
  transport->add_option("--h", o.h)->required();
  transport->add_option("--radius", o.radius, "discount law neighborhood radius");
  add_law_options(transport, o, true);
  add_format(transport, o, "json");

  auto* christoffel = app.add_subcommand("christoffel", "Christoffel coefficient F'(0) at t");
  christoffel->add_option("--t", o.t)->required();
  add_law_options(christoffel, o, true);
  add_format(christoffel, o, "json");

  auto* force = app.add_subcommand("force", "force of interest u'(t)/u(t)");
  force->add_option("--t", o.t)->required();
  add_law_options(force, o, true);
  add_format(force, o, "json");

  auto* isomap = app.add_subcommand("isomap", "rate-change isomorphism");
  isomap->add_option("--t", o.t)->required();
  isomap->add_option("--c", o.c)->required();
  isomap->add_option("--from", o.from, "source rate i")->required();
  isomap->add_option("--to", o.to, "target rate i'")->required();
  add_format(isomap, o, "json");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "finfiber: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const double tol = tolerance_from_env();
    if (project->parsed()) {
      return cmd_project(*project, o, out);
    }
    if (fiber->parsed()) {
      return cmd_fiber(o, out);
    }
    if (section->parsed()) {
      return cmd_section_check(o, tol, out);
    }
    if (transport->parsed()) {
      return cmd_transport(*transport, o, out);
    }
    if (christoffel->parsed()) {
      return cmd_christoffel(o, out);
    }
    if (force->parsed()) {
      return cmd_force(o, out);
    }
    if (isomap->parsed()) {
      return cmd_isomap(o, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "finfiber: usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "finfiber: error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace finfiber::cli
