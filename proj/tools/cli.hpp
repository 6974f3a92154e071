#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace finfiber::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2 };

using Value = std::variant<std::nullptr_t, bool, double, std::string>;
using Fields = std::vector<std::pair<std::string, Value>>;

/// One command invocation: echoed inputs, named outputs and optional table rows.
struct OutputRecord {
  std::string command;
  Fields inputs;
  Fields outputs;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// 17 significant digits, '.' decimal, locale independent.
std::string format_real(double x);

std::string to_json(const OutputRecord& record);
std::string to_csv(const OutputRecord& record);

struct Samples {
  std::vector<double> times;
  std::vector<double> values;
};

/// Parses a `t,M` CSV (header row, strictly increasing t). Malformed input
/// throws std::runtime_error naming the source and line; a file with no data
/// rows throws std::invalid_argument.
Samples read_samples_csv(std::istream& in, const std::string& source);

/// Default tolerance, overridden by FINFIBER_TOL. Throws std::invalid_argument
/// if the variable is set to something other than a positive number.
double tolerance_from_env();

/// Runs one command line (argv[0] included). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace finfiber::cli
