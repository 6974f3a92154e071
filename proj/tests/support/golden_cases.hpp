#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace finfiber::oracle {

struct GoldenCase {
  const char* name;
  const char* args;
  int exit_code;
};

// Commands run from the golden directory so relative input paths are stable.
inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"project_rate", "project --t 2 --c 121 --rate 0.1", 0},
      {"project_zero_time", "project --t 0 --c 5 --rate 0.3", 0},
      {"project_simple_law", "project --t -1 --c 10 --law simple --param 1.0", 0},
      {"project_bad_flags", "project --t 2 --c 121", 2},
      {"fiber_grid", "fiber --rate 0.1 --base 100 --t-min 0 --t-max 2 --steps 2", 0},
      {"fiber_zero_base", "fiber --rate 0.1 --base 0 --t-min -2 --t-max 2 --steps 4", 0},
      {"fiber_zero_rate", "fiber --rate 0 --base 7 --t-min 0 --t-max 3 --steps 3", 0},
      {"fiber_json", "fiber --rate 0.1 --base 100 --t-min 0 --t-max 2 --steps 2 --format json",
       0},
      {"fiber_bad_steps", "fiber --rate 0.1 --base 100 --t-min 0 --t-max 2 --steps 0", 2},
      {"section_fiber_curve",
       "section-check --input fiber_curve.csv --rate 0.1 --targets 100,100", 0},
      {"section_identity",
       "section-check --input identity_trace.csv --rate 0.1 --targets=-5,5", 0},
      {"section_empty", "section-check --input empty.csv --rate 0.1 --targets 0,1", 2},
      {"section_malformed", "section-check --input malformed.csv --rate 0.1 --targets 0,1", 1},
      {"isomap", "isomap --t 2 --c 121 --from 0.1 --to 0.21", 0},
      {"isomap_csv", "isomap --t 2 --c 121 --from 0.1 --to 0.21 --format csv", 0},
      {"force_compound", "force --law compound --param 0.1 --t 7", 0},
      {"force_simple", "force --law simple --param 0.1 --t 1", 0},
      {"transport_zero", "transport --t 0 --c 100 --h 0 --law compound --param 0.1", 0},
      {"transport_compound", "transport --t 0 --c 100 --h 1 --law compound --param 0.1", 0},
      {"christoffel_compound", "christoffel --law compound --param 0.1 --t 3", 0},
      {"christoffel_simple", "christoffel --law simple --param 0.1 --t 1", 0},
  };
  return cases;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the CLI through the shell in `cwd`, capturing stdout (stderr discarded).
inline CliResult run_cli(const std::string& cli, const std::string& args,
                         const std::string& cwd) {
  const std::string command = "cd '" + cwd + "' && '" + cli + "' " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    return result;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace finfiber::oracle
