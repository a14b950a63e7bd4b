#pragma once

// Command-line front end:
//   tkk check|build|h2|hc1|verify|steinberg|growth [args] [flags]

#include <string>
#include <vector>

#include "tkk/linalg.hpp"

namespace tkk::cli {

inline constexpr int kSchemaVersion = 1;

enum Exit : int { ok = 0, failed = 1, usage = 2, error = 3 };

struct CommandConfig {
  std::string command;
  std::vector<std::string> args;  // e.g. {"thm32"} for verify, {"sl"} for build
  std::string base = "scalar";    // fixture name or spec path
  int n = 0;                      // 0: command default
  std::string out;                // empty: stdout
  std::string format = "text";    // text | machine
  bool fast = false;
  Index max_dim = 20000;
  std::string kind;  // check: associative | lie | jordan | jts
  int d_max = 3;
  bool verbose = false;
};

struct RunResult {
  int exit_code = Exit::ok;
  std::string report;  // text or one JSON object, newline-terminated
};

/// Runs one command. Errors become a nonzero exit code and a diagnostic
/// report; nothing is thrown.
RunResult run(const CommandConfig& config);

/// Parses argv, runs, writes the report to stdout or --out.
int main(int argc, char** argv);

}  // namespace tkk::cli
