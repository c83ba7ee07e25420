#pragma once

#include <string>
#include <vector>

#include "tube/app/report.hpp"

namespace tube::app {

// Parses args (without the program name), runs the command and returns its
// report. The echo of args is stored in the report. Throws CliExit for help
// and usage errors after printing them.
struct CliExit {
  int code;
};

struct Invocation {
  Report report;
  std::string out_path;  // empty: stdout
};

Invocation execute(const std::vector<std::string>& args);

// Full program: prints the report, exit code 0 iff every row passed.
int run_main(int argc, char** argv);

}  // namespace tube::app
