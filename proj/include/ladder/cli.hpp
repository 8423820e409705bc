#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ladder::cli {

/// Exit statuses of run().
enum Status : int {
  ok = 0,
  verification_failed = 1,
  input_error = 2,
};

/// Runs one ladderlab command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ladder::cli
