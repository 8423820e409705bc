#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ladder::acceptance {

struct Options {
  std::string fixture_dir;        // JSON fixtures checked for round-trips; empty skips the disk part
  std::uint64_t seed = 20240611;  // random lattices of the skeleton pipeline
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;  // every check held and the time limit was met
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

/// Runs criteria 1-10 in order.
std::vector<CriterionResult> run_all(const Options& options);

/// One line per criterion: "PASS  3 skeleton pipeline  0.41s/30s  detail".
void print(std::ostream& out, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace ladder::acceptance
