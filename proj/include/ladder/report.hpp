#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ladder {

/// One named verification outcome.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of checks. Verifiers return these instead of throwing so
/// callers can print every failure at once.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  /// Records a check and returns `passed` for chaining.
  bool add(std::string name, bool passed, std::string detail = {});
  /// Appends every check of `other`, prefixing names with `prefix`.
  void merge(const Report& other, const std::string& prefix = {});

  bool ok() const;
  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check> failures() const;
  /// First failing check's "name: detail", or empty when all pass.
  std::string first_failure() const;

  nlohmann::ordered_json to_json() const;
  std::string summary() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace ladder
