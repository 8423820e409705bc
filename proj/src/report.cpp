#include "ladder/report.hpp"

#include <sstream>

namespace ladder {

bool Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
  return passed;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.passed, c.detail});
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

std::vector<Check> Report::failures() const {
  std::vector<Check> out;
  for (const auto& c : checks_)
    if (!c.passed) out.push_back(c);
  return out;
}

std::string Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return c.detail.empty() ? c.name : c.name + ": " + c.detail;
  return {};
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  if (!title_.empty()) j["title"] = title_;
  j["ok"] = ok();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return j;
}

std::string Report::summary() const {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks_) passed += c.passed;
  os << (title_.empty() ? "report" : title_) << ": " << passed << "/" << checks_.size() << " checks passed";
  for (const auto& c : checks_)
    if (!c.passed) os << "\n  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail);
  return os.str();
}

}  // namespace ladder
