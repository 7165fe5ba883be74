#include "skoszul/report.hpp"

#include <algorithm>

namespace skoszul {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back(CheckResult{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  checks.push_back(CheckResult{std::move(name), CheckStatus::Skipped, std::move(detail)});
}

bool Report::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace skoszul
