#pragma once

#include <string>
#include <vector>

namespace skoszul {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

// Outcome of a verification run. Mathematical failures are recorded here,
// never thrown.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(std::string name, bool ok, std::string detail = {});
  void skip(std::string name, std::string detail);
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

}  // namespace skoszul
