#pragma once

#include <string>
#include <vector>

namespace placto {

/// Outcome of a verification suite.
struct Report {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;
  double elapsed_ms = 0;
  long domain_size = 0;
  int max_degree = 0;

  bool ok() const { return failures.empty(); }
  void check(bool cond, const std::string& what) {
    ++checks;
    if (!cond) fail(what);
  }
  void fail(const std::string& what) {
    if (failures.size() < 50)
      failures.push_back(what);
    else if (failures.size() == 50)
      failures.push_back("(further failures suppressed)");
  }
  void merge(const Report& o) {
    checks += o.checks;
    for (const auto& f : o.failures) fail(f);
  }
};

}  // namespace placto
