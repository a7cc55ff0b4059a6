#pragma once

#include <string>
#include <vector>

namespace jbkit {

// One violated identity with a witness precise enough to recheck by hand.
struct Violation {
  std::string check;
  std::string witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string check, std::string witness) {
    violations.push_back({std::move(check), std::move(witness)});
  }
  void merge(const ValidationReport& o) {
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
  // Deterministic order regardless of the execution policy that found them.
  void normalize();
  std::string str() const;
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string details;  // witnesses / values, deterministic
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;

  void add(std::string name, bool passed, std::string details = "") {
    checks.push_back({std::move(name), passed ? CheckStatus::pass : CheckStatus::fail,
                      std::move(details)});
  }
  void add_skip(std::string name, std::string details = "") {
    checks.push_back({std::move(name), CheckStatus::skip, std::move(details)});
  }
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::fail) return false;
    return true;
  }
  // 0 if all executed checks passed, 1 otherwise.
  int exit_code() const { return ok() ? 0 : 1; }

  std::string text() const;
  std::string json() const;
};

extern const char* const kToolVersion;

}  // namespace jbkit
