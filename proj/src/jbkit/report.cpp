#include "jbkit/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace jbkit {

const char* const kToolVersion = "jbkit 0.1.0";

void ValidationReport::normalize() {
  std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.check, a.witness) < std::tie(b.check, b.witness);
  });
}

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s):\n";
  for (const auto& v : violations) os << "  " << v.check << ": " << v.witness << "\n";
  return os.str();
}

namespace {
const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skip";
  }
}
}  // namespace

std::string RunReport::text() const {
  std::ostringstream os;
  os << "# " << command << "\n";
  for (const auto& c : checks) {
    os << "[" << status_str(c.status) << "] " << c.name;
    if (!c.details.empty()) os << ": " << c.details;
    os << "\n";
  }
  os << (ok() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
  return os.str();
}

std::string RunReport::json() const {
  nlohmann::json j;
  j["command"] = command;
  j["tool"] = kToolVersion;
  j["result"] = ok() ? "pass" : "fail";
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = status_str(c.status);
    e["details"] = c.details;
    j["checks"].push_back(e);
  }
  return j.dump(2);
}

}  // namespace jbkit
