#include "hyperspec/check.hpp"

#include <algorithm>
#include <cmath>

namespace hyperspec {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

namespace {
Check make(std::string name, bool ok, double lhs, double rhs, double tol, std::string note) {
  return Check{std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, lhs, rhs, tol, std::move(note)};
}
}  // namespace

Check check_le(std::string name, double lhs, double rhs, double tol) {
  return make(std::move(name), lhs <= rhs + tol, lhs, rhs, tol, "lhs <= rhs + tol");
}

Check check_ge(std::string name, double lhs, double rhs, double tol) {
  return make(std::move(name), lhs >= rhs - tol, lhs, rhs, tol, "lhs >= rhs - tol");
}

Check check_lt(std::string name, double lhs, double rhs, double tol) {
  return make(std::move(name), lhs < rhs - tol, lhs, rhs, tol, "lhs < rhs - tol");
}

Check check_near(std::string name, double lhs, double rhs, double tol) {
  return make(std::move(name), std::abs(lhs - rhs) <= tol, lhs, rhs, tol, "|lhs - rhs| <= tol");
}

Check skipped(std::string name, std::string why) {
  return Check{std::move(name), CheckStatus::Skipped, 0.0, 0.0, 0.0, std::move(why)};
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

}  // namespace hyperspec
