#pragma once

#include <string>
#include <vector>

namespace hyperspec {

enum class CheckStatus { Pass, Fail, Skipped };

// One asserted relation `lhs <rel> rhs` with its slack. Failures are data,
// not exceptions.
struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
  std::string note;

  bool passed() const noexcept { return status != CheckStatus::Fail; }
};

const char* to_string(CheckStatus s);

// lhs <= rhs + tol
Check check_le(std::string name, double lhs, double rhs, double tol);
// lhs >= rhs - tol
Check check_ge(std::string name, double lhs, double rhs, double tol);
// lhs < rhs - tol
Check check_lt(std::string name, double lhs, double rhs, double tol);
// |lhs - rhs| <= tol
Check check_near(std::string name, double lhs, double rhs, double tol);
Check skipped(std::string name, std::string why);

bool all_passed(const std::vector<Check>& checks);

}  // namespace hyperspec
