#pragma once

#include <string>
#include <vector>

namespace youngrep {

/// Largest n accepted by run_verification.
inline constexpr int kVerifyLimit = 8;

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct VerificationReport {
  int n = 1;
  bool with_oracle = false;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Runs the invariant suites for S_n: golden S_4 data (n = 4 only), hook
/// formula against enumeration, sum of squared dimensions, Coxeter
/// relations, homomorphism, orthogonality, class constancy, reduced words
/// and, optionally, agreement with the tabloid oracle.  Exhaustive where
/// the group is small, seeded random samples otherwise.  Throws LimitError
/// for n > kVerifyLimit.
VerificationReport run_verification(int n, bool with_oracle);

} // namespace youngrep
