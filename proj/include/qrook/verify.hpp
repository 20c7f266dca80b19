#pragma once

#include <string>
#include <vector>

namespace qrook {

/// One checked identity instance.
struct VerifyCase {
  std::string identity;
  std::string input;
  bool pass = false;
  std::string left;
  std::string right;
};

/// Outcome of one verification suite.
struct VerifyReport {
  std::string suite;
  std::vector<VerifyCase> cases;

  int passed() const;
  int failed() const;
};

/// Suite names in report order.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite over all Dyck paths of semilength <= n (fixed-size blocks
/// such as the single-shape reduction ignore the depth).
/// \throws std::invalid_argument for an unknown suite name or n < 1.
VerifyReport run_suite(const std::string& suite, int n);

/// Runs the named suite, or every suite for "all"; reports are ordered by
/// suite name regardless of how they were executed.
std::vector<VerifyReport> run_verification(const std::string& suite, int n);

}  // namespace qrook
