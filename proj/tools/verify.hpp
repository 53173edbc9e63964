#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ctri::cli {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string group;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  bool fast = false;  // skip the multi-second prefix extraction
  bool slow = false;  // add the large Table-style cells, P_8, P_9 and the n = 14, 15 prefixes
  int threads = 1;
  std::function<void(const CheckResult&)> on_result;
};

/// Recomputes every embedded reference value and compares.
std::vector<CheckResult> run_golden_suite(const VerifyOptions& options);

const char* status_label(CheckStatus s);

}  // namespace ctri::cli
