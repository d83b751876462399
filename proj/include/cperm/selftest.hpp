#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cperm {

enum class SelftestLevel { kQuick, kFull };

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = true;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;  // one line per failed check, identity checks start with the id
  double seconds = 0;
};

struct SelftestOptions {
  SelftestLevel level = SelftestLevel::kQuick;
  int jobs = 1;
  std::string tamper;             // forwarded to every identity verification
  std::vector<int> only;          // criterion numbers to run; empty = all
  std::function<void(const CriterionResult&)> on_result;  // called as each criterion finishes
};

struct SelftestReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

inline constexpr int kCriterionCount = 19;

SelftestReport run_selftest(const SelftestOptions& options);

/// "PASS 05 ..." style line.
std::string format_result(const CriterionResult& r, bool with_timing);

}  // namespace cperm
