#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace contraction::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t checked = 0;
  std::string detail;  // first failure, or a summary
};

inline constexpr int kCriteria = 10;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Runs criterion `id` in [1, kCriteria].
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// "PASS  3 b-map window  (1717 checks)" or "FAIL ... : <detail>".
std::string format_line(const CriterionResult& r);

}  // namespace contraction::selftest
