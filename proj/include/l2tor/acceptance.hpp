#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace l2tor::acceptance {

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  std::vector<CriterionResult> parts;  // per-suite rows of an aggregate criterion
};

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Criterion ids in reporting order.
const std::vector<std::string>& criterion_ids();
/// Throws std::invalid_argument for an unknown id.
CriterionResult run_criterion(const std::string& id, std::uint64_t seed = kDefaultSeed);
std::vector<CriterionResult> run_all(std::uint64_t seed = kDefaultSeed);

/// "PASS  id  title  detail" lines; parts indented below their criterion when requested.
std::string format_table(const std::vector<CriterionResult>& results, bool with_parts);

}  // namespace l2tor::acceptance
