#pragma once

#include "l2tor/sdf/checks.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace l2tor::sdf {

struct SuiteConfig {
  std::string suite = "basic";  // basic | block | short-exact | gromov-shubin | laplacian
  std::uint64_t seed = 20240601;
  std::size_t instances = 1000;
  int max_dim = 6;
};

struct SuiteViolation {
  std::size_t instance;
  int degree;  // -1 when not applicable
  Violation violation;
};

struct SuiteReport {
  SuiteConfig config;
  std::size_t probes = 0;
  std::vector<SuiteViolation> violations;
  std::map<std::string, std::size_t> checked;
  std::map<std::string, std::size_t> skipped;
  double max_excess = -1.0;  // max of lhs - rhs (or |lhs - rhs| for identities) over all probes
  std::vector<std::string> errors;

  bool ok() const { return violations.empty() && errors.empty(); }
};

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const SuiteConfig& config);
nlohmann::json to_json(const SuiteReport& report);

}  // namespace l2tor::sdf
