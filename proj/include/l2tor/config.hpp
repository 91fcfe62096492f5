#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace l2tor {

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& s);
std::string to_string(OutputFormat f);

struct RunConfig {
  std::uint64_t seed = 20240601;
  /// Verdict tolerances by check name; see default_tolerances().
  std::map<std::string, double> tolerances;
  std::string output;  // empty: stdout
  OutputFormat format = OutputFormat::Json;

  double tolerance(const std::string& name) const;
};

const std::map<std::string, double>& default_tolerances();

/// Defaults, then the JSON config file (if any), then L2TOR_SEED. Unknown keys, unknown tolerance
/// names and nonpositive tolerances are rejected.
RunConfig load_config(const std::optional<std::string>& path);
RunConfig config_from_json(const nlohmann::json& j);
/// Overrides the seed from an L2TOR_SEED value; throws on a malformed value.
void apply_seed_override(RunConfig& config, const char* env_value);

nlohmann::json to_json(const RunConfig& config);

}  // namespace l2tor
