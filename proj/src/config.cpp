#include "l2tor/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace l2tor {

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw std::invalid_argument("unknown output format \"" + s + "\" (json, csv, text)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Text:
      return "text";
    default:
      return "json";
  }
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> t = {
      {"anomaly.sum", 1e-12},
      {"heatcmp.identity", 1e-12},
      {"hyperbolic.constant", 1e-6},
      {"zeta.det", 1e-8},
  };
  return t;
}

double RunConfig::tolerance(const std::string& name) const {
  const auto it = tolerances.find(name);
  if (it == tolerances.end()) throw std::out_of_range("no tolerance named \"" + name + "\"");
  return it->second;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.tolerances = default_tolerances();
  if (!j.is_object()) throw std::invalid_argument("config: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      if (!value.is_number_unsigned()) throw std::invalid_argument("config: seed must be a nonnegative integer");
      c.seed = value.get<std::uint64_t>();
    } else if (key == "tolerances") {
      if (!value.is_object()) throw std::invalid_argument("config: tolerances must be an object");
      for (const auto& [name, tol] : value.items()) {
        if (!c.tolerances.count(name)) throw std::invalid_argument("config: unknown tolerance \"" + name + "\"");
        if (!tol.is_number() || !(tol.get<double>() > 0.0) || !std::isfinite(tol.get<double>()))
          throw std::invalid_argument("config: tolerance \"" + name + "\" must be a positive number");
        c.tolerances[name] = tol.get<double>();
      }
    } else if (key == "output") {
      if (!value.is_string()) throw std::invalid_argument("config: output must be a string");
      c.output = value.get<std::string>();
    } else if (key == "format") {
      if (!value.is_string()) throw std::invalid_argument("config: format must be a string");
      c.format = parse_format(value.get<std::string>());
    } else {
      throw std::invalid_argument("config: unknown key \"" + key + "\"");
    }
  }
  return c;
}

void apply_seed_override(RunConfig& config, const char* env_value) {
  if (!env_value) return;
  const std::string s(env_value);
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!s.empty() && s[0] != '-') v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw std::invalid_argument("L2TOR_SEED must be a nonnegative integer, got \"" + s + "\"");
  config.seed = v;
}

RunConfig load_config(const std::optional<std::string>& path) {
  RunConfig c;
  c.tolerances = default_tolerances();
  if (path) {
    std::ifstream in(*path);
    if (!in) throw std::runtime_error("cannot open config file " + *path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(*path + ": config must be JSON: " + e.what());
    }
    c = config_from_json(j);
  }
  apply_seed_override(c, std::getenv("L2TOR_SEED"));
  return c;
}

nlohmann::json to_json(const RunConfig& config) {
  return {{"seed", config.seed}, {"tolerances", config.tolerances}, {"format", to_string(config.format)}};
}

}  // namespace l2tor
