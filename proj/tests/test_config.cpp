#include "l2tor/config.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace l2tor;

TEST_CASE("defaults") {
  const auto c = config_from_json(nlohmann::json::object());
  CHECK(c.seed == 20240601u);
  CHECK(c.format == OutputFormat::Json);
  CHECK(c.tolerance("anomaly.sum") == 1e-12);
  CHECK_THROWS_AS(c.tolerance("nope"), std::out_of_range);
}

TEST_CASE("config file values") {
  const auto c = config_from_json(nlohmann::json::parse(R"({"seed": 7, "format": "csv", "tolerances": {"zeta.det": 1e-6}})"));
  CHECK(c.seed == 7u);
  CHECK(c.format == OutputFormat::Csv);
  CHECK(c.tolerance("zeta.det") == 1e-6);
  CHECK(config_from_json(to_json(c)).seed == 7u);
}

TEST_CASE("invalid configs are rejected") {
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"tolerances": {"zeta.det": 0}})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"tolerances": {"zeta.det": -1}})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"tolerances": {"made.up": 1}})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"colour": "red"})")), std::invalid_argument);
  CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"seed": -3})")), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("seed override") {
  RunConfig c;
  apply_seed_override(c, "12345");
  CHECK(c.seed == 12345u);
  apply_seed_override(c, nullptr);
  CHECK(c.seed == 12345u);
  CHECK_THROWS_AS(apply_seed_override(c, "12x"), std::invalid_argument);
  CHECK_THROWS_AS(apply_seed_override(c, "-1"), std::invalid_argument);
}
