#include "l2tor/jsj/manifest.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace l2tor::jsj;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("l2tor_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

JsjManifest make(std::vector<JsjPiece> pieces) { return JsjManifest{"m", 1, std::move(pieces)}; }

std::string error_of(const nlohmann::json& j) {
  try {
    manifest_from_json(j);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("torsion examples") {
  CHECK(torsion_3manifold(make({{PieceKind::Seifert, 0.0, "a"}, {PieceKind::Seifert, 0.0, "b"}})) == 0.0);
  CHECK(torsion_3manifold(make({{PieceKind::Hyperbolic, 3.0 * kPi, "h"}})) == doctest::Approx(-1.0));
  const auto& fig8 = census_entry("figure-eight knot complement");
  CHECK(hyperbolic_volume(fig8) == doctest::Approx(2.0298832).epsilon(1e-7));
  CHECK(torsion_3manifold(fig8) == doctest::Approx(-hyperbolic_volume(fig8) / (3.0 * kPi)));
  CHECK_FALSE(std::signbit(torsion_3manifold(make({}))));
}

TEST_CASE("graph manifolds") {
  CHECK(is_graph_manifold(make({{PieceKind::Seifert, 0.0, ""}})));
  CHECK_FALSE(is_graph_manifold(make({{PieceKind::Seifert, 0.0, ""}, {PieceKind::Hyperbolic, 1.0, ""}})));
  CHECK(is_graph_manifold(make({})));
  for (const auto& m : shipped_census()) {
    CHECK(torsion_3manifold(m) <= 0.0);
    CHECK(is_graph_manifold(m) == (torsion_3manifold(m) == 0.0));
  }
}

TEST_CASE("additivity and linearity") {
  const auto& a = census_entry("figure-eight knot complement");
  const auto& b = census_entry("Whitehead link complement");
  const auto u = disjoint_union(a, b);
  CHECK(torsion_3manifold(u) == doctest::Approx(torsion_3manifold(a) + torsion_3manifold(b)));
  CHECK(u.pieces.size() == a.pieces.size() + b.pieces.size());
  const auto one = make({{PieceKind::Hyperbolic, 1.7, ""}});
  const auto two = make({{PieceKind::Hyperbolic, 3.4, ""}});
  CHECK(torsion_3manifold(two) == doctest::Approx(2.0 * torsion_3manifold(one)));
}

TEST_CASE("JSON and CSV manifests") {
  const auto jpath = temp_file("m.json", R"({"name": "x", "boundaryTori": 2, "pieces": [
      {"kind": "hyperbolic", "volume": 2.5, "label": "h"}, {"kind": "seifert", "label": "s"}]})");
  const auto m = load_manifest(jpath);
  CHECK(m.name == "x");
  CHECK(m.boundary_tori == 2);
  CHECK(hyperbolic_volume(m) == 2.5);
  const auto cpath = temp_file("m.csv", "# name: y\n# boundaryTori: 1\nkind,volume,label\nhyperbolic,2.5,h\nseifert,0,s\n");
  const auto c = load_manifest(cpath);
  CHECK(c.name == "y");
  CHECK(c.pieces.size() == 2);
  CHECK(torsion_3manifold(c) == torsion_3manifold(m));
  CHECK(manifest_from_json(to_json(m)).pieces.size() == 2);
  const auto r = report(m);
  CHECK(r.contains("assumptions"));
  std::remove(jpath.c_str());
  std::remove(cpath.c_str());
}

TEST_CASE("schema errors name the field") {
  const auto e1 = error_of(nlohmann::json::parse(R"({"name": "x", "pieces": [{"kind": "hyperbolic", "volume": -1}]})"));
  CHECK(e1.find("pieces[0].volume") != std::string::npos);
  const auto e2 = error_of(nlohmann::json::parse(R"({"name": "x", "pieces": [{"kind": "sol", "volume": 1}]})"));
  CHECK(e2.find("sol") != std::string::npos);
  CHECK(e2.find("seifert, hyperbolic") != std::string::npos);
  CHECK(error_of(nlohmann::json::parse(R"({"name": "x", "pieces": [], "extra": 1})")).find("extra") != std::string::npos);
  CHECK_FALSE(error_of(nlohmann::json::parse(R"({"pieces": []})")).empty());

  const auto bad = temp_file("bad.json", "{\"name\": ");
  CHECK_THROWS_AS(load_manifest(bad), std::invalid_argument);
  std::remove(bad.c_str());
  CHECK_THROWS_AS(manifest_from_csv("kind,volume,label\nhyperbolic,abc,x\n"), std::invalid_argument);
  CHECK_THROWS_AS(load_manifest("/nonexistent/manifest.json"), std::runtime_error);
  CHECK_THROWS_AS(census_entry("no such manifold"), std::out_of_range);
}
