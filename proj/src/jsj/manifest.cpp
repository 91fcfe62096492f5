#include "l2tor/jsj/manifest.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace l2tor::jsj {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void schema_error(const std::string& field, const std::string& what) {
  throw std::invalid_argument(field + ": " + what);
}

PieceKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "seifert") return PieceKind::Seifert;
  if (s == "hyperbolic") return PieceKind::Hyperbolic;
  schema_error(where, "unknown kind \"" + s + "\" (allowed kinds: seifert, hyperbolic)");
}

void check_volume(PieceKind kind, double volume, const std::string& where) {
  if (!std::isfinite(volume)) schema_error(where, "volume must be finite");
  if (volume < 0.0) schema_error(where, "volume must be nonnegative");
  if (kind == PieceKind::Hyperbolic && volume == 0.0) schema_error(where, "hyperbolic piece needs a positive volume");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

JsjManifest manifest_from_json(const nlohmann::json& j) {
  if (!j.is_object()) schema_error("manifest", "expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "boundaryTori" && key != "pieces") schema_error(key, "unknown field");
  JsjManifest m;
  if (!j.contains("name") || !j["name"].is_string()) schema_error("name", "required string");
  m.name = j["name"].get<std::string>();
  if (j.contains("boundaryTori")) {
    const auto& b = j["boundaryTori"];
    if (!b.is_number_integer() || b.get<long>() < 0) schema_error("boundaryTori", "must be a nonnegative integer");
    m.boundary_tori = b.get<long>();
  }
  if (!j.contains("pieces") || !j["pieces"].is_array()) schema_error("pieces", "required array");
  for (std::size_t i = 0; i < j["pieces"].size(); ++i) {
    const auto& p = j["pieces"][i];
    const std::string where = "pieces[" + std::to_string(i) + "]";
    if (!p.is_object()) schema_error(where, "expected an object");
    for (const auto& [key, value] : p.items())
      if (key != "kind" && key != "volume" && key != "label") schema_error(where + "." + key, "unknown field");
    if (!p.contains("kind") || !p["kind"].is_string()) schema_error(where + ".kind", "required string");
    JsjPiece piece;
    piece.kind = parse_kind(p["kind"].get<std::string>(), where + ".kind");
    if (p.contains("volume")) {
      if (!p["volume"].is_number()) schema_error(where + ".volume", "must be a number");
      piece.volume = p["volume"].get<double>();
    } else if (piece.kind == PieceKind::Hyperbolic) {
      schema_error(where + ".volume", "required for hyperbolic pieces");
    }
    check_volume(piece.kind, piece.volume, where + ".volume");
    if (p.contains("label")) {
      if (!p["label"].is_string()) schema_error(where + ".label", "must be a string");
      piece.label = p["label"].get<std::string>();
    }
    m.pieces.push_back(std::move(piece));
  }
  return m;
}

nlohmann::json to_json(const JsjManifest& m) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : m.pieces)
    pieces.push_back({{"kind", p.kind == PieceKind::Hyperbolic ? "hyperbolic" : "seifert"}, {"volume", p.volume}, {"label", p.label}});
  return {{"name", m.name}, {"boundaryTori", m.boundary_tori}, {"pieces", pieces}};
}

JsjManifest manifest_from_csv(const std::string& text, const std::string& default_name) {
  JsjManifest m;
  m.name = default_name;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t[0] == '#') {
      const auto colon = t.find(':');
      if (colon == std::string::npos) continue;
      const std::string key = trim(t.substr(1, colon - 1)), value = trim(t.substr(colon + 1));
      if (key == "name") {
        m.name = value;
      } else if (key == "boundaryTori") {
        std::size_t used = 0;
        long b = -1;
        try {
          b = std::stol(value, &used);
        } catch (const std::exception&) {
        }
        if (b < 0 || used != value.size()) schema_error(where, "boundaryTori must be a nonnegative integer");
        m.boundary_tori = b;
      }
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream row(t);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(trim(cell));
    if (!header) {
      if (cells != std::vector<std::string>{"kind", "volume", "label"}) schema_error(where, "expected header kind,volume,label");
      header = true;
      continue;
    }
    if (cells.size() < 2 || cells.size() > 3) schema_error(where, "expected 2 or 3 fields, got " + std::to_string(cells.size()));
    JsjPiece piece;
    piece.kind = parse_kind(cells[0], where + " kind");
    std::size_t used = 0;
    try {
      piece.volume = std::stod(cells[1], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != cells[1].size()) schema_error(where + " volume", "not a number: \"" + cells[1] + "\"");
    check_volume(piece.kind, piece.volume, where + " volume");
    if (cells.size() == 3) piece.label = cells[2];
    m.pieces.push_back(std::move(piece));
  }
  if (!header) schema_error("line " + std::to_string(lineno), "missing header kind,volume,label");
  return m;
}

JsjManifest load_manifest(const std::string& path) {
  const std::string text = read_file(path);
  try {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
      const auto slash = path.find_last_of('/');
      const std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
      return manifest_from_csv(text, stem.substr(0, stem.size() - 4));
    }
    return manifest_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": malformed JSON: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::vector<JsjManifest> load_census(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": malformed JSON: " + e.what());
  }
  if (!j.contains("manifolds") || !j["manifolds"].is_array()) throw std::invalid_argument(path + ": manifolds: required array");
  std::vector<JsjManifest> out;
  for (std::size_t i = 0; i < j["manifolds"].size(); ++i) {
    try {
      out.push_back(manifest_from_json(j["manifolds"][i]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(path + ": manifolds[" + std::to_string(i) + "]." + e.what());
    }
  }
  return out;
}

const std::vector<JsjManifest>& shipped_census() {
  static const std::vector<JsjManifest> census = load_census(std::string(L2TOR_DATA_DIR) + "/census.json");
  return census;
}

const JsjManifest& census_entry(const std::string& name) {
  for (const auto& m : shipped_census())
    if (m.name == name) return m;
  throw std::out_of_range("no census entry named \"" + name + "\"");
}

double hyperbolic_volume(const JsjManifest& m) {
  double v = 0.0;
  for (const auto& p : m.pieces)
    if (p.kind == PieceKind::Hyperbolic) v += p.volume;
  return v;
}

double torsion_3manifold(const JsjManifest& m) {
  const double v = hyperbolic_volume(m);
  return v == 0.0 ? 0.0 : -v / (3.0 * kPi);
}

bool is_graph_manifold(const JsjManifest& m) {
  for (const auto& p : m.pieces)
    if (p.kind == PieceKind::Hyperbolic) return false;
  return true;
}

JsjManifest disjoint_union(const JsjManifest& a, const JsjManifest& b) {
  JsjManifest u;
  u.name = a.name + " + " + b.name;
  u.boundary_tori = a.boundary_tori + b.boundary_tori;
  u.pieces = a.pieces;
  u.pieces.insert(u.pieces.end(), b.pieces.begin(), b.pieces.end());
  return u;
}

nlohmann::json report(const JsjManifest& m) {
  return {{"name", m.name},
          {"boundaryTori", m.boundary_tori},
          {"pieces", m.pieces.size()},
          {"hyperbolicVolume", hyperbolic_volume(m)},
          {"torsion", torsion_3manifold(m)},
          {"graphManifold", is_graph_manifold(m)},
          {"assumptions",
           {"compact, orientable, irreducible; boundary empty or incompressible tori",
            "L2-Betti numbers vanish and Novikov-Shubin invariants are positive (not checked from the manifest)"}}};
}

}  // namespace l2tor::jsj
