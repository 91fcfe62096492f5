#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace l2tor::jsj {

enum class PieceKind { Seifert, Hyperbolic };

struct JsjPiece {
  PieceKind kind = PieceKind::Seifert;
  double volume = 0.0;  // ignored for Seifert pieces
  std::string label;
};

struct JsjManifest {
  std::string name;
  long boundary_tori = 0;
  std::vector<JsjPiece> pieces;
};

/// Schema errors name the offending field, e.g. "pieces[1].volume".
JsjManifest manifest_from_json(const nlohmann::json& j);
nlohmann::json to_json(const JsjManifest& m);

/// CSV with header "kind,volume,label"; optional "# name: ..." and "# boundaryTori: ..." lines
/// before the header. Errors carry the line number.
JsjManifest manifest_from_csv(const std::string& text, const std::string& default_name = "manifest");

/// Chooses the parser by extension (.csv, otherwise JSON).
JsjManifest load_manifest(const std::string& path);

/// Census file: {"manifolds": [manifest, ...]}.
std::vector<JsjManifest> load_census(const std::string& path);
/// data/census.json from the source tree.
const std::vector<JsjManifest>& shipped_census();
const JsjManifest& census_entry(const std::string& name);

double hyperbolic_volume(const JsjManifest& m);
/// -(1/(3 pi)) times the total volume of the hyperbolic pieces.
double torsion_3manifold(const JsjManifest& m);
bool is_graph_manifold(const JsjManifest& m);
JsjManifest disjoint_union(const JsjManifest& a, const JsjManifest& b);

/// Torsion, graph-manifold flag and the standing assumptions.
nlohmann::json report(const JsjManifest& m);

}  // namespace l2tor::jsj
