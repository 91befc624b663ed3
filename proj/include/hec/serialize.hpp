#pragma once

#include <string>

#include <json.hpp>

#include "hec/constructions.hpp"
#include "hec/decompositions.hpp"
#include "hec/homogeneity.hpp"
#include "hec/multigraph.hpp"
#include "hec/solver.hpp"

namespace hec {

// Graph JSON: { "n": int, "edges": [{"id","u","v","copy"}...], "family"?:
// {"kind": str, "params": [int...]} } with the edge list sorted by id.
nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

// Coloring JSON: { "m": int, "colors": [int; |E|] } indexed by edge id.
nlohmann::json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

// Coloring JSON plus {"theorem", "variant"} metadata.
nlohmann::json construction_to_json(const ConstructionResult& r);

nlohmann::json report_to_json(const HomogeneityReport& report);

nlohmann::json decomposition_to_json(const HamiltonianDecomposition& d);
HamiltonianDecomposition decomposition_from_json(const nlohmann::json& j);

// { "chi_tilde": int, "witness": coloring, "refuted": [int], "nodes": int }
nlohmann::json chi_result_to_json(const ChiTildeResult& r);

// Undirected DOT output; when a coloring is supplied each edge carries a
// color attribute from a fixed 12-entry palette indexed by color.
std::string to_dot(const Multigraph& g, const EdgeColoring* coloring = nullptr);

}  // namespace hec
