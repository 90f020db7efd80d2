#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "coarse/covering.hpp"
#include "coarse/group_table.hpp"
#include "coarse/labeled_graph.hpp"
#include "coarse/metric_diag.hpp"
#include "coarse/walls.hpp"

namespace coarse {

using Json = nlohmann::json;

/// A graph plus free-form annotations (component metadata, group tables,
/// covering maps, walls, vertex labels).
struct GraphDocument {
  LabeledGraph graph;
  Json annotations = Json::object();
};

struct ParseOptions {
  bool strict = true;  // reject unknown fields
};

Json graph_to_json(const LabeledGraph& g, const Json& annotations = Json::object());
/// Deterministic text: two-space indentation, sorted keys, trailing newline.
std::string dump(const Json& j);
std::string serialize_graph(const LabeledGraph& g, const Json& annotations = Json::object());

/// Throws InputError with a field path (e.g. "edges[3].v") on any problem.
GraphDocument graph_from_json(const Json& j, const ParseOptions& options = {});
GraphDocument parse_graph(const std::string& text, const ParseOptions& options = {});
/// Components in order; metadata from annotations.components when present,
/// rejected when it disagrees with recomputation.
GraphFamily parse_graph_family(const std::string& text, const ParseOptions& options = {});
Json family_metadata_json(const GraphFamily& fam);

Json group_to_json(const FiniteGroupTable& g);
FiniteGroupTable group_from_json(const Json& j, const std::string& where = "group");

/// Stored under annotations.covering of the cover document.
Json covering_to_json(const CoveringMap& cm);
/// Rebuilds the covering of a cover document. Throws InputError when the
/// annotation is missing or is not a local isomorphism.
CoveringMap covering_from_document(const GraphDocument& doc, const ParseOptions& options = {});

Json walls_to_json(const WallDecomposition& w);
WallDecomposition walls_from_json(const Json& j);

/// {"maps": [{"source": graph, "points": [[...]]} | {"source": graph, "target": graph, "vertex_map": [...]}]}
/// A graph document carrying a covering annotation is read as the covering projection.
MapFamily parse_map_family(const std::string& text, const ParseOptions& options = {});
Json points_to_json(const Eigen::MatrixXd& points);
Eigen::MatrixXd points_from_json(const Json& j, const std::string& where);

Json parse_json_text(const std::string& text);

}  // namespace coarse
