#pragma once

#include <optional>
#include <vector>

#include "coarse/labeled_graph.hpp"

namespace coarse {

/// Partial map between two graphs, defined on one connected component.
struct ComponentMap {
  std::vector<Vertex> vertex;  // kUnreachable outside the mapped component
  std::vector<DartId> dart;
};

/// True iff the outgoing darts at every vertex carry pairwise distinct labels
/// (and every dart is labeled).
bool has_distinct_out_labels(const LabeledGraph& g);

/// The label-preserving isomorphism from the component of `x` in `a` onto the
/// component of `y` in `b` sending x to y, if it exists. Both graphs must have
/// distinct outgoing labels, which makes the map unique; it is found by
/// propagation from the anchor.
std::optional<ComponentMap> anchored_isomorphism(const LabeledGraph& a, Vertex x, const LabeledGraph& b,
                                                 Vertex y);

/// Checks that `vertex_map` is a bijective graph automorphism of g mapping
/// edges onto edges (with multiplicity) and, when `labels` is set, preserving labels.
bool is_automorphism(const LabeledGraph& g, const std::vector<Vertex>& vertex_map, bool labels);

/// True iff for every vertex v a label-preserving automorphism maps 0 to v.
/// Requires a connected graph with distinct outgoing labels.
bool is_label_transitive(const LabeledGraph& g);

}  // namespace coarse
