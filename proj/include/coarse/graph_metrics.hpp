#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "coarse/labeled_graph.hpp"

namespace coarse {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Breadth-first distances from `source`; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const LabeledGraph& g, Vertex source);

/// All-pairs edge-length distances, row-major |V|×|V|.
std::vector<std::uint32_t> distance_matrix(const LabeledGraph& g);

/// Length of the shortest non-trivial cycle; nullopt for forests.
/// A loop is a 1-cycle and a pair of parallel edges a 2-cycle.
std::optional<std::size_t> girth(const LabeledGraph& g);

/// Largest pairwise distance. Throws InputError on disconnected input.
std::size_t diameter(const LabeledGraph& g);

struct DgRatioReport {
  std::vector<double> ratios;  // diam/girth per component
  double max_ratio = 0.0;      // the certified D
};

/// Throws InputError when a component is disconnected or acyclic.
DgRatioReport dg_ratio(const GraphFamily& fam);

/// 2-colouring when bipartite (loops and odd cycles rule it out).
std::optional<std::vector<int>> bipartition(const LabeledGraph& g);

/// Edges whose removal disconnects their component.
std::vector<EdgeId> bridges(const LabeledGraph& g);

/// True iff g is bridgeless. Throws InputError on disconnected input.
bool is_two_connected(const LabeledGraph& g);

struct DegreeBounds {
  std::size_t min = 0;
  std::size_t max = 0;
};
DegreeBounds degree_bounds(const LabeledGraph& g);

/// Component labels after deleting the given edges. Returns the number of components.
std::size_t components_without(const LabeledGraph& g, const std::vector<bool>& removed_edge,
                               std::vector<std::uint32_t>& component);

}  // namespace coarse
