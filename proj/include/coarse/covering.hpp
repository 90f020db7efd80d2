#pragma once

#include <optional>
#include <vector>

#include "coarse/labeled_graph.hpp"

namespace coarse {

/// A graph covering p: cover → base given on vertices and darts.
struct CoveringMap {
  LabeledGraph base;
  LabeledGraph cover;
  std::vector<Vertex> vertex_map;
  std::vector<DartId> dart_map;
  /// Number of sheets is 2^deck_rank.
  std::size_t deck_rank = 0;
  /// Homology covers only: base edge flipping coordinate i of (ℤ/2)^r.
  /// Empty for composites.
  std::vector<EdgeId> flip_edges;

  std::size_t sheets() const { return std::size_t{1} << deck_rank; }
  /// Cover vertices over base vertex v, ascending.
  std::vector<Vertex> fiber(Vertex v) const;
};

struct CoverOptions {
  std::size_t vertex_cap = std::size_t{1} << 20;
};

/// ℤ/2-homology cover. A BFS spanning tree from vertex 0 fixes the
/// r = |E|−|V|+1 non-tree edges; cover vertex (v, b ∈ (ℤ/2)^r) has index
/// b·|V| + v, tree edges keep b and non-tree edge i flips bit i. Labels are
/// inherited. Throws InputError when g is disconnected, CapExceeded past the cap.
CoveringMap homology_cover(const LabeledGraph& g, const CoverOptions& options = {});

/// `upper` covers the cover of `lower`; the result covers lower.base.
CoveringMap compose(const CoveringMap& upper, const CoveringMap& lower);

struct IteratedCover {
  CoveringMap composite;
  std::vector<CoveringMap> stages;  // stages[i] covers stages[i-1].cover
};

/// k-fold iterated homology cover; the projected size is checked against the
/// cap before each stage is built.
IteratedCover iterate_homology_cover(const LabeledGraph& g, std::size_t k, const CoverOptions& options = {});

/// Endpoint/involution consistency plus a bijection between the darts leaving
/// each cover vertex and those leaving its image.
bool is_local_isomorphism(const CoveringMap& cm);

/// The covering automorphism (commuting with the projection) sending `from`
/// to `to`, if one exists. Requires a connected cover.
std::optional<std::vector<Vertex>> deck_transformation(const CoveringMap& cm, Vertex from, Vertex to);

/// Deck group transitive on the fiber over base vertex 0, i.e. the cover is regular.
bool is_regular_cover(const CoveringMap& cm);

/// Homology covers only: the translation (v, b) ↦ (v, b ⊕ t).
std::vector<Vertex> homology_translation(const CoveringMap& cm, std::uint64_t t);

}  // namespace coarse
