#pragma once

#include <cstdint>
#include <vector>

#include "coarse/covering.hpp"
#include "coarse/labeled_graph.hpp"

namespace coarse {

/// Partition of the edge set into walls. sides[w][x] ∈ {0,1}; side 0 is the
/// side containing vertex 0.
struct WallDecomposition {
  std::vector<std::vector<EdgeId>> walls;
  std::vector<std::vector<std::uint8_t>> sides;

  std::size_t size() const { return walls.size(); }
};

struct WallCheck {
  bool ok = true;
  std::string reason;
};

/// Every edge in exactly one wall; deleting each wall leaves exactly two
/// components, recorded by `sides`, and every wall edge crosses between them.
WallCheck validate_walls(const LabeledGraph& g, const WallDecomposition& w);

/// Builds the split of g for an arbitrary edge set, throwing
/// VerificationFailure when it does not leave exactly two components.
std::vector<std::uint8_t> wall_sides(const LabeledGraph& g, const std::vector<EdgeId>& wall);

/// One wall per base edge: its full fiber in the cover. Throws
/// VerificationFailure when a fiber fails the two-component test.
WallDecomposition walls_from_cover(const CoveringMap& cm);

/// d_wall(x,y) = number of walls separating x and y, row-major |V|×|V|.
/// Throws InputError on an invalid decomposition.
std::vector<std::uint32_t> wall_pseudometric(const LabeledGraph& g, const WallDecomposition& w);

/// F(x)_w = ±1/2, with sign + exactly when x lies on the basepoint's side of
/// wall w; then ‖F(x)−F(y)‖² = d_wall(x,y) in exact arithmetic.
std::vector<std::vector<double>> wall_hilbert_embedding(const LabeledGraph& g, const WallDecomposition& w,
                                                        Vertex basepoint);

}  // namespace coarse
