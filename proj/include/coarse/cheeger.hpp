#pragma once

#include <vector>

#include "coarse/labeled_graph.hpp"

namespace coarse {

struct CheegerOptions {
  std::size_t vertex_cap = 20;
};

/// h(Γ) as the exact fraction boundary/size together with its witness set.
struct CheegerResult {
  std::size_t boundary = 0;
  std::size_t size = 0;
  std::vector<Vertex> witness;  // sorted

  double value() const { return static_cast<double>(boundary) / static_cast<double>(size); }
};

/// Number of edges with exactly one endpoint in `subset` (parallel edges counted).
std::size_t edge_boundary(const LabeledGraph& g, const std::vector<Vertex>& subset);

/// Exact minimum of |∂A|/|A| over 1 ≤ |A| ≤ ⌊|V|/2⌋ by exhaustive enumeration.
/// Ties go to the lexicographically smallest vertex list. Throws CapExceeded
/// above options.vertex_cap and InputError on disconnected or tiny input.
CheegerResult cheeger_exact(const LabeledGraph& g, const CheegerOptions& options = {});

}  // namespace coarse
