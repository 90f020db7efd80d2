#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coarse/alphabet.hpp"

namespace coarse {

using Vertex = std::uint32_t;
using DartId = std::uint32_t;
using EdgeId = std::uint32_t;

/// One undirected edge given by its oriented representative: the dart u→v
/// carries `label`, the reverse dart v→u carries its formal inverse.
struct EdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  Letter label;

  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct Dart {
  Vertex source = 0;
  Vertex target = 0;
  Letter label;
};

/// Undirected multigraph with labeled darts. Edge e owns darts 2e (u→v) and
/// 2e+1 (v→u); the dart involution is d ↦ d^1. Loops and parallel edges are
/// allowed. Unlabeled edges carry Letter::none() on both darts.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Throws InputError on an out-of-range endpoint or a label outside the alphabet.
  LabeledGraph(Alphabet alphabet, std::size_t vertex_count, const std::vector<EdgeSpec>& edges);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return darts_.size() / 2; }
  std::size_t dart_count() const { return darts_.size(); }

  const Dart& dart(DartId d) const { return darts_[d]; }
  const std::vector<Dart>& darts() const { return darts_; }
  static constexpr DartId reverse(DartId d) { return d ^ 1u; }
  static constexpr EdgeId edge_of(DartId d) { return d >> 1; }
  static constexpr DartId dart_of(EdgeId e) { return 2 * e; }

  /// Darts leaving v, in increasing dart order.
  std::span<const DartId> out_darts(Vertex v) const {
    return {out_.data() + offsets_[v], out_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::vector<std::uint32_t>& component_ids() const { return component_; }
  std::size_t component_count() const { return component_count_; }
  bool connected() const { return component_count_ <= 1; }
  bool fully_labeled() const;

  std::vector<EdgeSpec> edge_specs() const;
  LabeledGraph without_edge(EdgeId e) const;
  /// Same vertices and edges with new labels, one per edge (label of dart 2e).
  LabeledGraph relabeled(Alphabet alphabet, const std::vector<Letter>& edge_labels) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b);

 private:
  Alphabet alphabet_;
  std::size_t vertex_count_ = 0;
  std::vector<Dart> darts_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<DartId> out_;
  std::vector<std::uint32_t> component_;
  std::size_t component_count_ = 0;
};

/// Convenience wrapper used by the command line and the tests.
LabeledGraph build_graph(const Alphabet& alphabet, std::size_t vertex_count,
                         const std::vector<EdgeSpec>& edges);

struct ComponentMetadata {
  std::optional<std::size_t> girth;  // nullopt = ∞
  std::size_t diameter = 0;
  std::size_t size = 0;

  friend bool operator==(const ComponentMetadata&, const ComponentMetadata&) = default;
};

/// A graph viewed as the sequence of its connected components.
struct GraphFamily {
  std::vector<LabeledGraph> components;
  std::vector<ComponentMetadata> metadata;  // empty or one entry per component

  /// Components ordered by their smallest vertex; vertex order is preserved.
  static GraphFamily from_graph(const LabeledGraph& g);
  LabeledGraph disjoint_union() const;
  std::size_t size() const { return components.size(); }
  /// Fills metadata from scratch.
  void compute_metadata();
  /// True when metadata is absent or agrees with recomputation.
  bool metadata_consistent() const;
};

// Small named graphs used throughout the tests and examples.
namespace graphs {
LabeledGraph cycle(std::size_t n, const Alphabet& alphabet = Alphabet::letters(1));
/// Cycle whose i-th edge (i → i+1) is labeled by word[i].
LabeledGraph labeled_cycle(const Alphabet& alphabet, const Word& word);
LabeledGraph path(std::size_t n);
LabeledGraph complete(std::size_t n);
/// Two vertices joined by `k` parallel edges (theta graph for k = 3).
LabeledGraph theta(std::size_t k = 3);
}  // namespace graphs

}  // namespace coarse
