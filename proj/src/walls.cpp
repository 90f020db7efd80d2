#include "coarse/walls.hpp"

#include <string>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"

namespace coarse {

std::vector<std::uint8_t> wall_sides(const LabeledGraph& g, const std::vector<EdgeId>& wall) {
  std::vector<bool> removed(g.edge_count(), false);
  for (EdgeId e : wall) {
    if (e >= g.edge_count()) throw InputError("wall edge " + std::to_string(e) + " out of range");
    removed[e] = true;
  }
  std::vector<std::uint32_t> comp;
  const std::size_t count = components_without(g, removed, comp);
  if (count != 2)
    throw VerificationFailure("wall leaves " + std::to_string(count) + " components instead of 2");
  std::vector<std::uint8_t> sides(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) sides[x] = comp[x] == comp[0] ? 0 : 1;
  return sides;
}

WallCheck validate_walls(const LabeledGraph& g, const WallDecomposition& w) {
  if (!g.connected()) return {false, "graph is disconnected"};
  if (w.sides.size() != w.walls.size()) return {false, "side table size mismatch"};
  std::vector<int> owner(g.edge_count(), -1);
  for (std::size_t i = 0; i < w.walls.size(); ++i)
    for (EdgeId e : w.walls[i]) {
      if (e >= g.edge_count()) return {false, "wall " + std::to_string(i) + " names edge out of range"};
      if (owner[e] != -1) return {false, "edge " + std::to_string(e) + " lies in two walls"};
      owner[e] = static_cast<int>(i);
    }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (owner[e] == -1) return {false, "edge " + std::to_string(e) + " lies in no wall"};
  for (std::size_t i = 0; i < w.walls.size(); ++i) {
    std::vector<std::uint8_t> expect;
    try {
      expect = wall_sides(g, w.walls[i]);
    } catch (const VerificationFailure& ex) {
      return {false, "wall " + std::to_string(i) + ": " + ex.what()};
    }
    if (w.sides[i] != expect) return {false, "wall " + std::to_string(i) + ": side assignment disagrees"};
    for (EdgeId e : w.walls[i]) {
      const Dart& d = g.dart(LabeledGraph::dart_of(e));
      if (expect[d.source] == expect[d.target])
        return {false, "wall " + std::to_string(i) + ": edge " + std::to_string(e) + " does not cross"};
    }
  }
  return {};
}

WallDecomposition walls_from_cover(const CoveringMap& cm) {
  const std::size_t base_edges = cm.base.edge_count();
  WallDecomposition w;
  w.walls.resize(base_edges);
  for (EdgeId e = 0; e < cm.cover.edge_count(); ++e)
    w.walls[LabeledGraph::edge_of(cm.dart_map[LabeledGraph::dart_of(e)])].push_back(e);
  w.sides.reserve(base_edges);
  for (std::size_t i = 0; i < base_edges; ++i) {
    try {
      w.sides.push_back(wall_sides(cm.cover, w.walls[i]));
    } catch (const VerificationFailure& ex) {
      throw VerificationFailure("fiber of base edge " + std::to_string(i) + ": " + ex.what());
    }
  }
  return w;
}

std::vector<std::uint32_t> wall_pseudometric(const LabeledGraph& g, const WallDecomposition& w) {
  const auto check = validate_walls(g, w);
  if (!check.ok) throw InputError("invalid wall decomposition: " + check.reason);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> d(n * n, 0);
  for (const auto& side : w.sides)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) d[x * n + y] += side[x] != side[y];
  return d;
}

std::vector<std::vector<double>> wall_hilbert_embedding(const LabeledGraph& g, const WallDecomposition& w,
                                                        Vertex basepoint) {
  if (basepoint >= g.vertex_count()) throw InputError("basepoint out of range");
  const auto check = validate_walls(g, w);
  if (!check.ok) throw InputError("invalid wall decomposition: " + check.reason);
  std::vector<std::vector<double>> out(g.vertex_count(), std::vector<double>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (Vertex x = 0; x < g.vertex_count(); ++x)
      out[x][i] = w.sides[i][x] == w.sides[i][basepoint] ? 0.5 : -0.5;
  return out;
}

}  // namespace coarse
