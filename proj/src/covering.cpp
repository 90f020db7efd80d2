#include "coarse/covering.hpp"

#include <algorithm>
#include <string>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"

namespace coarse {

std::vector<Vertex> CoveringMap::fiber(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < vertex_map.size(); ++x)
    if (vertex_map[x] == v) out.push_back(x);
  return out;
}

CoveringMap homology_cover(const LabeledGraph& g, const CoverOptions& options) {
  if (!g.connected()) throw InputError("homology_cover: graph is disconnected");
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const std::size_t r = n == 0 ? 0 : m + 1 - n;
  if (r >= 63 || (n << r) > options.vertex_cap || ((n << r) >> r) != n)
    throw CapExceeded("homology_cover: cover would have " + std::to_string(n) + "*2^" + std::to_string(r) +
                      " vertices, above the cap " + std::to_string(options.vertex_cap));

  // BFS spanning tree from vertex 0.
  std::vector<bool> tree_edge(m, false), seen(n, false);
  std::vector<Vertex> queue;
  if (n > 0) {
    queue.push_back(0);
    seen[0] = true;
  }
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (DartId d : g.out_darts(queue[h])) {
      const Vertex y = g.dart(d).target;
      if (!seen[y]) {
        seen[y] = true;
        tree_edge[LabeledGraph::edge_of(d)] = true;
        queue.push_back(y);
      }
    }
  CoveringMap cm;
  cm.deck_rank = r;
  std::vector<std::uint64_t> flip(m, 0);
  for (EdgeId e = 0; e < m; ++e)
    if (!tree_edge[e]) {
      flip[e] = std::uint64_t{1} << cm.flip_edges.size();
      cm.flip_edges.push_back(e);
    }

  const std::size_t sheets = std::size_t{1} << r;
  std::vector<EdgeSpec> edges;
  edges.reserve(m * sheets);
  cm.dart_map.reserve(2 * m * sheets);
  const auto specs = g.edge_specs();
  for (std::uint64_t b = 0; b < sheets; ++b)
    for (EdgeId e = 0; e < m; ++e) {
      const EdgeSpec& s = specs[e];
      edges.push_back({static_cast<Vertex>(b * n + s.u), static_cast<Vertex>((b ^ flip[e]) * n + s.v), s.label});
      cm.dart_map.push_back(LabeledGraph::dart_of(e));
      cm.dart_map.push_back(LabeledGraph::dart_of(e) + 1);
    }
  cm.cover = LabeledGraph(g.alphabet(), n * sheets, edges);
  cm.vertex_map.resize(n * sheets);
  for (std::size_t x = 0; x < n * sheets; ++x) cm.vertex_map[x] = static_cast<Vertex>(x % n);
  cm.base = g;
  return cm;
}

CoveringMap compose(const CoveringMap& upper, const CoveringMap& lower) {
  if (upper.base.vertex_count() != lower.cover.vertex_count() ||
      upper.base.edge_count() != lower.cover.edge_count())
    throw InputError("compose: upper base does not match lower cover");
  CoveringMap out;
  out.base = lower.base;
  out.cover = upper.cover;
  out.deck_rank = upper.deck_rank + lower.deck_rank;
  out.vertex_map.resize(upper.vertex_map.size());
  for (std::size_t x = 0; x < upper.vertex_map.size(); ++x) out.vertex_map[x] = lower.vertex_map[upper.vertex_map[x]];
  out.dart_map.resize(upper.dart_map.size());
  for (std::size_t d = 0; d < upper.dart_map.size(); ++d) out.dart_map[d] = lower.dart_map[upper.dart_map[d]];
  return out;
}

IteratedCover iterate_homology_cover(const LabeledGraph& g, std::size_t k, const CoverOptions& options) {
  if (k == 0) throw InputError("iterate_homology_cover: k must be at least 1");
  IteratedCover out;
  out.stages.push_back(homology_cover(g, options));
  out.composite = out.stages.back();
  for (std::size_t i = 1; i < k; ++i) {
    out.stages.push_back(homology_cover(out.stages.back().cover, options));
    out.composite = compose(out.stages.back(), out.composite);
  }
  return out;
}

bool is_local_isomorphism(const CoveringMap& cm) {
  const auto& c = cm.cover;
  const auto& b = cm.base;
  if (cm.vertex_map.size() != c.vertex_count() || cm.dart_map.size() != c.dart_count()) return false;
  for (DartId d = 0; d < c.dart_count(); ++d) {
    const DartId bd = cm.dart_map[d];
    if (bd >= b.dart_count()) return false;
    if (cm.dart_map[LabeledGraph::reverse(d)] != LabeledGraph::reverse(bd)) return false;
    if (cm.vertex_map[c.dart(d).source] != b.dart(bd).source) return false;
    if (cm.vertex_map[c.dart(d).target] != b.dart(bd).target) return false;
  }
  std::vector<DartId> images;
  for (Vertex x = 0; x < c.vertex_count(); ++x) {
    const Vertex v = cm.vertex_map[x];
    if (v >= b.vertex_count() || c.degree(x) != b.degree(v)) return false;
    images.clear();
    for (DartId d : c.out_darts(x)) images.push_back(cm.dart_map[d]);
    std::sort(images.begin(), images.end());
    const auto star = b.out_darts(v);
    if (!std::equal(images.begin(), images.end(), star.begin(), star.end())) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> deck_transformation(const CoveringMap& cm, Vertex from, Vertex to) {
  const auto& c = cm.cover;
  if (cm.vertex_map[from] != cm.vertex_map[to]) return std::nullopt;
  if (!c.connected()) throw InputError("deck_transformation: cover is disconnected");
  std::vector<Vertex> phi(c.vertex_count(), kUnreachable);
  phi[from] = to;
  std::vector<Vertex> queue{from};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex x = queue[h];
    for (DartId d : c.out_darts(x)) {
      DartId match = kUnreachable;
      for (DartId e : c.out_darts(phi[x]))
        if (cm.dart_map[e] == cm.dart_map[d]) {
          match = e;
          break;
        }
      if (match == kUnreachable) return std::nullopt;
      const Vertex t = c.dart(d).target, ft = c.dart(match).target;
      if (phi[t] == kUnreachable) {
        phi[t] = ft;
        queue.push_back(t);
      } else if (phi[t] != ft) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(c.vertex_count(), false);
  for (Vertex v : phi) {
    if (v == kUnreachable || hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return phi;
}

bool is_regular_cover(const CoveringMap& cm) {
  if (cm.base.vertex_count() == 0) return true;
  const auto fib = cm.fiber(0);
  for (Vertex w : fib)
    if (!deck_transformation(cm, fib.front(), w)) return false;
  return true;
}

std::vector<Vertex> homology_translation(const CoveringMap& cm, std::uint64_t t) {
  if (cm.flip_edges.size() != cm.deck_rank) throw InputError("homology_translation: not a homology cover");
  const std::size_t n = cm.base.vertex_count();
  std::vector<Vertex> out(cm.cover.vertex_count());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = static_cast<Vertex>(((x / n) ^ t) * n + x % n);
  return out;
}

}  // namespace coarse
