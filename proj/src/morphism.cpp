#include "coarse/morphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"

namespace coarse {

bool has_distinct_out_labels(const LabeledGraph& g) {
  std::vector<Letter> labels;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    labels.clear();
    for (DartId d : g.out_darts(v)) {
      if (g.dart(d).label.is_none()) return false;
      labels.push_back(g.dart(d).label);
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;
  }
  return true;
}

namespace {

std::optional<DartId> out_dart_with_label(const LabeledGraph& g, Vertex v, Letter l) {
  for (DartId d : g.out_darts(v))
    if (g.dart(d).label == l) return d;
  return std::nullopt;
}

}  // namespace

std::optional<ComponentMap> anchored_isomorphism(const LabeledGraph& a, Vertex x, const LabeledGraph& b,
                                                 Vertex y) {
  ComponentMap m;
  m.vertex.assign(a.vertex_count(), kUnreachable);
  m.dart.assign(a.dart_count(), kUnreachable);
  std::vector<bool> hit(b.vertex_count(), false);
  std::vector<Vertex> queue{x};
  m.vertex[x] = y;
  hit[y] = true;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const Vertex u = queue[h];
    const Vertex fu = m.vertex[u];
    if (a.degree(u) != b.degree(fu)) return std::nullopt;
    for (DartId d : a.out_darts(u)) {
      const auto image = out_dart_with_label(b, fu, a.dart(d).label);
      if (!image) return std::nullopt;
      m.dart[d] = *image;
      const Vertex t = a.dart(d).target;
      const Vertex ft = b.dart(*image).target;
      if (m.vertex[t] == kUnreachable) {
        if (hit[ft]) return std::nullopt;
        m.vertex[t] = ft;
        hit[ft] = true;
        queue.push_back(t);
      } else if (m.vertex[t] != ft) {
        return std::nullopt;
      }
    }
  }
  // Surjective onto the component of y.
  const auto& comp_b = b.component_ids();
  std::size_t target_size = 0;
  for (Vertex v = 0; v < b.vertex_count(); ++v) target_size += comp_b[v] == comp_b[y];
  if (target_size != queue.size()) return std::nullopt;
  std::vector<bool> dart_hit(b.dart_count(), false);
  for (DartId d = 0; d < a.dart_count(); ++d) {
    if (m.dart[d] == kUnreachable) continue;
    if (dart_hit[m.dart[d]]) return std::nullopt;
    dart_hit[m.dart[d]] = true;
    if (m.dart[LabeledGraph::reverse(d)] != LabeledGraph::reverse(m.dart[d])) return std::nullopt;
  }
  return m;
}

bool is_automorphism(const LabeledGraph& g, const std::vector<Vertex>& vertex_map, bool labels) {
  const std::size_t n = g.vertex_count();
  if (vertex_map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : vertex_map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  using Key = std::tuple<Vertex, Vertex, std::uint32_t>;
  std::map<Key, long> count;
  for (const Dart& d : g.darts()) ++count[{d.source, d.target, labels ? d.label.code() : 0u}];
  for (const Dart& d : g.darts())
    if (--count[{vertex_map[d.source], vertex_map[d.target], labels ? d.label.code() : 0u}] < 0) return false;
  return true;
}

bool is_label_transitive(const LabeledGraph& g) {
  if (!g.connected()) throw InputError("is_label_transitive: graph is disconnected");
  if (!has_distinct_out_labels(g)) throw InputError("is_label_transitive: outgoing labels are not distinct");
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto m = anchored_isomorphism(g, 0, g, v);
    if (!m || !is_automorphism(g, m->vertex, true)) return false;
  }
  return true;
}

}  // namespace coarse
