#include "coarse/graph_metrics.hpp"

#include <algorithm>
#include <string>

#include "coarse/errors.hpp"

namespace coarse {

std::vector<std::uint32_t> bfs_distances(const LabeledGraph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (DartId d : g.out_darts(x)) {
      const Vertex y = g.dart(d).target;
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<std::uint32_t> distance_matrix(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> out(n * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    std::copy(row.begin(), row.end(), out.begin() + static_cast<long>(s * n));
  }
  return out;
}

std::optional<std::size_t> girth(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> dist(n, kUnreachable);
  std::vector<EdgeId> parent_edge(n, kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n && best > 1; ++root) {
    queue.assign(1, root);
    dist[root] = 0;
    parent_edge[root] = kUnreachable;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      // Every cycle closed from here on is at least this long.
      if (2 * static_cast<std::size_t>(dist[x]) >= best) break;
      for (DartId d : g.out_darts(x)) {
        const EdgeId e = LabeledGraph::edge_of(d);
        if (e == parent_edge[x]) continue;
        const Vertex y = g.dart(d).target;
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          parent_edge[y] = e;
          queue.push_back(y);
        } else {
          best = std::min<std::size_t>(best, std::size_t{dist[x]} + dist[y] + 1);
        }
      }
    }
    for (Vertex v : queue) dist[v] = kUnreachable;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::size_t diameter(const LabeledGraph& g) {
  if (!g.connected()) throw InputError("diameter: graph is disconnected");
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    const auto dist = bfs_distances(g, s);
    best = std::max<std::size_t>(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

DgRatioReport dg_ratio(const GraphFamily& fam) {
  DgRatioReport r;
  for (std::size_t i = 0; i < fam.components.size(); ++i) {
    const auto& c = fam.components[i];
    if (!c.connected()) throw InputError("dg_ratio: component " + std::to_string(i) + " is disconnected");
    const auto gi = girth(c);
    if (!gi) throw InputError("dg_ratio: component " + std::to_string(i) + " is acyclic");
    const double ratio = static_cast<double>(diameter(c)) / static_cast<double>(*gi);
    r.ratios.push_back(ratio);
    r.max_ratio = std::max(r.max_ratio, ratio);
  }
  return r;
}

std::optional<std::vector<int>> bipartition(const LabeledGraph& g) {
  std::vector<int> colour(g.vertex_count(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (DartId d : g.out_darts(x)) {
        const Vertex y = g.dart(d).target;
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

std::vector<EdgeId> bridges(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> disc(n, kUnreachable), low(n, 0);
  std::vector<EdgeId> parent_edge(n, kUnreachable);
  std::vector<std::size_t> next(n, 0);
  std::vector<EdgeId> out;
  std::uint32_t timer = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s] != kUnreachable) continue;
    disc[s] = low[s] = timer++;
    stack.assign(1, s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      const auto darts = g.out_darts(x);
      if (next[x] < darts.size()) {
        const DartId d = darts[next[x]++];
        const EdgeId e = LabeledGraph::edge_of(d);
        if (e == parent_edge[x]) continue;
        const Vertex y = g.dart(d).target;
        if (disc[y] == kUnreachable) {
          disc[y] = low[y] = timer++;
          parent_edge[y] = e;
          stack.push_back(y);
        } else {
          low[x] = std::min(low[x], disc[y]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          const Vertex p = stack.back();
          low[p] = std::min(low[p], low[x]);
          if (low[x] > disc[p]) out.push_back(parent_edge[x]);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_connected(const LabeledGraph& g) {
  if (!g.connected()) throw InputError("is_two_connected: graph is disconnected");
  return bridges(g).empty();
}

DegreeBounds degree_bounds(const LabeledGraph& g) {
  if (g.vertex_count() == 0) return {};
  DegreeBounds b{g.degree(0), g.degree(0)};
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    b.min = std::min(b.min, g.degree(v));
    b.max = std::max(b.max, g.degree(v));
  }
  return b;
}

std::size_t components_without(const LabeledGraph& g, const std::vector<bool>& removed_edge,
                               std::vector<std::uint32_t>& component) {
  component.assign(g.vertex_count(), kUnreachable);
  std::uint32_t count = 0;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (component[s] != kUnreachable) continue;
    component[s] = count;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (DartId d : g.out_darts(queue[head])) {
        if (removed_edge[LabeledGraph::edge_of(d)]) continue;
        const Vertex y = g.dart(d).target;
        if (component[y] == kUnreachable) {
          component[y] = count;
          queue.push_back(y);
        }
      }
    ++count;
  }
  return count;
}

}  // namespace coarse
