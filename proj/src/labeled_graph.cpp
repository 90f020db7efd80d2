#include "coarse/labeled_graph.hpp"

#include <algorithm>
#include <string>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"

namespace coarse {

LabeledGraph::LabeledGraph(Alphabet alphabet, std::size_t vertex_count,
                           const std::vector<EdgeSpec>& edges)
    : alphabet_(std::move(alphabet)), vertex_count_(vertex_count) {
  darts_.reserve(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& e = edges[i];
    if (e.u >= vertex_count || e.v >= vertex_count)
      throw InputError("edge " + std::to_string(i) + ": endpoint out of range (vertex count " +
                       std::to_string(vertex_count) + ")");
    if (!e.label.is_none() && !alphabet_.contains(e.label))
      throw InputError("edge " + std::to_string(i) + ": label not in alphabet");
    darts_.push_back({e.u, e.v, e.label});
    darts_.push_back({e.v, e.u, e.label.inverse()});
  }

  offsets_.assign(vertex_count + 1, 0);
  for (const Dart& d : darts_) ++offsets_[d.source + 1];
  for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] += offsets_[v];
  out_.resize(darts_.size());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (DartId d = 0; d < darts_.size(); ++d) out_[fill[darts_[d].source]++] = d;

  component_.assign(vertex_count, kUnreachable);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < vertex_count; ++s) {
    if (component_[s] != kUnreachable) continue;
    const auto id = static_cast<std::uint32_t>(component_count_++);
    component_[s] = id;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (DartId d : out_darts(queue[head])) {
        Vertex t = darts_[d].target;
        if (component_[t] == kUnreachable) {
          component_[t] = id;
          queue.push_back(t);
        }
      }
  }
}

bool LabeledGraph::fully_labeled() const {
  return std::none_of(darts_.begin(), darts_.end(), [](const Dart& d) { return d.label.is_none(); });
}

std::vector<EdgeSpec> LabeledGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Dart& d = darts_[dart_of(e)];
    out.push_back({d.source, d.target, d.label});
  }
  return out;
}

LabeledGraph LabeledGraph::without_edge(EdgeId e) const {
  auto specs = edge_specs();
  specs.erase(specs.begin() + e);
  return LabeledGraph(alphabet_, vertex_count_, specs);
}

LabeledGraph LabeledGraph::relabeled(Alphabet alphabet, const std::vector<Letter>& edge_labels) const {
  if (edge_labels.size() != edge_count()) throw InputError("relabel: one label per edge required");
  auto specs = edge_specs();
  for (std::size_t i = 0; i < specs.size(); ++i) specs[i].label = edge_labels[i];
  return LabeledGraph(std::move(alphabet), vertex_count_, specs);
}

bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
  return a.alphabet_ == b.alphabet_ && a.vertex_count_ == b.vertex_count_ &&
         a.edge_specs() == b.edge_specs();
}

LabeledGraph build_graph(const Alphabet& alphabet, std::size_t vertex_count,
                         const std::vector<EdgeSpec>& edges) {
  return LabeledGraph(alphabet, vertex_count, edges);
}

GraphFamily GraphFamily::from_graph(const LabeledGraph& g) {
  const auto& comp = g.component_ids();
  std::vector<Vertex> local(g.vertex_count());
  std::vector<std::size_t> sizes(g.component_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) local[v] = static_cast<Vertex>(sizes[comp[v]]++);
  std::vector<std::vector<EdgeSpec>> edges(g.component_count());
  for (const EdgeSpec& e : g.edge_specs())
    edges[comp[e.u]].push_back({local[e.u], local[e.v], e.label});
  GraphFamily fam;
  for (std::size_t c = 0; c < g.component_count(); ++c)
    fam.components.emplace_back(g.alphabet(), sizes[c], edges[c]);
  return fam;
}

LabeledGraph GraphFamily::disjoint_union() const {
  if (components.empty()) return {};
  std::vector<EdgeSpec> edges;
  Vertex offset = 0;
  for (const auto& c : components) {
    if (!(c.alphabet() == components.front().alphabet()))
      throw InputError("family: components use different alphabets");
    for (EdgeSpec e : c.edge_specs()) {
      e.u += offset;
      e.v += offset;
      edges.push_back(e);
    }
    offset += static_cast<Vertex>(c.vertex_count());
  }
  return LabeledGraph(components.front().alphabet(), offset, edges);
}

void GraphFamily::compute_metadata() {
  metadata.clear();
  for (const auto& c : components) metadata.push_back({girth(c), diameter(c), c.vertex_count()});
}

bool GraphFamily::metadata_consistent() const {
  if (metadata.empty()) return true;
  if (metadata.size() != components.size()) return false;
  for (std::size_t i = 0; i < components.size(); ++i) {
    ComponentMetadata m{girth(components[i]), diameter(components[i]), components[i].vertex_count()};
    if (!(m == metadata[i])) return false;
  }
  return true;
}

namespace graphs {

LabeledGraph cycle(std::size_t n, const Alphabet& alphabet) {
  Word w(n, alphabet.size() ? Letter(0, false) : Letter::none());
  return labeled_cycle(alphabet, w);
}

LabeledGraph labeled_cycle(const Alphabet& alphabet, const Word& word) {
  const std::size_t n = word.size();
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), word[i]});
  return LabeledGraph(alphabet, n, edges);
}

LabeledGraph path(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1), Letter::none()});
  return LabeledGraph(Alphabet{}, n, edges);
}

LabeledGraph complete(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j, Letter::none()});
  return LabeledGraph(Alphabet{}, n, edges);
}

LabeledGraph theta(std::size_t k) {
  std::vector<EdgeSpec> edges(k, EdgeSpec{0, 1, Letter::none()});
  return LabeledGraph(Alphabet{}, 2, edges);
}

}  // namespace graphs

}  // namespace coarse
