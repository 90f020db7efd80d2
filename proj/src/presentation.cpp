#include "coarse/presentation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"
#include "coarse/labelings.hpp"

namespace coarse {

Element Quotient::evaluate(const Word& w) const {
  Element x = group.identity();
  for (Letter l : w) {
    if (l.is_none() || l.symbol() >= image.size())
      throw InputError("quotient: symbol " + std::to_string(l.symbol()) + " has no image");
    const Element s = image[l.symbol()];
    x = group.mul(x, l.inverted() ? group.inv(s) : s);
  }
  return x;
}

std::vector<bool> normal_closure(const FiniteGroupTable& group, const std::vector<Element>& elements) {
  std::vector<bool> is_conj(group.order(), false);
  std::vector<Element> conj;
  for (Element x : elements)
    for (Element g = 0; g < group.order(); ++g) {
      const Element c = group.mul(group.mul(g, x), group.inv(g));
      if (!is_conj[c]) {
        is_conj[c] = true;
        conj.push_back(c);
      }
    }
  std::vector<bool> member(group.order(), false);
  std::vector<Element> queue{group.identity()};
  member[group.identity()] = true;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Element c : conj) {
      const Element y = group.mul(queue[h], c);
      if (!member[y]) {
        member[y] = true;
        queue.push_back(y);
      }
    }
  return member;
}

std::vector<Word> simple_cycle_labels(const LabeledGraph& g) {
  const std::size_t m = g.edge_count();
  if (m > 20) throw CapExceeded("simple cycle enumeration limited to 20 edges");
  std::vector<Word> out;
  std::vector<int> deg(g.vertex_count());
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    std::size_t size = 0;
    for (EdgeId e = 0; e < m; ++e)
      if (mask >> e & 1u) {
        ++deg[g.dart(2 * e).source];
        ++deg[g.dart(2 * e).target];
        ++size;
      }
    if (!std::all_of(deg.begin(), deg.end(), [](int d) { return d == 0 || d == 2; })) continue;
    // Walk from the lowest dart; a single closed walk must use every chosen edge.
    DartId first = 0;
    while (!(mask >> (first / 2) & 1u)) first += 2;
    Word label;
    std::uint32_t used = 0;
    DartId d = first;
    do {
      used |= 1u << LabeledGraph::edge_of(d);
      label.push_back(g.dart(d).label);
      const Vertex v = g.dart(d).target;
      DartId next = kUnreachable;
      for (DartId e : g.out_darts(v))
        if ((mask >> LabeledGraph::edge_of(e) & 1u) && LabeledGraph::edge_of(e) != LabeledGraph::edge_of(d)) {
          next = e;
          break;
        }
      if (next == kUnreachable) next = LabeledGraph::reverse(d);  // loop edge
      d = next;
    } while (d != first && label.size() <= size);
    if (used == mask && label.size() == size) out.push_back(std::move(label));
  }
  return out;
}

PresentationResult graphical_presentation(const GraphFamily& fam, const std::vector<Quotient>& quotients,
                                          const PresentationOptions& options) {
  PresentationResult res;
  if (fam.size() == 0) return res;
  res.presentation.alphabet = fam.components.front().alphabet();
  for (std::size_t c = 0; c < fam.size(); ++c) {
    const auto& g = fam.components[c];
    if (!(g.alphabet() == res.presentation.alphabet))
      throw InputError("graphical_presentation: components use different alphabets");
    if (!g.connected()) throw InputError("graphical_presentation: component " + std::to_string(c) + " is disconnected");
    if (!check_reduced(g).reduced)
      throw InputError("graphical_presentation: component " + std::to_string(c) + " is not reduced");
    const std::size_t rank = g.edge_count() + 1 - g.vertex_count();
    if (rank > options.rank_cap)
      throw CapExceeded("graphical_presentation: cycle rank " + std::to_string(rank) + " above the cap");
    // BFS tree with the label word from the root to each vertex.
    std::vector<Word> to_root(g.vertex_count());
    std::vector<bool> tree(g.edge_count(), false), seen(g.vertex_count(), false);
    std::vector<Vertex> queue{0};
    seen[0] = true;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (DartId d : g.out_darts(queue[h])) {
        const Vertex y = g.dart(d).target;
        if (seen[y]) continue;
        seen[y] = true;
        tree[LabeledGraph::edge_of(d)] = true;
        to_root[y] = to_root[queue[h]];
        to_root[y].push_back(g.dart(d).label);
        queue.push_back(y);
      }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (tree[e]) continue;
      const Dart& d = g.dart(LabeledGraph::dart_of(e));
      Word w = to_root[d.source];
      w.push_back(d.label);
      const Word back = inverse_word(to_root[d.target]);
      w.insert(w.end(), back.begin(), back.end());
      res.presentation.relators.push_back(freely_reduce(w));
      res.presentation.relator_component.push_back(c);
    }
  }
  if (!quotients.empty()) {
    std::vector<std::vector<bool>> closures;
    for (const auto& q : quotients) {
      std::vector<Element> images;
      for (const Word& r : res.presentation.relators) images.push_back(q.evaluate(r));
      closures.push_back(normal_closure(q.group, images));
    }
    for (std::size_t c = 0; c < fam.size(); ++c) {
      const auto& g = fam.components[c];
      if (g.edge_count() > options.simple_cycle_edge_limit) continue;
      SimpleCycleCheck chk;
      chk.component = c;
      for (const Word& w : simple_cycle_labels(g)) {
        ++chk.cycles;
        for (std::size_t i = 0; i < quotients.size(); ++i)
          if (!closures[i][quotients[i].evaluate(w)]) ++chk.quotient_failures;
      }
      res.pass = res.pass && chk.quotient_failures == 0;
      res.simple_cycle_checks.push_back(chk);
    }
  }
  return res;
}

namespace {

class CosetTable {
 public:
  CosetTable(std::size_t columns, std::size_t cap) : cols_(columns), cap_(cap) { add(); }

  static constexpr std::uint32_t kNone = 0xffffffffu;

  std::uint32_t& at(std::uint32_t c, std::uint32_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  std::size_t size() const { return parent_.size(); }
  bool live(std::uint32_t c) const { return parent_[c] == c; }

  std::uint32_t define(std::uint32_t c, std::uint32_t x) {
    const std::uint32_t b = add();
    at(c, x) = b;
    at(b, x ^ 1u) = c;
    return b;
  }

  void scan_and_fill(std::uint32_t a, const Word& w) {
    if (w.empty()) return;
    std::uint32_t f = a, b = a;
    std::size_t i = 0, j = w.size();  // remaining letters are w[i..j)
    for (;;) {
      while (i < j && at(f, w[i].code()) != kNone) f = at(f, w[i++].code());
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1].code() ^ 1u) != kNone) b = at(b, w[--j].code() ^ 1u);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i].code()) = b;
        at(b, w[i].code() ^ 1u) = f;
        return;
      }
      define(f, w[i].code());
    }
  }

  std::size_t live_count() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) n += parent_[c] == c;
    return n;
  }

 private:
  std::uint32_t add() {
    if (parent_.size() >= cap_) throw CapExceeded("coset enumeration exceeded " + std::to_string(cap_) + " cosets");
    const auto c = static_cast<std::uint32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, kNone);
    return c;
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::uint32_t n = parent_[c];
      parent_[c] = r;
      c = n;
    }
    return r;
  }

  void merge(std::uint32_t k, std::uint32_t l, std::vector<std::uint32_t>& queue) {
    const std::uint32_t a = rep(k), b = rep(l);
    if (a == b) return;
    parent_[std::max(a, b)] = std::min(a, b);
    queue.push_back(std::max(a, b));
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> queue;
    merge(a, b, queue);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::uint32_t g = queue[h];
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::uint32_t d = at(g, x);
        if (d == kNone) continue;
        at(d, x ^ 1u) = kNone;
        const std::uint32_t mu = rep(g), nu = rep(d);
        if (at(mu, x) != kNone) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x ^ 1u) != kNone) {
          merge(mu, at(nu, x ^ 1u), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x ^ 1u) = mu;
        }
      }
    }
  }

  std::size_t cols_;
  std::size_t cap_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> table_;
};

}  // namespace

std::size_t coset_enumeration(std::size_t symbols, const std::vector<Word>& relators, const std::vector<Word>& subgroup,
                              const CosetOptions& options) {
  for (const auto* list : {&relators, &subgroup})
    for (const Word& w : *list)
      for (Letter l : w)
        if (l.is_none() || l.symbol() >= symbols) throw InputError("coset enumeration: letter outside the alphabet");
  CosetTable t(2 * symbols, options.max_cosets);
  for (const Word& w : subgroup) t.scan_and_fill(0, w);
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    if (!t.live(a)) continue;
    for (const Word& w : relators) {
      t.scan_and_fill(a, w);
      if (!t.live(a)) break;
    }
    if (!t.live(a)) continue;
    for (std::uint32_t x = 0; x < 2 * symbols; ++x)
      if (t.at(a, x) == CosetTable::kNone) t.define(a, x);
  }
  return t.live_count();
}

bool check_label_preserving_cover(const CoveringMap& cm) {
  if (!(cm.base.alphabet() == cm.cover.alphabet()))
    throw InputError("check_label_preserving_cover: alphabets differ");
  if (!is_local_isomorphism(cm)) return false;
  for (DartId d = 0; d < cm.cover.dart_count(); ++d)
    if (cm.cover.dart(d).label != cm.base.dart(cm.dart_map[d]).label) return false;
  return true;
}

SurjectionReport verify_cover_surjection(const CoveringMap& cm, const std::vector<Quotient>& quotients) {
  const auto base = graphical_presentation(GraphFamily::from_graph(cm.base)).presentation;
  const auto cover = graphical_presentation(GraphFamily::from_graph(cm.cover)).presentation;
  SurjectionReport rep;
  for (const Quotient& q : quotients) {
    if (q.image.size() < cm.base.alphabet().size())
      throw InputError("verify_cover_surjection: quotient does not interpret every symbol");
    SurjectionQuotientReport r;
    for (const Word& w : base.relators)
      if (q.evaluate(w) != q.group.identity()) {
        r.base_relators_trivial = false;
        r.failing_relator = w;
        break;
      }
    for (const Word& w : cover.relators)
      if (q.evaluate(w) != q.group.identity()) {
        r.cover_relators_trivial = false;
        if (!r.failing_relator) r.failing_relator = w;
        break;
      }
    rep.pass = rep.pass && r.base_relators_trivial && r.cover_relators_trivial;
    rep.quotients.push_back(std::move(r));
  }
  return rep;
}

}  // namespace coarse
