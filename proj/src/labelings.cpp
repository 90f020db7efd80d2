#include "coarse/labelings.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"
#include "coarse/morphism.hpp"
#include "coarse/rng.hpp"

namespace coarse {

Rational::Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
  if (d == 0) throw InputError("rational with zero denominator");
  const std::uint64_t g = std::gcd(n, d);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  auto number = [&](const std::string& s) -> std::uint64_t {
    if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("malformed rational '" + text + "'");
    return std::stoull(s);
  };
  if (slash == std::string::npos) return Rational(number(text), 1);
  return Rational(number(text.substr(0, slash)), number(text.substr(slash + 1)));
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

bool Rational::strictly_below(std::size_t length, std::size_t girth) const {
  return static_cast<unsigned __int128>(length) * den < static_cast<unsigned __int128>(num) * girth;
}

ReducedCheck check_reduced(const LabeledGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto star = g.out_darts(v);
    for (std::size_t i = 0; i < star.size(); ++i) {
      if (g.dart(star[i]).label.is_none())
        throw InputError("check_reduced: dart " + std::to_string(star[i]) + " is unlabeled");
      for (std::size_t j = 0; j < i; ++j)
        if (g.dart(star[i]).label == g.dart(star[j]).label) return {false, v, star[j], star[i]};
    }
  }
  return {};
}

namespace {

void require_connected_components(const GraphFamily& fam) {
  for (std::size_t c = 0; c < fam.size(); ++c)
    if (!fam.components[c].connected())
      throw InputError("component " + std::to_string(c) + " of the family is disconnected");
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct Occ {
  std::uint32_t component;
  Vertex start;
  Vertex end;
};

struct PieceWord {
  std::vector<Occ> occ;
  bool right_extends = false;
};

// Every piece word up to max_length with its occurrences. Piece words are
// closed under prefixes, so growth by one letter on the right finds them all.
std::map<Word, PieceWord> grow_pieces(const GraphFamily& fam, std::size_t max_length,
                                      const std::vector<std::vector<std::uint32_t>>& cls) {
  constexpr std::size_t kWordCap = 2'000'000;
  auto distinct_classes = [&](const std::vector<Occ>& occ) {
    const std::uint32_t first = cls[occ.front().component][occ.front().start];
    for (const Occ& o : occ)
      if (cls[o.component][o.start] != first) return true;
    return false;
  };
  std::map<Word, PieceWord> all;
  std::map<Word, std::vector<Occ>> level;
  for (std::uint32_t c = 0; c < fam.size(); ++c) {
    const auto& g = fam.components[c];
    for (const Dart& d : g.darts()) level[Word{d.label}].push_back({c, d.source, d.target});
  }
  for (std::size_t len = 1; len <= max_length && !level.empty(); ++len) {
    std::map<Word, std::vector<Occ>> next;
    for (auto& [word, occ] : level) {
      if (!distinct_classes(occ)) continue;
      if (len > 1) {
        Word prefix(word.begin(), word.end() - 1);
        all[prefix].right_extends = true;
      }
      if (len < max_length) {
        for (const Occ& o : occ) {
          const auto& g = fam.components[o.component];
          for (DartId d : g.out_darts(o.end)) {
            const Letter l = g.dart(d).label;
            if (l == word.back().inverse()) continue;
            Word w = word;
            w.push_back(l);
            next[std::move(w)].push_back({o.component, o.start, g.dart(d).target});
          }
        }
      }
      all[word].occ = std::move(occ);
      if (all.size() > kWordCap) throw CapExceeded("piece enumeration: more than 2000000 piece words");
    }
    level = std::move(next);
  }
  return all;
}

void check_family_for_pieces(const GraphFamily& fam, const PieceOptions& options) {
  require_connected_components(fam);
  std::size_t darts = 0;
  for (const auto& g : fam.components) darts += g.dart_count();
  if (darts > options.dart_cap)
    throw CapExceeded("piece enumeration: " + std::to_string(darts) + " darts exceed the cap " +
                      std::to_string(options.dart_cap));
  for (std::size_t c = 0; c < fam.size(); ++c) {
    const auto r = check_reduced(fam.components[c]);
    if (!r.reduced)
      throw InputError("piece enumeration: component " + std::to_string(c) + " is not reduced at vertex " +
                       std::to_string(r.vertex));
  }
}

std::vector<DartId> read_path(const LabeledGraph& g, Vertex start, const Word& w) {
  std::vector<DartId> path;
  Vertex v = start;
  for (Letter l : w)
    for (DartId d : g.out_darts(v))
      if (g.dart(d).label == l) {
        path.push_back(d);
        v = g.dart(d).target;
        break;
      }
  return path;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> pointed_isomorphism_classes(const GraphFamily& fam) {
  require_connected_components(fam);
  std::vector<std::uint32_t> offset(fam.size() + 1, 0);
  for (std::size_t c = 0; c < fam.size(); ++c)
    offset[c + 1] = offset[c] + static_cast<std::uint32_t>(fam.components[c].vertex_count());
  UnionFind uf(offset.back());
  for (std::size_t c = 0; c < fam.size(); ++c) {
    const auto& a = fam.components[c];
    if (a.vertex_count() == 0) continue;
    for (std::size_t d = c; d < fam.size(); ++d) {
      const auto& b = fam.components[d];
      if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) continue;
      // An isomorphism is determined by the image of vertex 0.
      for (Vertex y = 0; y < b.vertex_count(); ++y) {
        const auto iso = anchored_isomorphism(a, 0, b, y);
        if (!iso) continue;
        for (Vertex x = 0; x < a.vertex_count(); ++x) uf.unite(offset[c] + x, offset[d] + iso->vertex[x]);
      }
    }
  }
  std::vector<std::uint32_t> compact(offset.back(), kUnreachable);
  std::uint32_t next = 0;
  std::vector<std::vector<std::uint32_t>> out(fam.size());
  for (std::size_t c = 0; c < fam.size(); ++c)
    for (Vertex x = 0; x < fam.components[c].vertex_count(); ++x) {
      const std::uint32_t root = uf.find(offset[c] + x);
      if (compact[root] == kUnreachable) compact[root] = next++;
      out[c].push_back(compact[root]);
    }
  return out;
}

std::vector<Piece> enumerate_pieces(const GraphFamily& fam, const PieceOptions& options) {
  check_family_for_pieces(fam, options);
  std::size_t max_length = options.max_length;
  if (max_length == 0)
    for (const auto& g : fam.components) max_length += g.edge_count();
  const auto cls = pointed_isomorphism_classes(fam);
  const auto all = grow_pieces(fam, max_length, cls);
  std::vector<Piece> out;
  for (const auto& [word, info] : all) {
    const Word inv = inverse_word(word);
    if (inv < word) continue;
    const auto mirror = all.find(inv);
    if (info.right_extends || (mirror != all.end() && mirror->second.right_extends)) continue;
    Piece p;
    p.word = word;
    p.at_length_bound = word.size() == max_length;
    for (const Occ& o : info.occ)
      p.occurrences.push_back({o.component, o.start, read_path(fam.components[o.component], o.start, word)});
    std::sort(p.occurrences.begin(), p.occurrences.end(), [](const PieceOccurrence& a, const PieceOccurrence& b) {
      return std::tie(a.component, a.start) < std::tie(b.component, b.start);
    });
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const Piece& a, const Piece& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.word < b.word;
  });
  return out;
}

SmallCancellationReport check_small_cancellation(const GraphFamily& fam, Rational lambda,
                                                 const PieceOptions& options) {
  SmallCancellationReport rep;
  rep.lambda = lambda;
  require_connected_components(fam);
  for (const auto& g : fam.components) {
    rep.girth.push_back(girth(g));
    if (!check_reduced(g).reduced) rep.reduced = false;
  }
  rep.max_piece_length.assign(fam.size(), 0);
  rep.component_pass.assign(fam.size(), false);
  if (!rep.reduced) {
    rep.pass = false;
    return rep;
  }
  check_family_for_pieces(fam, options);
  // A violating piece has a prefix of length ⌈λ·girth⌉ that still meets the
  // component, so searching up to the largest such length decides the condition.
  std::size_t max_length = 1;
  for (const auto& gi : rep.girth)
    if (gi) {
      const auto need = static_cast<std::size_t>((static_cast<unsigned __int128>(lambda.num) * *gi + lambda.den - 1) /
                                                 lambda.den);
      max_length = std::max(max_length, need);
    }
  const auto cls = pointed_isomorphism_classes(fam);
  const auto all = grow_pieces(fam, max_length, cls);
  for (const auto& [word, info] : all)
    for (const Occ& o : info.occ)
      rep.max_piece_length[o.component] = std::max(rep.max_piece_length[o.component], word.size());
  rep.pass = true;
  for (std::size_t c = 0; c < fam.size(); ++c) {
    rep.component_pass[c] = !rep.girth[c] || lambda.strictly_below(rep.max_piece_length[c], *rep.girth[c]);
    rep.pass = rep.pass && rep.component_pass[c];
  }
  return rep;
}

RandomLabelingResult random_labeling(const GraphFamily& fam, std::size_t alphabet_size, Rational lambda,
                                     std::uint64_t seed, std::size_t max_attempts, const PieceOptions& options) {
  if (alphabet_size == 0) throw InputError("random_labeling: alphabet must be nonempty");
  require_connected_components(fam);
  std::vector<std::optional<std::size_t>> girths;
  for (std::size_t c = 0; c < fam.size(); ++c) {
    girths.push_back(girth(fam.components[c]));
    if (girths.back() && lambda.strictly_below(1, *girths.back()) == false)
      throw InputError("random_labeling: lambda*girth must exceed 1 (component " + std::to_string(c) +
                       ", girth " + std::to_string(*girths.back()) + ", lambda " + lambda.str() + ")");
  }
  const Alphabet alphabet = Alphabet::letters(alphabet_size);
  Rng rng(seed);
  RandomLabelingResult res;
  std::vector<Letter> labels;
  for (res.attempts = 1; res.attempts <= max_attempts; ++res.attempts) {
    GraphFamily sample;
    bool reduced = true;
    for (const auto& g : fam.components) {
      labels.clear();
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto symbol = static_cast<std::uint32_t>(rng.below(alphabet_size));
        labels.emplace_back(symbol, rng.below(2) == 1);
      }
      sample.components.push_back(g.relabeled(alphabet, labels));
      reduced = reduced && check_reduced(sample.components.back()).reduced;
    }
    if (!reduced) continue;
    ++res.reduced_attempts;
    auto rep = check_small_cancellation(sample, lambda, options);
    if (rep.pass) {
      res.success = true;
      res.family = std::move(sample);
      res.report = std::move(rep);
      return res;
    }
  }
  res.attempts = max_attempts;
  return res;
}

}  // namespace coarse
