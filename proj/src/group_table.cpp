#include "coarse/group_table.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "coarse/errors.hpp"

namespace coarse {

FiniteGroupTable::FiniteGroupTable(std::size_t order, std::vector<Element> mul,
                                   std::vector<Element> generators, std::vector<std::string> element_names)
    : order_(order), mul_(std::move(mul)), generators_(std::move(generators)), names_(std::move(element_names)) {
  if (order_ == 0) throw InputError("group: order must be positive");
  if (mul_.size() != order_ * order_) throw InputError("group: multiplication table has wrong size");
  if (!names_.empty() && names_.size() != order_) throw InputError("group: one name per element required");
  for (Element x : mul_)
    if (x >= order_) throw InputError("group: table entry out of range");

  bool found = false;
  for (Element e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < order_ && ok; ++x) ok = this->mul(e, x) == x && this->mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("group: no identity element");

  inv_.assign(order_, order_);
  for (Element x = 0; x < order_; ++x) {
    for (Element y = 0; y < order_; ++y)
      if (this->mul(x, y) == identity_) {
        inv_[x] = y;
        break;
      }
    if (inv_[x] == order_ || this->mul(inv_[x], x) != identity_)
      throw InputError("group: element " + std::to_string(x) + " has no two-sided inverse");
  }

  auto assoc = [&](Element a, Element b, Element c) {
    return this->mul(this->mul(a, b), c) == this->mul(a, this->mul(b, c));
  };
  if (order_ <= 256) {
    for (Element a = 0; a < order_; ++a)
      for (Element b = 0; b < order_; ++b)
        for (Element c = 0; c < order_; ++c)
          if (!assoc(a, b, c)) throw InputError("group: multiplication is not associative");
  } else {
    std::mt19937_64 rng(order_);
    for (int i = 0; i < 1000; ++i) {
      const auto a = static_cast<Element>(rng() % order_), b = static_cast<Element>(rng() % order_),
                 c = static_cast<Element>(rng() % order_);
      if (!assoc(a, b, c)) throw InputError("group: multiplication is not associative");
    }
  }

  std::vector<bool> is_gen(order_, false);
  for (Element s : generators_) {
    if (s >= order_) throw InputError("group: generator out of range");
    if (s == identity_) throw InputError("group: the identity is not allowed as a generator");
    if (is_gen[s]) throw InputError("group: duplicate generator " + std::to_string(s));
    is_gen[s] = true;
  }
  for (Element s : generators_)
    if (!is_gen[inv_[s]]) throw InputError("group: generating set is not symmetric");
  std::vector<bool> seen(order_, false);
  std::vector<Element> queue{identity_};
  seen[identity_] = true;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Element s : generators_) {
      const Element y = this->mul(queue[h], s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  if (queue.size() != order_) throw InputError("group: generators do not generate");
}

FiniteGroupTable FiniteGroupTable::with_generators(std::vector<Element> generators) const {
  return FiniteGroupTable(order_, mul_, std::move(generators), names_);
}

std::vector<Element> FiniteGroupTable::generator_representatives() const {
  std::vector<Element> reps;
  for (Element s : generators_)
    if (std::find(reps.begin(), reps.end(), inv_[s]) == reps.end()) reps.push_back(s);
  return reps;
}

bool is_homomorphism(const FiniteGroupTable& from, const FiniteGroupTable& to, const std::vector<Element>& map) {
  if (map.size() != from.order()) return false;
  for (Element m : map)
    if (m >= to.order()) return false;
  for (Element x = 0; x < from.order(); ++x)
    for (Element y = 0; y < from.order(); ++y)
      if (map[from.mul(x, y)] != to.mul(map[x], map[y])) return false;
  return true;
}

LabeledGraph cayley_graph(const FiniteGroupTable& group) {
  if (group.generators().empty()) throw InputError("cayley_graph: no generators");
  const auto reps = group.generator_representatives();
  std::vector<std::string> names;
  for (Element s : reps) names.push_back(group.name(s));
  std::vector<EdgeSpec> edges;
  for (Element g = 0; g < group.order(); ++g)
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const Element s = reps[i];
      const Element gs = group.mul(g, s);
      if (group.inv(s) == s && gs < g) continue;
      edges.push_back({g, gs, Letter(static_cast<std::uint32_t>(i), false)});
    }
  return LabeledGraph(Alphabet(names), group.order(), edges);
}

namespace groups {

FiniteGroupTable cyclic(std::size_t n) {
  std::vector<Element> gens;
  if (n == 2) gens = {1};
  else if (n > 2) gens = {1, static_cast<Element>(n - 1)};
  return cyclic(n, gens);
}

FiniteGroupTable cyclic(std::size_t n, std::vector<Element> generators) {
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Element>((a + b) % n);
  return FiniteGroupTable(n, std::move(mul), std::move(generators));
}

FiniteGroupTable from_permutations(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw InputError("from_permutations: no generators");
  const std::size_t degree = generators.front().size();
  auto compose = [&](const Permutation& s, const Permutation& t) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[i] = t[s[i]];
    return r;
  };
  auto invert = [&](const Permutation& s) {
    Permutation r(degree);
    for (std::size_t i = 0; i < degree; ++i) r[s[i]] = static_cast<std::uint32_t>(i);
    return r;
  };
  std::vector<Permutation> gens;
  for (const auto& s : generators) {
    if (s.size() != degree) throw InputError("from_permutations: degree mismatch");
    Permutation sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (sorted[i] != i) throw InputError("from_permutations: not a permutation");
    for (const Permutation& t : {s, invert(s)})
      if (std::find(gens.begin(), gens.end(), t) == gens.end()) gens.push_back(t);
  }
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::erase(gens, id);

  std::map<Permutation, Element> index{{id, 0}};
  std::vector<Permutation> elems{id};
  for (std::size_t h = 0; h < elems.size(); ++h)
    for (const auto& s : gens) {
      Permutation y = compose(elems[h], s);
      if (index.emplace(y, static_cast<Element>(elems.size())).second) elems.push_back(std::move(y));
    }
  const std::size_t n = elems.size();
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<Element> gen_idx;
  for (const auto& s : gens) gen_idx.push_back(index.at(s));
  std::vector<std::string> names;
  for (const auto& p : elems) {
    std::string s = "[";
    for (std::size_t i = 0; i < degree; ++i) s += (i ? "," : "") + std::to_string(p[i]);
    names.push_back(s + "]");
  }
  return FiniteGroupTable(n, std::move(mul), std::move(gen_idx), std::move(names));
}

FiniteGroupTable symmetric(std::size_t n) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Permutation p(n);
    for (std::size_t j = 0; j < n; ++j) p[j] = static_cast<std::uint32_t>(j);
    std::swap(p[i], p[i + 1]);
    gens.push_back(p);
  }
  return from_permutations(gens);
}

FiniteGroupTable dihedral(std::size_t n) {
  Permutation rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint32_t>((i + 1) % n);
    refl[i] = static_cast<std::uint32_t>((n - i) % n);
  }
  return from_permutations({rot, refl});
}

FiniteGroupTable quaternion() {
  // Left regular action of Q8 = {±1, ±i, ±j, ±k} on its own 8 elements.
  // Element code: 2*unit + sign, unit ∈ {1, i, j, k}.
  static const int unit_mul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto times = [&](std::uint32_t a, std::uint32_t b) {
    const auto& r = unit_mul[a / 2][b / 2];
    return static_cast<std::uint32_t>(2 * r[0] + ((a % 2) ^ (b % 2) ^ static_cast<std::uint32_t>(r[1])));
  };
  Permutation li(8), lj(8);
  for (std::uint32_t x = 0; x < 8; ++x) {
    li[x] = times(x, 2);
    lj[x] = times(x, 4);
  }
  return from_permutations({li, lj});
}

FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
  const std::size_t n = a.order() * b.order();
  auto code = [&](Element x, Element y) { return static_cast<Element>(x * b.order() + y); };
  std::vector<Element> mul(n * n);
  for (Element x1 = 0; x1 < a.order(); ++x1)
    for (Element y1 = 0; y1 < b.order(); ++y1)
      for (Element x2 = 0; x2 < a.order(); ++x2)
        for (Element y2 = 0; y2 < b.order(); ++y2)
          mul[code(x1, y1) * n + code(x2, y2)] = code(a.mul(x1, x2), b.mul(y1, y2));
  std::vector<Element> gens;
  for (Element s : a.generators()) gens.push_back(code(s, b.identity()));
  for (Element t : b.generators()) gens.push_back(code(a.identity(), t));
  std::vector<std::string> names;
  for (Element x = 0; x < a.order(); ++x)
    for (Element y = 0; y < b.order(); ++y) names.push_back("(" + a.name(x) + "," + b.name(y) + ")");
  return FiniteGroupTable(n, std::move(mul), std::move(gens), std::move(names));
}

}  // namespace groups

}  // namespace coarse
