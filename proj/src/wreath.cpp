#include "coarse/wreath.hpp"

#include <algorithm>
#include <set>

#include "coarse/errors.hpp"

namespace coarse {

std::vector<Element> WreathElement::support() const {
  std::vector<Element> out;
  for (std::size_t w = 0; w < config.size(); ++w)
    for (std::uint64_t bits = config[w]; bits != 0; bits &= bits - 1)
      out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits))));
  return out;
}

std::size_t WreathElementHash::operator()(const WreathElement& x) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ x.b;
  for (std::uint64_t w : x.config) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

WreathGroup::WreathGroup(FiniteGroupTable q, FiniteGroupTable b, std::vector<Element> proj)
    : q_(std::move(q)), b_(std::move(b)), proj_(std::move(proj)), words_((q_.order() + 63) / 64) {
  if (proj_.size() != b_.order()) throw InputError("wreath: projection table must have one entry per element of B");
  for (Element x : proj_)
    if (x >= q_.order()) throw InputError("wreath: projection value out of range");
  if (!is_homomorphism(b_, q_, proj_)) throw InputError("wreath: projection is not a homomorphism");
  std::vector<bool> hit(q_.order(), false);
  for (Element x : proj_) hit[x] = true;
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw InputError("wreath: projection is not surjective");
}

std::optional<std::uint64_t> WreathGroup::order() const {
  if (q_.order() >= 63) return std::nullopt;
  const std::uint64_t lamps = std::uint64_t{1} << q_.order();
  if (lamps > ~std::uint64_t{0} / b_.order()) return std::nullopt;
  return lamps * b_.order();
}

WreathElement WreathGroup::identity() const { return {std::vector<std::uint64_t>(words_, 0), b_.identity()}; }

WreathElement WreathGroup::mul(const WreathElement& x, const WreathElement& y) const {
  WreathElement out = x;
  const Element shift = proj_[x.b];
  for (Element s : y.support()) out.flip(q_.mul(shift, s));
  out.b = b_.mul(x.b, y.b);
  return out;
}

WreathElement WreathGroup::inv(const WreathElement& x) const {
  WreathElement out = identity();
  out.b = b_.inv(x.b);
  const Element shift = proj_[out.b];
  for (Element s : x.support()) out.flip(q_.mul(shift, s));
  return out;
}

WreathElement WreathGroup::delta(Element g) const {
  if (g >= q_.order()) throw InputError("wreath: lamp position out of range");
  WreathElement out = identity();
  out.flip(g);
  return out;
}

WreathElement WreathGroup::from_base(Element b) const {
  if (b >= b_.order()) throw InputError("wreath: element of B out of range");
  WreathElement out = identity();
  out.b = b;
  return out;
}

void WreathGroup::check(const WreathElement& x) const {
  if (x.config.size() != words_ || x.b >= b_.order()) throw InputError("wreath: element of the wrong group");
  if (q_.order() % 64 != 0 && words_ > 0 && (x.config.back() >> (q_.order() % 64)) != 0)
    throw InputError("wreath: lamp outside Q");
}

std::vector<WreathElement> WreathGroup::sigma() const {
  std::vector<WreathElement> out{delta(q_.identity())};
  for (Element v : b_.generators()) out.push_back(from_base(v));
  return out;
}

std::vector<std::string> WreathGroup::sigma_names() const {
  std::vector<std::string> out{"delta"};
  for (Element v : b_.generators()) {
    std::string n = b_.name(v);
    if (n == "delta") n = "b:" + n;
    out.push_back(n);
  }
  return out;
}

std::string WreathGroup::format(const WreathElement& x) const {
  std::string s = "{";
  bool first = true;
  for (Element q : x.support()) {
    if (!first) s += ",";
    s += q_.name(q);
    first = false;
  }
  return s + "}|" + b_.name(x.b);
}

WreathCayley wreath_cayley(const WreathGroup& w, const WreathCayleyOptions& options) {
  if (!options.radius) {
    const auto order = w.order();
    if (!order || *order > options.vertex_cap)
      throw CapExceeded("wreath_cayley: group order above the cap " + std::to_string(options.vertex_cap) +
                        "; use a ball radius");
  }
  const auto sigma = w.sigma();
  WreathCayley out;
  std::vector<std::size_t> depth;
  out.elements.push_back(w.identity());
  out.index.emplace(out.elements.back(), 0);
  depth.push_back(0);
  bool truncated = false;
  for (std::size_t h = 0; h < out.elements.size(); ++h) {
    if (options.radius && depth[h] >= *options.radius) {
      truncated = true;
      continue;
    }
    for (const auto& s : sigma) {
      WreathElement y = w.mul(out.elements[h], s);
      if (out.index.contains(y)) continue;
      if (out.elements.size() >= options.vertex_cap)
        throw CapExceeded("wreath_cayley: more than " + std::to_string(options.vertex_cap) + " vertices");
      out.index.emplace(y, static_cast<Vertex>(out.elements.size()));
      out.elements.push_back(std::move(y));
      depth.push_back(depth[h] + 1);
    }
  }
  // Complete iff no vertex on the boundary sphere has a neighbour outside.
  out.complete = !truncated;
  if (truncated) {
    out.complete = true;
    for (std::size_t h = 0; h < out.elements.size() && out.complete; ++h)
      for (const auto& s : sigma)
        if (!out.index.contains(w.mul(out.elements[h], s))) {
          out.complete = false;
          break;
        }
  }

  // Edge representatives: δ, then one of each {v, v⁻¹} in B.
  const auto& bgens = w.base_group().generators();
  const auto reps = w.base_group().generator_representatives();
  const auto names = w.sigma_names();
  std::vector<std::string> alphabet{names[0]};
  std::vector<std::size_t> rep_sigma{0};
  for (Element r : reps) {
    const auto pos = static_cast<std::size_t>(std::find(bgens.begin(), bgens.end(), r) - bgens.begin());
    alphabet.push_back(names[pos + 1]);
    rep_sigma.push_back(pos + 1);
  }
  std::vector<EdgeSpec> edges;
  for (std::size_t x = 0; x < out.elements.size(); ++x)
    for (std::size_t r = 0; r < rep_sigma.size(); ++r) {
      const auto& s = sigma[rep_sigma[r]];
      const auto it = out.index.find(w.mul(out.elements[x], s));
      if (it == out.index.end()) continue;
      const bool involution = w.mul(s, s) == w.identity();
      if (involution && it->second < x) continue;
      edges.push_back({static_cast<Vertex>(x), it->second, Letter(static_cast<std::uint32_t>(r), false)});
    }
  out.graph = LabeledGraph(Alphabet(alphabet), out.elements.size(), edges);
  return out;
}

FiniteGroupTable wreath_table(const WreathGroup& w, std::size_t order_cap) {
  const auto order = w.order();
  if (!order || *order > order_cap)
    throw CapExceeded("wreath_table: group order above the cap " + std::to_string(order_cap));
  const auto cay = wreath_cayley(w);
  const std::size_t n = cay.elements.size();
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = cay.index.at(w.mul(cay.elements[a], cay.elements[b]));
  std::vector<Element> gens;
  for (const auto& s : w.sigma()) gens.push_back(cay.index.at(s));
  std::vector<std::string> names;
  for (const auto& x : cay.elements) names.push_back(w.format(x));
  return FiniteGroupTable(n, std::move(mul), std::move(gens), std::move(names));
}

std::vector<WreathElement> x_subset(const WreathGroup& w) {
  std::vector<WreathElement> out;
  for (Element g = 0; g < w.lamp_group().order(); ++g) out.push_back(w.delta(g));
  return out;
}

SubwreathEmbedding subwreath_embed(const WreathGroup& small, const WreathGroup& big,
                                   const std::vector<Element>& inclusion, const std::vector<Element>& f,
                                   std::size_t vertex_cap) {
  const auto& L = small.base_group();
  const auto& K = big.base_group();
  const auto& Lp = small.lamp_group();
  const auto& Kp = big.lamp_group();
  if (inclusion.size() != L.order()) throw InputError("subwreath: inclusion needs one entry per element of L");
  if (f.size() != Kp.order()) throw InputError("subwreath: f needs one entry per element of K'");
  std::set<Element> image;
  for (Element k : inclusion) {
    if (k >= K.order()) throw InputError("subwreath: inclusion value out of range");
    if (!image.insert(k).second) throw InputError("subwreath: inclusion is not injective");
  }
  // Cay(L,U) must be a subgraph of Cay(K,V).
  std::set<Element> V(K.generators().begin(), K.generators().end());
  for (Element l = 0; l < L.order(); ++l)
    for (Element u : L.generators()) {
      const Element step = K.mul(K.inv(inclusion[l]), inclusion[L.mul(l, u)]);
      if (!V.contains(step))
        throw InputError("subwreath: Cay(L,U) is not a subgraph of Cay(K,V): edge " + L.name(l) + " -- " +
                         L.name(L.mul(l, u)) + " has no image edge");
    }
  // f is a bijection π(L) → L' and f∘π∘inclusion is the projection of the small group.
  std::set<Element> domain;
  for (Element l = 0; l < L.order(); ++l) domain.insert(big.proj()[inclusion[l]]);
  std::vector<bool> hit(Lp.order(), false);
  for (Element k = 0; k < Kp.order(); ++k) {
    const bool in_domain = domain.contains(k);
    if (in_domain != (f[k] != kNoElement)) throw InputError("subwreath: f must be defined exactly on π(L)");
    if (!in_domain) continue;
    if (f[k] >= Lp.order() || hit[f[k]]) throw InputError("subwreath: f is not a bijection onto L'");
    hit[f[k]] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) throw InputError("subwreath: f is not onto L'");
  for (Element l = 0; l < L.order(); ++l)
    if (f[big.proj()[inclusion[l]]] != small.proj()[l])
      throw InputError("subwreath: f∘π differs from the projection L → L'");

  // f⁻¹ : L' → K'.
  std::vector<Element> f_inv(Lp.order());
  for (Element k = 0; k < Kp.order(); ++k)
    if (f[k] != kNoElement) f_inv[f[k]] = k;
  const auto cay = wreath_cayley(small, {std::nullopt, vertex_cap});
  SubwreathEmbedding out;
  out.domain = cay.elements;
  for (const auto& x : cay.elements) {
    WreathElement y = big.identity();
    y.b = inclusion[x.b];
    for (Element q : x.support()) y.flip(f_inv[q]);
    out.image.push_back(std::move(y));
  }
  return out;
}

bool verify_subgraph_embedding(const std::vector<Vertex>& map, const LabeledGraph& small, const LabeledGraph& big) {
  if (map.size() != small.vertex_count()) return false;
  std::vector<bool> hit(big.vertex_count(), false);
  for (Vertex v : map) {
    if (v >= big.vertex_count() || hit[v]) return false;
    hit[v] = true;
  }
  for (const Dart& d : small.darts()) {
    const Vertex a = map[d.source], b = map[d.target];
    bool adjacent = false;
    for (DartId e : big.out_darts(a))
      if (big.dart(e).target == b) {
        adjacent = true;
        break;
      }
    if (!adjacent) return false;
  }
  return true;
}

}  // namespace coarse
