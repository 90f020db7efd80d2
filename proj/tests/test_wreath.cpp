#include <doctest.h>

#include <set>
#include <tuple>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"
#include "coarse/group_table.hpp"
#include "coarse/morphism.hpp"
#include "coarse/rng.hpp"
#include "coarse/wreath.hpp"

using namespace coarse;

namespace {

std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> m(n);
  for (Element i = 0; i < n; ++i) m[i] = i;
  return m;
}

WreathGroup cyclic_wreath(std::size_t n) {
  return WreathGroup(groups::cyclic(n), groups::cyclic(n), identity_map(n));
}

WreathElement random_element(const WreathGroup& w, Rng& rng) {
  WreathElement x = w.identity();
  for (Element q = 0; q < w.lamp_group().order(); ++q)
    if (rng.below(2)) x.flip(q);
  x.b = static_cast<Element>(rng.below(w.base_group().order()));
  return x;
}

std::vector<Vertex> embedding_map(const SubwreathEmbedding& e, const WreathCayley& small, const WreathCayley& big) {
  std::vector<Vertex> map(small.elements.size());
  for (std::size_t i = 0; i < e.domain.size(); ++i) map[small.index.at(e.domain[i])] = big.index.at(e.image[i]);
  return map;
}

}  // namespace

TEST_CASE("wreath multiplication") {
  const auto w = cyclic_wreath(2);
  auto x = w.delta(0);
  x.b = 1;
  const auto y = w.delta(0);
  const auto z = w.mul(x, y);
  CHECK(z.support() == std::vector<Element>{0, 1});
  CHECK(z.b == 1);

  CHECK(w.mul(w.delta(0), w.delta(0)) == w.identity());

  Rng rng(1);
  for (std::size_t n : {2, 3, 5}) {
    const auto wn = cyclic_wreath(n);
    for (int i = 0; i < 100; ++i) {
      const auto r = random_element(wn, rng);
      CHECK(wn.mul(r, wn.identity()) == r);
      CHECK(wn.mul(wn.identity(), r) == r);
      CHECK(wn.mul(r, wn.inv(r)) == wn.identity());
      CHECK(wn.mul(wn.inv(r), r) == wn.identity());
    }
  }
}

TEST_CASE("wreath inverses") {
  const auto w = cyclic_wreath(3);
  CHECK(w.inv(w.from_base(1)) == w.from_base(2));
  for (Element q = 0; q < 3; ++q) CHECK(w.inv(w.delta(q)) == w.delta(q));
}

TEST_CASE("left action convention") {
  // (b·φ)(q) = φ(proj(b)⁻¹ q): moving by b shifts lamps by proj(b)
  const auto w = cyclic_wreath(5);
  const auto x = w.mul(w.from_base(2), w.delta(1));
  CHECK(x.support() == std::vector<Element>{3});
  CHECK(x.b == 2);
}

TEST_CASE("associativity") {
  for (std::size_t n : {2, 3}) {
    const auto w = cyclic_wreath(n);
    const auto cay = wreath_cayley(w);
    const auto& e = cay.elements;
    for (const auto& a : e)
      for (const auto& b : e) {
        const auto ab = w.mul(a, b);
        for (const auto& c : e) CHECK(w.mul(ab, c) == w.mul(a, w.mul(b, c)));
      }
  }
  const WreathGroup s3(groups::symmetric(3), groups::symmetric(3), identity_map(6));
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(s3, rng), b = random_element(s3, rng), c = random_element(s3, rng);
    CHECK(s3.mul(s3.mul(a, b), c) == s3.mul(a, s3.mul(b, c)));
  }
}

TEST_CASE("cayley graphs and their orders") {
  auto cay = wreath_cayley(cyclic_wreath(2));
  CHECK(cay.graph.vertex_count() == 8);
  CHECK(cay.complete);

  const auto w3 = cyclic_wreath(3);
  cay = wreath_cayley(w3);
  CHECK(cay.graph.vertex_count() == 24);
  const auto deg = degree_bounds(cay.graph);
  CHECK(deg.min == 3);
  CHECK(deg.max == 3);
  CHECK(cay.graph.connected());
  CHECK(w3.sigma_names() == std::vector<std::string>{"delta", "1", "2"});

  WreathCayleyOptions ball;
  ball.radius = 1;
  CHECK(wreath_cayley(w3, ball).graph.vertex_count() == 4);

  const std::vector<WreathGroup> groups_to_check{
      cyclic_wreath(4), WreathGroup(groups::symmetric(3), groups::symmetric(3), identity_map(6)),
      WreathGroup(groups::cyclic(3), groups::cyclic(6), {0, 1, 2, 0, 1, 2})};
  for (const auto& w : groups_to_check) {
    const auto c = wreath_cayley(w);
    CHECK(c.graph.vertex_count() == *w.order());
    CHECK(c.graph.connected());
  }

  WreathCayleyOptions tight;
  tight.vertex_cap = 10;
  CHECK_THROWS_AS(wreath_cayley(w3, tight), CapExceeded);
}

TEST_CASE("left translations are label preserving automorphisms") {
  const WreathGroup w(groups::symmetric(3), groups::symmetric(3), identity_map(6));
  const auto cay = wreath_cayley(w);
  Rng rng(12);
  for (int i = 0; i < 10; ++i) {
    const auto g = cay.elements[rng.below(cay.elements.size())];
    std::vector<Vertex> map(cay.elements.size());
    for (std::size_t v = 0; v < map.size(); ++v) map[v] = cay.index.at(w.mul(g, cay.elements[v]));
    CHECK(is_automorphism(cay.graph, map, false));
    // involution edges carry no orientation, so compare symbols on unordered pairs
    std::set<std::tuple<Vertex, Vertex, std::uint32_t>> edges;
    for (const Dart& d : cay.graph.darts()) edges.insert({d.source, d.target, d.label.symbol()});
    for (const Dart& d : cay.graph.darts()) CHECK(edges.count({map[d.source], map[d.target], d.label.symbol()}) == 1);
  }
}

TEST_CASE("bad projections are rejected") {
  CHECK_THROWS_AS(WreathGroup(groups::cyclic(3), groups::cyclic(3), {0, 2, 2}), InputError);
  CHECK_THROWS_AS(WreathGroup(groups::cyclic(2), groups::cyclic(4), {0, 0, 0, 0}), InputError);
  CHECK_THROWS_AS(WreathGroup(groups::cyclic(2), groups::cyclic(3), {0, 1, 0}), InputError);
}

TEST_CASE("the relative subset") {
  const auto w2 = cyclic_wreath(2);
  CHECK(x_subset(w2).size() == 2);

  const auto w = cyclic_wreath(3);
  const auto xs = x_subset(w);
  CHECK(xs.size() == 3);
  std::set<WreathElement> distinct(xs.begin(), xs.end());
  CHECK(distinct.size() == 3);
  for (const auto& x : xs) {
    CHECK(x != w.identity());
    CHECK(w.mul(x, x) == w.identity());
  }
  // right multiplication by δ_g toggles the lamp at proj(b)·g
  for (const auto& y : wreath_cayley(w).elements)
    for (Element g = 0; g < 3; ++g) {
      auto expected = y;
      expected.flip(w.lamp_group().mul(w.proj()[y.b], g));
      CHECK(w.mul(y, w.delta(g)) == expected);
    }
}

TEST_CASE("wreath tables") {
  const auto w = cyclic_wreath(3);
  const auto t = wreath_table(w);
  CHECK(t.order() == 24);
  CHECK(t.generators().size() == 3);
  CHECK(cayley_graph(t).edge_count() == wreath_cayley(w).graph.edge_count());
  CHECK_THROWS_AS(wreath_table(w, 10), CapExceeded);
}

TEST_CASE("subwreath embedding on a desk instance") {
  // L = Z/3 on {1,2} inside K = Z/6 on {±1,±2} by i ↦ 2i
  const WreathGroup small(groups::cyclic(3), groups::cyclic(3), identity_map(3));
  const WreathGroup big(groups::cyclic(6), groups::cyclic(6, {1, 5, 2, 4}), identity_map(6));
  std::vector<Element> f(6, kNoElement);
  f[0] = 0;
  f[2] = 1;
  f[4] = 2;
  const auto e = subwreath_embed(small, big, {0, 2, 4}, f);
  CHECK(e.domain.size() == 24);
  const auto cs = wreath_cayley(small), cb = wreath_cayley(big);
  CHECK(cb.graph.vertex_count() == 384);
  const auto map = embedding_map(e, cs, cb);
  CHECK(verify_subgraph_embedding(map, cs.graph, cb.graph));
  // lamps outside the image of L stay off
  for (const auto& x : e.image)
    for (Element q : x.support()) CHECK(q % 2 == 0);
}

TEST_CASE("subwreath identity and failures") {
  const auto w = cyclic_wreath(3);
  const auto e = subwreath_embed(w, w, identity_map(3), identity_map(3));
  CHECK(e.domain == e.image);
  const auto cay = wreath_cayley(w);
  CHECK(verify_subgraph_embedding(embedding_map(e, cay, cay), cay.graph, cay.graph));

  std::vector<Vertex> constant(cay.elements.size(), 0);
  CHECK_FALSE(verify_subgraph_embedding(constant, cay.graph, cay.graph));

  // L = {0, 2} in Z/4 on {±1}: 0 and 2 are not adjacent
  const WreathGroup small(groups::cyclic(2), groups::cyclic(2), identity_map(2));
  const auto big = cyclic_wreath(4);
  std::vector<Element> f(4, kNoElement);
  f[0] = 0;
  f[2] = 1;
  CHECK_THROWS_AS(subwreath_embed(small, big, {0, 2}, f), InputError);
}
