#include <doctest.h>

#include <cmath>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"
#include "coarse/group_table.hpp"
#include "coarse/lps.hpp"
#include "coarse/morphism.hpp"
#include "coarse/rng.hpp"
#include "coarse/spectrum.hpp"

using namespace coarse;

namespace {

const LpsGraph& x_5_13() {
  static const LpsGraph g = lps_graph(5, 13);
  return g;
}

}  // namespace

TEST_CASE("cayley graphs of small groups") {
  auto c4 = cayley_graph(groups::cyclic(4));
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(girth(c4) == 4u);
  CHECK(degree_bounds(c4).min == 2);

  auto k2 = cayley_graph(groups::cyclic(2));
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);

  // S3 = <(12), (23)>: a hexagon
  const auto s3 = groups::from_permutations({{1, 0, 2}, {0, 2, 1}});
  CHECK(s3.order() == 6);
  const auto hex = cayley_graph(s3);
  CHECK(hex.edge_count() == 6);
  CHECK(girth(hex) == 6u);
  CHECK(diameter(hex) == 3);
}

TEST_CASE("group tables are validated") {
  // not associative: a Latin square that is not a group
  const std::vector<Element> bad{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroupTable(5, bad, {1}), InputError);
  // generators must be symmetric and generate
  CHECK_THROWS_AS(groups::cyclic(4, {1}), InputError);
  CHECK_THROWS_AS(groups::cyclic(4, {2}), InputError);
  CHECK_NOTHROW(groups::cyclic(4, {1, 3, 2}));

  for (const auto& g : {groups::symmetric(4), groups::dihedral(5), groups::quaternion()}) {
    for (Element a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      CHECK(g.mul(g.identity(), a) == a);
    }
  }
  CHECK(groups::symmetric(4).order() == 24);
  CHECK(groups::dihedral(5).order() == 10);
  CHECK(groups::quaternion().order() == 8);
  CHECK(groups::direct_product(groups::cyclic(2), groups::cyclic(3)).order() == 6);
}

TEST_CASE("modular helpers") {
  CHECK(modular::is_prime(13));
  CHECK_FALSE(modular::is_prime(91));
  CHECK(modular::legendre(5, 13) == -1);
  CHECK(modular::legendre(13, 5) == -1);
  CHECK(modular::legendre(5, 29) == 1);
  for (std::uint64_t q : {5, 13, 17, 29, 37, 41}) {
    const auto i = modular::sqrt_minus_one(q);
    CHECK((i * i + 1) % q == 0);
  }
}

TEST_CASE("lps parameters") {
  const auto p = lps_params(5, 13);
  CHECK(p.legendre == -1);
  CHECK_THROWS_AS(lps_params(5, 5), InputError);
  CHECK_THROWS_AS(lps_params(7, 13), InputError);
  CHECK_THROWS_AS(lps_params(5, 15), InputError);
  // (5|29) = +1 is the PSL2 branch, refused
  CHECK_THROWS_AS(lps_graph(5, 29), InputError);
  // desk-scale gate
  CHECK_THROWS_AS(lps_graph(5, 73), CapExceeded);
}

TEST_CASE("X^{5,13} size, regularity and girth") {
  const auto& x = x_5_13();
  CHECK(x.graph.vertex_count() == 13 * (13 * 13 - 1));
  CHECK(x.quadruples.size() == 6);
  for (const auto& a : x.quadruples) {
    CHECK(a[0] > 0);
    CHECK(a[0] % 2 == 1);
    CHECK(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3] == 5);
  }
  const auto deg = degree_bounds(x.graph);
  CHECK(deg.min == 6);
  CHECK(deg.max == 6);
  CHECK(x.graph.connected());
  const double bound = 4.0 * std::log(13.0) / std::log(5.0) - std::log(4.0) / std::log(5.0);
  CHECK(bound == doctest::Approx(5.5134).epsilon(1e-4));
  CHECK(*girth(x.graph) >= 6);
}

TEST_CASE("generators pair up under inversion") {
  const auto& x = x_5_13();
  for (Element s : x.generators) {
    const Element t = x.group.inv(s);
    CHECK(std::find(x.generators.begin(), x.generators.end(), t) != x.generators.end());
  }
}

TEST_CASE("X^{5,13} is vertex transitive by left translations") {
  const auto& x = x_5_13();
  const auto& grp = x.group;
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = static_cast<Element>(rng.below(grp.order()));
    const auto v = static_cast<Element>(rng.below(grp.order()));
    const Element t = grp.mul(v, grp.inv(u));
    std::vector<Vertex> map(grp.order());
    for (Element y = 0; y < grp.order(); ++y) map[y] = grp.mul(t, y);
    CHECK(map[u] == v);
    CHECK(is_automorphism(x.graph, map, true));
  }
}

TEST_CASE("X^{5,13} verification report") {
  const auto& x = x_5_13();
  const auto r = verify_lps(x.graph, x.params);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
  CHECK(r.pass);
  CHECK(r.bipartite);
  CHECK(r.nontrivial_radius <= 2.0 * std::sqrt(5.0) + 1e-9);

  const auto e = adjacency_spectrum(x.graph);
  CHECK(e.front() == doctest::Approx(6.0));
  CHECK(e.back() == doctest::Approx(-6.0));
  CHECK(spectral_gap(x.graph) >= 6.0 - 2.0 * std::sqrt(5.0) - 1e-9);
}

TEST_CASE("deleting an edge breaks regularity") {
  const auto& x = x_5_13();
  const auto r = verify_lps(x.graph.without_edge(17), x.params);
  CHECK_FALSE(r.pass);
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.name == "regularity"; });
  REQUIRE(it != r.checks.end());
  CHECK_FALSE(it->pass);
}

TEST_CASE("lps construction is deterministic") {
  const auto a = lps_graph(5, 17);
  const auto b = lps_graph(5, 17);
  CHECK(a.graph == b.graph);
  CHECK(a.generators == b.generators);
  CHECK(a.graph.vertex_count() == 17 * (17 * 17 - 1));
}
