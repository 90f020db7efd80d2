#include <doctest.h>

#include <cmath>

#include "coarse/covering.hpp"
#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"
#include "coarse/metric_diag.hpp"
#include "coarse/walls.hpp"
#include "desk.hpp"

using namespace coarse;

namespace {

std::vector<Vertex> iota(std::size_t n) {
  std::vector<Vertex> v(n);
  for (Vertex i = 0; i < n; ++i) v[i] = i;
  return v;
}

Eigen::MatrixXd hexagon() {
  Eigen::MatrixXd p(6, 2);
  for (long i = 0; i < 6; ++i) {
    p(i, 0) = std::cos(M_PI * static_cast<double>(i) / 3.0);
    p(i, 1) = std::sin(M_PI * static_cast<double>(i) / 3.0);
  }
  return p;
}

Eigen::MatrixXd wall_points(const LabeledGraph& g) {
  const auto cm = homology_cover(g);
  const auto f = wall_hilbert_embedding(cm.cover, walls_from_cover(cm), 0);
  Eigen::MatrixXd p(static_cast<long>(f.size()), static_cast<long>(f[0].size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f[i].size(); ++j) p(static_cast<long>(i), static_cast<long>(j)) = f[i][j];
  return p;
}

void check_envelopes(const std::vector<ModuliRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].rho <= rows[i].gamma);
    CHECK(rows[i].rho_envelope <= rows[i].rho);
    CHECK(rows[i].gamma_envelope >= rows[i].gamma);
    if (i > 0) {
      CHECK(rows[i].t > rows[i - 1].t);
      CHECK(rows[i].rho_envelope >= rows[i - 1].rho_envelope);
      CHECK(rows[i].gamma_envelope >= rows[i - 1].gamma_envelope);
    }
  }
}

}  // namespace

TEST_CASE("moduli of simple maps") {
  const auto c6 = graphs::cycle(6);
  const auto id = compression_moduli({MapInstance::into_graph(c6, c6, iota(6))});
  REQUIRE(id.size() == 3);
  for (const auto& r : id) {
    CHECK(r.rho == r.t);
    CHECK(r.gamma == r.t);
  }
  CHECK(id[0].count == 6);
  CHECK(id[2].count == 3);

  const auto flat = compression_moduli({MapInstance::into_graph(c6, c6, std::vector<Vertex>(6, 2))});
  for (const auto& r : flat) {
    CHECK(r.rho == 0.0);
    CHECK(r.gamma == 0.0);
  }
  CHECK_THROWS_AS(compression_moduli({}), InputError);
  const auto csv = moduli_csv(id);
  CHECK(csv.rfind("t,rho,gamma,count", 0) == 0);
}

TEST_CASE("moduli of the wall embedding of the K4 cover") {
  const auto cm = homology_cover(graphs::complete(4));
  const auto walls = walls_from_cover(cm);
  const auto dw = wall_pseudometric(cm.cover, walls);
  const auto m = MapInstance::into_points(cm.cover, wall_points(graphs::complete(4)));
  const auto rows = compression_moduli({m});
  check_envelopes(rows);
  const auto n = cm.cover.vertex_count();
  const auto dg = FiniteMetric::of_graph(cm.cover);
  for (const auto& r : rows) {
    double lo = 1e300, hi = 0.0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (dg(x, y) == r.t) {
          lo = std::min(lo, std::sqrt(static_cast<double>(dw[x * n + y])));
          hi = std::max(hi, std::sqrt(static_cast<double>(dw[x * n + y])));
        }
    CHECK(r.rho == lo);
    CHECK(r.gamma == hi);
    CHECK(r.rho >= 1.0);
  }
}

TEST_CASE("weak embeddings") {
  MapFamily ids;
  for (std::size_t n : {4, 6, 8, 10}) ids.push_back(MapInstance::into_graph(graphs::cycle(n), graphs::cycle(n), iota(n)));
  auto r = is_weak_embedding(ids, 1.0);
  CHECK(r.pass);
  CHECK(r.fiber_fraction[1] == doctest::Approx(1.0 / 6.0));

  MapFamily consts;
  for (std::size_t n : {4, 6, 8}) consts.push_back(MapInstance::into_graph(graphs::cycle(n), graphs::cycle(n), std::vector<Vertex>(n, 0)));
  r = is_weak_embedding(consts, 1.0);
  CHECK_FALSE(r.pass);
  CHECK(r.fiber_fraction == std::vector<double>{1.0, 1.0, 1.0});

  // covering projections over a growing base
  MapFamily covers;
  for (const auto& base : {graphs::cycle(3), graphs::complete(4), graphs::cycle(5)}) {
    const auto cm = homology_cover(base);
    covers.push_back(MapInstance::into_graph(cm.cover, cm.base, cm.vertex_map));
  }
  r = is_weak_embedding(covers, 1.0);
  CHECK(r.pass);
  CHECK(r.fiber_fraction == std::vector<double>{1.0 / 3.0, 1.0 / 4.0, 1.0 / 5.0});
  for (double l : r.lipschitz) CHECK(l <= 1.0);

  // a fixed base keeps the fraction at 1/|base|
  MapFamily tower;
  for (std::size_t k : {1, 2}) {
    const auto ic = iterate_homology_cover(graphs::cycle(5), k);
    tower.push_back(MapInstance::into_graph(ic.composite.cover, ic.composite.base, ic.composite.vertex_map));
  }
  r = is_weak_embedding(tower, 1.0);
  CHECK_FALSE(r.pass);
  CHECK(r.lipschitz_ok);
  CHECK_FALSE(r.fractions_decreasing);

  // stretched identity is not 1-Lipschitz
  const auto c6 = graphs::cycle(6);
  r = is_weak_embedding({MapInstance::into_points(c6, 3.0 * hexagon()), MapInstance::into_points(c6, hexagon())}, 1.0);
  CHECK_FALSE(r.lipschitz_ok);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(is_weak_embedding({ids[0]}, 1.0).pass);
}

TEST_CASE("distortion") {
  const auto c6 = graphs::cycle(6);
  CHECK(distortion(MapInstance::into_graph(c6, c6, iota(6))).distortion == 1.0);

  Eigen::MatrixXd square(4, 2);
  square << 0, 0, 1, 0, 1, 1, 0, 1;
  const auto d = distortion(MapInstance::into_points(graphs::cycle(4), square));
  CHECK(d.expansion == doctest::Approx(1.0));
  CHECK(d.contraction == doctest::Approx(std::sqrt(2.0)));
  CHECK(d.distortion == doctest::Approx(std::sqrt(2.0)));

  CHECK_THROWS_AS(distortion(MapInstance::into_graph(c6, c6, std::vector<Vertex>(6, 0))), InputError);

  // walls of the 12-cycle cover of C6 are opposite edge pairs, so ‖F(x)−F(y)‖ = √d
  const auto cover = homology_cover(c6).cover;
  const auto w = distortion(MapInstance::into_points(cover, wall_points(c6)));
  CHECK(w.expansion == doctest::Approx(1.0));
  CHECK(w.contraction == doctest::Approx(std::sqrt(6.0)));
  CHECK(w.distortion == doctest::Approx(std::sqrt(6.0)));
}

TEST_CASE("ball concentration") {
  CHECK(ball_concentration(Eigen::MatrixXd::Zero(7, 3), 0.0) == 7);
  CHECK(ball_concentration(Eigen::MatrixXd::Zero(7, 3), 5.0) == 7);
  CHECK(ball_concentration(hexagon(), 0.1) == 1);
  CHECK(ball_concentration(hexagon(), 0.5) == 3);
  CHECK(ball_concentration(hexagon(), 1.0) == 6);

  Rng rng(17);
  const auto pts = desk::random_function(rng, 40, 2);
  std::size_t prev = 0;
  for (double r = 0.0; r < 4.0; r += 0.05) {
    const auto c = ball_concentration(pts, r);
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(prev == 40);
}

TEST_CASE("Lipschitz maps of a wreath product") {
  const auto w = desk::lamplighter(3);
  const auto cay = cayley_graph(w.table);
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const auto f = normalize_lipschitz(w.table, w.sigma, desk::random_function(rng, 24, 3));
    const auto rows = compression_moduli({MapInstance::into_points(cay, f)});
    check_envelopes(rows);
    for (const auto& r : rows) CHECK(r.gamma <= r.t + 1e-12);
  }
}

TEST_CASE("corollary replay") {
  for (std::size_t n : {2, 3}) {
    const auto w = desk::lamplighter(n);
    const double c = relative_poincare_constant(w.table, w.sigma, w.xs).constant;
    Rng rng(1000 + n);
    for (int i = 0; i < 100; ++i) {
      const auto f = normalize_lipschitz(w.table, w.sigma, desk::random_function(rng, w.table.order(), 3));
      const auto r = corollary_replay(w.table, w.sigma, w.xs, f, c);
      CHECK(r.lipschitz);
      CHECK(r.radius == doctest::Approx(std::sqrt(2.0 * c * static_cast<double>(w.sigma.size()))));
      CHECK(r.average <= c * static_cast<double>(w.sigma.size()) * (1 + 1e-9));
      CHECK(2 * r.captured >= w.xs.size());
      CHECK(r.best_captured >= r.captured);
      CHECK(r.pass);
    }
    const auto stretched = 5.0 * normalize_lipschitz(w.table, w.sigma, desk::random_function(rng, w.table.order(), 3));
    CHECK_FALSE(corollary_replay(w.table, w.sigma, w.xs, stretched, c).lipschitz);
  }
}
