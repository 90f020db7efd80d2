#include "coarse/metric_diag.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "coarse/errors.hpp"
#include "coarse/graph_metrics.hpp"

namespace coarse {

FiniteMetric FiniteMetric::of_graph(const LabeledGraph& g) {
  if (!g.connected()) throw InputError("metric of a disconnected graph");
  const auto dm = distance_matrix(g);
  return {g.vertex_count(), std::vector<double>(dm.begin(), dm.end())};
}

FiniteMetric FiniteMetric::of_points(const Eigen::MatrixXd& points) {
  const auto n = static_cast<std::size_t>(points.rows());
  FiniteMetric m{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      m.d[x * n + y] = m.d[y * n + x] = (points.row(static_cast<long>(x)) - points.row(static_cast<long>(y))).norm();
  return m;
}

MapInstance MapInstance::into_points(const LabeledGraph& g, const Eigen::MatrixXd& points) {
  if (static_cast<std::size_t>(points.rows()) != g.vertex_count())
    throw InputError("map into points: one point per vertex required");
  MapInstance m{FiniteMetric::of_graph(g), FiniteMetric::of_points(points), {}};
  for (std::size_t x = 0; x < g.vertex_count(); ++x) m.map.push_back(x);
  return m;
}

MapInstance MapInstance::into_graph(const LabeledGraph& g, const LabeledGraph& target, const std::vector<Vertex>& map) {
  MapInstance m{FiniteMetric::of_graph(g), FiniteMetric::of_graph(target), {}};
  m.map.assign(map.begin(), map.end());
  m.validate();
  return m;
}

void MapInstance::validate() const {
  if (map.size() != source.size) throw InputError("map must be total on the source");
  for (std::size_t y : map)
    if (y >= target.size) throw InputError("map value out of range");
}

std::vector<ModuliRow> compression_moduli(const MapFamily& family) {
  if (family.empty()) throw InputError("compression_moduli: empty family");
  std::map<double, ModuliRow> rows;
  for (const auto& m : family) {
    m.validate();
    for (std::size_t x = 0; x < m.source.size; ++x)
      for (std::size_t y = x + 1; y < m.source.size; ++y) {
        const double t = m.source(x, y);
        const double s = m.target_distance(x, y);
        auto [it, fresh] = rows.try_emplace(t, ModuliRow{t, s, s, 0, 0, 0});
        it->second.rho = std::min(it->second.rho, s);
        it->second.gamma = std::max(it->second.gamma, s);
        ++it->second.count;
      }
  }
  std::vector<ModuliRow> out;
  for (auto& [t, r] : rows) out.push_back(r);
  double run = -INFINITY;
  for (auto& r : out) r.gamma_envelope = run = std::max(run, r.gamma);
  run = INFINITY;
  for (auto it = out.rbegin(); it != out.rend(); ++it) it->rho_envelope = run = std::min(run, it->rho);
  return out;
}

std::string moduli_csv(const std::vector<ModuliRow>& rows) {
  std::ostringstream s;
  s.precision(17);
  s << "t,rho,gamma,count,rho_envelope,gamma_envelope\n";
  for (const auto& r : rows)
    s << r.t << ',' << r.rho << ',' << r.gamma << ',' << r.count << ',' << r.rho_envelope << ',' << r.gamma_envelope
      << '\n';
  return s.str();
}

WeakEmbeddingReport is_weak_embedding(const MapFamily& family, double d) {
  WeakEmbeddingReport rep;
  for (const auto& m : family) {
    m.validate();
    double lip = 0.0;
    for (std::size_t x = 0; x < m.source.size; ++x)
      for (std::size_t y = x + 1; y < m.source.size; ++y) {
        const double s = m.source(x, y), t = m.target_distance(x, y);
        if (s > 0.0) lip = std::max(lip, t / s);
        else if (t > 0.0) lip = INFINITY;
      }
    // Fibers by target distance 0, so coincident points in ℝ^d count together.
    std::size_t worst = 0;
    for (std::size_t x = 0; x < m.source.size; ++x) {
      std::size_t c = 0;
      for (std::size_t y = 0; y < m.source.size; ++y) c += m.target_distance(x, y) == 0.0;
      worst = std::max(worst, c);
    }
    rep.lipschitz.push_back(lip);
    rep.fiber_fraction.push_back(m.source.size ? static_cast<double>(worst) / static_cast<double>(m.source.size) : 1.0);
    if (!(lip <= d * (1.0 + 1e-12))) {
      rep.lipschitz_ok = false;
      if (rep.reason.empty()) rep.reason = "index " + std::to_string(rep.lipschitz.size() - 1) + " is not D-Lipschitz";
    }
  }
  for (std::size_t i = 1; i < rep.fiber_fraction.size(); ++i)
    if (!(rep.fiber_fraction[i] < rep.fiber_fraction[i - 1])) {
      rep.fractions_decreasing = false;
      if (rep.reason.empty()) rep.reason = "fiber fraction does not decrease at index " + std::to_string(i);
    }
  if (family.size() < 2 && rep.reason.empty()) rep.reason = "a trend needs at least two indices";
  rep.pass = family.size() >= 2 && rep.lipschitz_ok && rep.fractions_decreasing;
  return rep;
}

DistortionReport distortion(const MapInstance& m) {
  m.validate();
  DistortionReport r;
  for (std::size_t x = 0; x < m.source.size; ++x)
    for (std::size_t y = x + 1; y < m.source.size; ++y) {
      const double s = m.source(x, y), t = m.target_distance(x, y);
      if (t == 0.0) throw InputError("distortion: map is not injective");
      if (s == 0.0) throw InputError("distortion: source is only a pseudometric");
      r.expansion = std::max(r.expansion, t / s);
      r.contraction = std::max(r.contraction, s / t);
    }
  r.distortion = r.expansion * r.contraction;
  return r;
}

std::size_t ball_concentration(const Eigen::MatrixXd& points, double d) {
  if (!(d >= 0.0)) throw InputError("ball_concentration: radius must be nonnegative");
  std::size_t best = 0;
  const double r2 = 4.0 * d * d;
  for (long c = 0; c < points.rows(); ++c) {
    std::size_t count = 0;
    for (long x = 0; x < points.rows(); ++x) count += (points.row(x) - points.row(c)).squaredNorm() <= r2;
    best = std::max(best, count);
  }
  return best;
}

Eigen::MatrixXd normalize_lipschitz(const FiniteGroupTable& g, const std::vector<Element>& sigma, Eigen::MatrixXd f) {
  double lip = 0.0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element s : sigma) lip = std::max(lip, (f.row(x) - f.row(g.mul(x, s))).norm());
  if (lip > 0.0) f /= lip;
  return f;
}

CorollaryReplay corollary_replay(const FiniteGroupTable& g, const std::vector<Element>& sigma,
                                 const std::vector<Element>& x_set, const Eigen::MatrixXd& f, double c_hat) {
  if (static_cast<std::size_t>(f.rows()) != g.order()) throw InputError("corollary_replay: one row per element");
  if (x_set.empty() || sigma.empty()) throw InputError("corollary_replay: X and Sigma must be nonempty");
  CorollaryReplay r;
  for (Element x = 0; x < g.order(); ++x)
    for (Element s : sigma)
      if ((f.row(x) - f.row(g.mul(x, s))).norm() > 1.0 + 1e-12) r.lipschitz = false;
  r.radius = std::sqrt(2.0 * c_hat * static_cast<double>(sigma.size()));
  const double r2 = r.radius * r.radius;
  r.average = INFINITY;
  for (Element x = 0; x < g.order(); ++x) {
    double sum = 0.0;
    std::size_t inside = 0;
    for (Element y : x_set) {
      const double d2 = (f.row(x) - f.row(g.mul(x, y))).squaredNorm();
      sum += d2;
      inside += d2 <= r2;
    }
    const double avg = sum / static_cast<double>(x_set.size());
    if (avg < r.average) {
      r.average = avg;
      r.center = x;
      r.captured = inside;
    }
    r.best_captured = std::max(r.best_captured, inside);
  }
  r.pass = 2 * r.captured >= x_set.size();
  return r;
}

}  // namespace coarse
