#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coarse/group_table.hpp"
#include "coarse/labeled_graph.hpp"

namespace coarse {

/// A finite metric space as a row-major distance matrix.
struct FiniteMetric {
  std::size_t size = 0;
  std::vector<double> d;

  double operator()(std::size_t x, std::size_t y) const { return d[x * size + y]; }
  /// Path metric of a connected graph. Throws InputError otherwise.
  static FiniteMetric of_graph(const LabeledGraph& g);
  /// Euclidean metric on the rows.
  static FiniteMetric of_points(const Eigen::MatrixXd& points);
};

/// One index of a map family: f maps source point x to target point map[x].
struct MapInstance {
  FiniteMetric source;
  FiniteMetric target;
  std::vector<std::size_t> map;

  /// Identity on the points of the source composed with a point list.
  static MapInstance into_points(const LabeledGraph& g, const Eigen::MatrixXd& points);
  static MapInstance into_graph(const LabeledGraph& g, const LabeledGraph& target, const std::vector<Vertex>& map);
  double target_distance(std::size_t x, std::size_t y) const { return target(map[x], map[y]); }
  void validate() const;
};

using MapFamily = std::vector<MapInstance>;

struct ModuliRow {
  double t = 0.0;        // source distance
  double rho = 0.0;      // min target distance over pairs at distance t
  double gamma = 0.0;    // max
  std::size_t count = 0;
  double rho_envelope = 0.0;    // largest nondecreasing minorant of rho
  double gamma_envelope = 0.0;  // smallest nondecreasing majorant of gamma
};

/// One row per source distance occurring among distinct pairs, pooled over
/// the family, ascending in t. Throws InputError on an empty family.
std::vector<ModuliRow> compression_moduli(const MapFamily& family);
std::string moduli_csv(const std::vector<ModuliRow>& rows);

struct WeakEmbeddingReport {
  std::vector<double> lipschitz;         // per index
  std::vector<double> fiber_fraction;    // max_x |f⁻¹(f(x))| / |X_n|
  bool lipschitz_ok = true;
  bool fractions_decreasing = true;
  bool pass = false;
  std::string reason;
};

/// Lipschitz constant ≤ D at every index and strictly decreasing maximal
/// fiber fractions; needs at least two indices for a pass.
WeakEmbeddingReport is_weak_embedding(const MapFamily& family, double d);

struct DistortionReport {
  double expansion = 0.0;    // max d_Y/d_X
  double contraction = 0.0;  // max d_X/d_Y
  double distortion = 0.0;
};

/// Throws InputError when the map is not injective on distinct source points.
DistortionReport distortion(const MapInstance& m);

/// Max over image points c of #{x : ‖f(x) − c‖ ≤ 2D}: bounds the number of
/// points any radius-D ball can hold from above, and is bounded above by the
/// largest radius-2D ball count.
std::size_t ball_concentration(const Eigen::MatrixXd& points, double d);

struct CorollaryReplay {
  double radius = 0.0;          // √(2Ĉ|Σ|)
  Element center = 0;           // x with the smallest average displacement over X
  double average = 0.0;         // (1/|X|) Σ_y ‖f(x) − f(xy)‖²
  std::size_t captured = 0;     // points of xX within `radius` of f(x)
  std::size_t best_captured = 0;  // max over all x
  bool lipschitz = true;        // f is 1-Lipschitz along Σ
  bool pass = false;            // captured ≥ |X|/2
};

/// The averaging argument: some x has average displacement over X at most
/// Ĉ|Σ| for a 1-Lipschitz f, so half of the coset xX lies within √(2Ĉ|Σ|) of f(x).
CorollaryReplay corollary_replay(const FiniteGroupTable& g, const std::vector<Element>& sigma,
                                 const std::vector<Element>& x_set, const Eigen::MatrixXd& f, double c_hat);

/// Rescales f so that max over edges x ~ xσ of ‖f(x) − f(xσ)‖ is 1 (or leaves it when constant).
Eigen::MatrixXd normalize_lipschitz(const FiniteGroupTable& g, const std::vector<Element>& sigma, Eigen::MatrixXd f);

}  // namespace coarse
