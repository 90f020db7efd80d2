#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coarse/cheeger.hpp"
#include "coarse/graph_metrics.hpp"
#include "coarse/labeled_graph.hpp"

namespace coarse {

struct SpectrumOptions {
  /// Dense symmetric solves up to this many vertices; Lanczos above.
  std::size_t dense_limit = 4096;
  /// Every returned eigenpair satisfies ‖Av − λv‖ ≤ residual_tol·‖v‖.
  double residual_tol = 1e-8;
  std::uint64_t seed = 0x5eed;
};

/// Dart-count adjacency: A[u][v] = number of darts u→v (a loop contributes 2).
Eigen::MatrixXd adjacency_matrix(const LabeledGraph& g);
/// D − A with D the dart degree; constants span its kernel on connected graphs.
Eigen::MatrixXd laplacian_matrix(const LabeledGraph& g);

/// All eigenvalues of the adjacency matrix, sorted descending, residual-verified.
/// Throws CapExceeded above options.dense_limit.
std::vector<double> adjacency_spectrum(const LabeledGraph& g, const SpectrumOptions& options = {});

/// Eigenvalues of a dense symmetric matrix (ascending) after a residual check.
/// Throws VerificationFailure when a residual exceeds `residual_tol`.
Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> verified_eigensolve(const Eigen::MatrixXd& m,
                                                                   double residual_tol = 1e-8);

using MatVec = std::function<void(const Eigen::VectorXd& in, Eigen::VectorXd& out)>;

struct RitzPair {
  double value = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
  std::size_t restarts = 0;
};

/// Largest eigenvalue of a symmetric operator restricted to the orthogonal
/// complement of `deflate` (orthonormal columns). Explicitly restarted Lanczos
/// with full reorthogonalization; deterministic for a fixed seed.
RitzPair lanczos_largest(const MatVec& op, std::size_t n, const Eigen::MatrixXd& deflate,
                         std::size_t krylov_dim, std::uint64_t seed, double residual_tol,
                         std::size_t max_restarts = 30);

/// Laplacian λ₂ of a connected graph. Throws InputError when disconnected.
double spectral_gap(const LabeledGraph& g, const SpectrumOptions& options = {});

/// Largest |λ| over adjacency eigenvalues whose eigenvectors are orthogonal to the
/// constants and, for bipartite graphs, to the ±1 colouring vector. Uses the
/// dense spectrum below the dense limit and Lanczos on A² above it.
struct NontrivialRadius {
  double value = 0.0;
  bool dense = true;
  double residual = 0.0;
};
NontrivialRadius nontrivial_spectral_radius(const LabeledGraph& g, const SpectrumOptions& options = {});

struct SpectralReport {
  std::vector<double> eigenvalues;  // descending; empty above the dense limit
  std::optional<CheegerResult> cheeger;
  std::optional<double> dg_ratio;
  DegreeBounds degree_bounds;
  double laplacian_gap = 0.0;
};

SpectralReport spectral_report(const LabeledGraph& g, const SpectrumOptions& spectrum = {},
                               const CheegerOptions& cheeger = {});

struct ExpanderOptions {
  CheegerOptions cheeger;
  SpectrumOptions spectrum;
  /// Above the Cheeger cap, accept the lower bound h ≥ gap/2 instead of failing.
  bool accept_spectral_bound = false;
};

struct ExpanderReport {
  bool pass = false;
  std::vector<std::string> reasons;
  std::vector<double> cheeger_values;  // exact or spectral lower bound
  std::vector<bool> exact;
  std::size_t max_degree = 0;
};

/// Finite-family expander check: bounded degree, strictly increasing sizes and
/// h(Γₙ) ≥ c for every component.
ExpanderReport expander_certify(const GraphFamily& fam, double c, const ExpanderOptions& options = {});

}  // namespace coarse
