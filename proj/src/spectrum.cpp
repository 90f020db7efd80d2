#include "coarse/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <mutex>
#include <optional>
#include <sstream>
#include <tuple>

#include "coarse/errors.hpp"

namespace coarse {
namespace {

// Uniform in [-1, 1] from raw engine output, independent of <random> distributions.
double signed_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

void project_out(const Eigen::MatrixXd& basis, Eigen::VectorXd& v) {
  if (basis.cols() > 0) v -= basis * (basis.transpose() * v);
}

void sparse_adjacency_apply(const LabeledGraph& g, const Eigen::VectorXd& in, Eigen::VectorXd& out) {
  out.setZero(static_cast<long>(g.vertex_count()));
  for (const Dart& d : g.darts()) out[d.source] += in[d.target];
}

}  // namespace

Eigen::MatrixXd adjacency_matrix(const LabeledGraph& g) {
  const auto n = static_cast<long>(g.vertex_count());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Dart& d : g.darts()) a(d.source, d.target) += 1.0;
  return a;
}

Eigen::MatrixXd laplacian_matrix(const LabeledGraph& g) {
  Eigen::MatrixXd l = -adjacency_matrix(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) l(v, v) += static_cast<double>(g.degree(v));
  return l;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> verified_eigensolve(const Eigen::MatrixXd& m,
                                                                   double residual_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success) throw VerificationFailure("eigensolver did not converge");
  const Eigen::MatrixXd r = m * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal();
  for (long j = 0; j < r.cols(); ++j) {
    const double res = r.col(j).norm();
    if (!(res <= residual_tol * es.eigenvectors().col(j).norm())) {
      std::ostringstream msg;
      msg << "eigenpair " << j << " residual " << res << " exceeds " << residual_tol;
      throw VerificationFailure(msg.str());
    }
  }
  return es;
}

std::vector<double> adjacency_spectrum(const LabeledGraph& g, const SpectrumOptions& options) {
  if (g.vertex_count() > options.dense_limit)
    throw CapExceeded("adjacency_spectrum: " + std::to_string(g.vertex_count()) +
                      " vertices exceeds the dense limit " + std::to_string(options.dense_limit));
  if (g.vertex_count() == 0) return {};
  // Large dense solves are repeated by the reports; remember the last one.
  static std::mutex memo_mutex;
  static std::optional<std::tuple<LabeledGraph, double, std::vector<double>>> memo;
  const bool remember = g.vertex_count() >= 512;
  if (remember) {
    std::lock_guard lock(memo_mutex);
    if (memo && std::get<1>(*memo) == options.residual_tol && std::get<0>(*memo) == g) return std::get<2>(*memo);
  }
  const auto es = verified_eigensolve(adjacency_matrix(g), options.residual_tol);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::reverse(out.begin(), out.end());
  if (remember) {
    std::lock_guard lock(memo_mutex);
    memo.emplace(g, options.residual_tol, out);
  }
  return out;
}

RitzPair lanczos_largest(const MatVec& op, std::size_t n, const Eigen::MatrixXd& deflate,
                         std::size_t krylov_dim, std::uint64_t seed, double residual_tol,
                         std::size_t max_restarts) {
  const auto free_dim = static_cast<long>(n) - deflate.cols();
  if (free_dim <= 0) throw InputError("lanczos: nothing left after deflation");
  const long m = std::min<long>(static_cast<long>(krylov_dim), free_dim);

  std::mt19937_64 rng(seed);
  Eigen::VectorXd start(static_cast<long>(n));
  for (long i = 0; i < start.size(); ++i) start[i] = signed_unit(rng);
  project_out(deflate, start);
  start.normalize();

  RitzPair best;
  Eigen::VectorXd w(static_cast<long>(n)), check(static_cast<long>(n));
  for (std::size_t restart = 0; restart <= max_restarts; ++restart) {
    Eigen::MatrixXd basis(static_cast<long>(n), m);
    std::vector<double> alpha, beta;
    basis.col(0) = start;
    long k = m;
    for (long j = 0; j < m; ++j) {
      op(basis.col(j), w);
      project_out(deflate, w);
      alpha.push_back(basis.col(j).dot(w));
      for (int pass = 0; pass < 2; ++pass) {
        w -= basis.leftCols(j + 1) * (basis.leftCols(j + 1).transpose() * w);
        project_out(deflate, w);
      }
      const double b = w.norm();
      if (j + 1 == m) break;
      if (b < 1e-12) {
        k = j + 1;
        break;
      }
      beta.push_back(b);
      basis.col(j + 1) = w / b;
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k, k);
    for (long i = 0; i < k; ++i) t(i, i) = alpha[static_cast<std::size_t>(i)];
    for (long i = 0; i + 1 < k; ++i) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const double theta = es.eigenvalues()[k - 1];
    Eigen::VectorXd x = basis.leftCols(k) * es.eigenvectors().col(k - 1);
    x.normalize();
    op(x, check);
    project_out(deflate, check);
    best = {theta, x, (check - theta * x).norm(), restart};
    if (best.residual <= residual_tol) break;
    start = x;
  }
  return best;
}

double spectral_gap(const LabeledGraph& g, const SpectrumOptions& options) {
  if (!g.connected()) throw InputError("spectral_gap: graph is disconnected");
  const std::size_t n = g.vertex_count();
  if (n < 2) throw InputError("spectral_gap: need at least two vertices");
  const auto bounds = degree_bounds(g);
  if (n <= options.dense_limit && bounds.min == bounds.max) {
    // L = dI − A for a regular graph
    return static_cast<double>(bounds.max) - adjacency_spectrum(g, options)[1];
  }
  if (n <= options.dense_limit) {
    const auto es = verified_eigensolve(laplacian_matrix(g), options.residual_tol);
    return es.eigenvalues()[1];
  }
  // Largest eigenvalue of shift·I − L on the complement of the constants.
  const double shift = 2.0 * static_cast<double>(degree_bounds(g).max);
  Eigen::MatrixXd ones = Eigen::MatrixXd::Constant(static_cast<long>(n), 1, 1.0 / std::sqrt(double(n)));
  MatVec op = [&](const Eigen::VectorXd& in, Eigen::VectorXd& out) {
    sparse_adjacency_apply(g, in, out);
    for (Vertex v = 0; v < n; ++v) out[v] += (shift - static_cast<double>(g.degree(v))) * in[v];
  };
  const auto ritz = lanczos_largest(op, n, ones, 300, options.seed, options.residual_tol);
  return shift - ritz.value;
}

NontrivialRadius nontrivial_spectral_radius(const LabeledGraph& g, const SpectrumOptions& options) {
  if (!g.connected()) throw InputError("nontrivial_spectral_radius: graph is disconnected");
  const auto bounds = degree_bounds(g);
  if (bounds.min != bounds.max) throw InputError("nontrivial_spectral_radius: graph is not regular");
  const auto colouring = bipartition(g);
  const std::size_t n = g.vertex_count();
  NontrivialRadius out;
  if (n <= options.dense_limit) {
    auto spec = adjacency_spectrum(g, options);
    std::size_t lo = 1, hi = spec.size();
    if (colouring) --hi;
    for (std::size_t i = lo; i < hi; ++i) out.value = std::max(out.value, std::abs(spec[i]));
    return out;
  }
  Eigen::MatrixXd deflate(static_cast<long>(n), colouring ? 2 : 1);
  deflate.col(0).setConstant(1.0 / std::sqrt(double(n)));
  if (colouring)
    for (Vertex v = 0; v < n; ++v) deflate(v, 1) = ((*colouring)[v] ? -1.0 : 1.0) / std::sqrt(double(n));
  Eigen::VectorXd tmp(static_cast<long>(n));
  MatVec op = [&](const Eigen::VectorXd& in, Eigen::VectorXd& out2) {
    sparse_adjacency_apply(g, in, tmp);
    sparse_adjacency_apply(g, tmp, out2);
  };
  const auto ritz = lanczos_largest(op, n, deflate, 300, options.seed, options.residual_tol);
  out.value = std::sqrt(std::max(0.0, ritz.value));
  out.dense = false;
  out.residual = ritz.residual;
  return out;
}

SpectralReport spectral_report(const LabeledGraph& g, const SpectrumOptions& spectrum,
                               const CheegerOptions& cheeger) {
  SpectralReport r;
  r.degree_bounds = degree_bounds(g);
  if (g.vertex_count() <= spectrum.dense_limit) r.eigenvalues = adjacency_spectrum(g, spectrum);
  if (g.connected() && g.vertex_count() >= 2) {
    r.laplacian_gap = spectral_gap(g, spectrum);
    if (g.vertex_count() <= cheeger.vertex_cap) r.cheeger = cheeger_exact(g, cheeger);
    if (const auto gi = girth(g)) r.dg_ratio = static_cast<double>(diameter(g)) / static_cast<double>(*gi);
  }
  return r;
}

ExpanderReport expander_certify(const GraphFamily& fam, double c, const ExpanderOptions& options) {
  ExpanderReport r;
  r.pass = true;
  auto fail = [&](std::string why) {
    r.pass = false;
    r.reasons.push_back(std::move(why));
  };
  if (fam.components.empty()) fail("empty family");
  for (std::size_t i = 0; i < fam.components.size(); ++i) {
    const auto& g = fam.components[i];
    const std::string tag = "component " + std::to_string(i);
    r.max_degree = std::max(r.max_degree, degree_bounds(g).max);
    if (i > 0 && g.vertex_count() <= fam.components[i - 1].vertex_count())
      fail(tag + ": size does not increase (" + std::to_string(g.vertex_count()) + ")");
    if (!g.connected() || g.vertex_count() < 2) {
      fail(tag + ": not a connected graph on at least two vertices");
      r.cheeger_values.push_back(0.0);
      r.exact.push_back(false);
      continue;
    }
    double h = 0.0;
    bool exact = true;
    if (g.vertex_count() <= options.cheeger.vertex_cap) {
      h = cheeger_exact(g, options.cheeger).value();
    } else if (options.accept_spectral_bound) {
      h = spectral_gap(g, options.spectrum) / 2.0;
      exact = false;
    } else {
      fail(tag + ": above the Cheeger enumeration cap and spectral bounds not accepted");
      exact = false;
    }
    r.cheeger_values.push_back(h);
    r.exact.push_back(exact);
    if ((exact || options.accept_spectral_bound) && h < c) {
      std::ostringstream msg;
      msg << tag << ": h = " << h << (exact ? "" : " (lower bound)") << " < c = " << c;
      fail(msg.str());
    }
  }
  return r;
}

}  // namespace coarse
