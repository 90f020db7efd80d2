#include "coarse/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coarse/errors.hpp"
#include "coarse/spectrum.hpp"

namespace coarse {

Eigen::MatrixXd helmert_basis(std::size_t n) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<long>(n), n == 0 ? 0 : static_cast<long>(n - 1));
  for (std::size_t k = 1; k < n; ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k) * static_cast<double>(k + 1));
    for (std::size_t i = 0; i < k; ++i) h(static_cast<long>(i), static_cast<long>(k - 1)) = s;
    h(static_cast<long>(k), static_cast<long>(k - 1)) = -static_cast<double>(k) * s;
  }
  return h;
}

Eigen::MatrixXd kernel_matrix(const FiniteGroupTable& g, const KernelFunction& phi) {
  if (phi.size() != g.order()) throw InputError("kernel: one value per group element required");
  const auto n = static_cast<long>(g.order());
  Eigen::MatrixXd m(n, n);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) m(x, y) = phi[g.mul(g.inv(y), x)];
  return m;
}

namespace {

double scaled_tol(const Eigen::MatrixXd& m) { return 1e-8 * std::max(1.0, m.cwiseAbs().maxCoeff()); }

bool symmetric_kernel(const FiniteGroupTable& g, const KernelFunction& k, double tol) {
  for (Element x = 0; x < g.order(); ++x)
    if (std::abs(k[x] - k[g.inv(x)]) > tol) return false;
  return true;
}

}  // namespace

DefinitenessReport is_positive_definite(const FiniteGroupTable& g, const KernelFunction& phi, double tol) {
  DefinitenessReport rep;
  Eigen::MatrixXd m = kernel_matrix(g, phi);
  rep.symmetric = symmetric_kernel(g, phi, tol);
  if (!rep.symmetric) return rep;
  m = 0.5 * (m + m.transpose());
  const auto es = verified_eigensolve(m, scaled_tol(m));
  rep.extreme_eigenvalue = es.eigenvalues()(0);
  rep.pass = rep.extreme_eigenvalue >= -tol;
  return rep;
}

DefinitenessReport is_cnd(const FiniteGroupTable& g, const KernelFunction& psi, double tol) {
  if (psi.size() != g.order()) throw InputError("kernel: one value per group element required");
  if (std::abs(psi[g.identity()]) > tol) throw InputError("is_cnd: psi(identity) must vanish");
  if (!symmetric_kernel(g, psi, tol)) throw InputError("is_cnd: psi must satisfy psi(g^-1) = psi(g)");
  DefinitenessReport rep;
  if (g.order() < 2) {
    rep.pass = true;
    return rep;
  }
  Eigen::MatrixXd m = kernel_matrix(g, psi);
  m = 0.5 * (m + m.transpose());
  const Eigen::MatrixXd h = helmert_basis(g.order());
  const Eigen::MatrixXd c = h.transpose() * m * h;
  const auto es = verified_eigensolve(c, scaled_tol(c));
  rep.extreme_eigenvalue = es.eigenvalues()(es.eigenvalues().size() - 1);
  rep.pass = rep.extreme_eigenvalue <= tol;
  return rep;
}

KernelFunction cnd_from_function(const FiniteGroupTable& g, const Eigen::MatrixXd& f) {
  if (static_cast<std::size_t>(f.rows()) != g.order()) throw InputError("cnd_from_function: one row per element");
  KernelFunction psi(g.order(), 0.0);
  for (Element w = 0; w < g.order(); ++w) {
    double s = 0.0;
    for (Element x = 0; x < g.order(); ++x) s += (f.row(x) - f.row(g.mul(x, w))).squaredNorm();
    psi[w] = s;
  }
  return psi;
}

KernelFunction schoenberg_transform(const KernelFunction& psi, double t) {
  if (!(t >= 0.0)) throw InputError("schoenberg_transform: t must be nonnegative");
  KernelFunction phi(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) phi[i] = std::exp(-t * psi[i]);
  return phi;
}

double schoenberg_bound(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw InputError("schoenberg_bound: epsilon must lie in (0, 1]");
  if (!(delta > 0.0)) throw InputError("schoenberg_bound: delta must be positive");
  return -std::log(epsilon) / delta;
}

LemmaReplay schoenberg_lemma_replay(const FiniteGroupTable& g, const KernelFunction& psi,
                                    const std::vector<Element>& v, const std::vector<Element>& x, double delta,
                                    std::optional<double> epsilon, double tol) {
  if (v.empty() || x.empty()) throw InputError("lemma replay: V and X must be nonempty");
  if (!(delta > 0.0)) throw InputError("lemma replay: delta must be positive");
  if (psi.size() != g.order()) throw InputError("lemma replay: one value per group element required");
  LemmaReplay r;
  for (Element s : v) r.sup_v = std::max(r.sup_v, psi.at(s));
  if (r.sup_v <= 0.0) {
    r.degenerate = true;
    return r;
  }
  r.inf_v_phi = std::numeric_limits<double>::infinity();
  r.inf_x_phi = std::numeric_limits<double>::infinity();
  for (Element s : v) r.inf_v_phi = std::min(r.inf_v_phi, std::exp(-delta * psi.at(s) / r.sup_v));
  for (Element y : x) {
    const double p = psi.at(y) / r.sup_v;
    r.sup_x = std::max(r.sup_x, p);
    r.inf_x_phi = std::min(r.inf_x_phi, std::exp(-delta * p));
  }
  r.hypothesis = r.inf_v_phi >= 1.0 - delta;
  r.epsilon = epsilon && r.inf_x_phi >= *epsilon ? *epsilon : r.inf_x_phi;
  r.bound = r.epsilon > 0.0 ? schoenberg_bound(r.epsilon, delta) : std::numeric_limits<double>::infinity();
  r.conclusion = r.sup_x <= r.bound * (1.0 + tol) + tol;
  return r;
}

}  // namespace coarse
