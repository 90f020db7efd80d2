#include "coarse/poincare.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coarse/errors.hpp"
#include "coarse/kernels.hpp"
#include "coarse/rng.hpp"
#include "coarse/spectrum.hpp"

namespace coarse {

namespace {

void check_function(const FiniteGroupTable& g, const GroupFunction& f) {
  if (static_cast<std::size_t>(f.rows()) != g.order() || f.cols() == 0)
    throw InputError("group function needs one row per element and at least one column");
}

void check_elements(const FiniteGroupTable& g, const std::vector<Element>& s, const char* what) {
  if (s.empty()) throw InputError(std::string(what) + " must be nonempty");
  for (Element e : s)
    if (e >= g.order()) throw InputError(std::string(what) + " contains an element out of range");
}

double displacement(const FiniteGroupTable& g, const std::vector<Element>& s, const GroupFunction& f) {
  double total = 0.0;
  for (Element x = 0; x < g.order(); ++x)
    for (Element y : s) total += (f.row(x) - f.row(g.mul(x, y))).squaredNorm();
  return total;
}

}  // namespace

double relative_form_lhs(const FiniteGroupTable& g, const std::vector<Element>& x_set, const GroupFunction& f) {
  check_function(g, f);
  check_elements(g, x_set, "X");
  return displacement(g, x_set, f) / static_cast<double>(x_set.size());
}

double relative_form_rhs(const FiniteGroupTable& g, const std::vector<Element>& sigma, const GroupFunction& f) {
  check_function(g, f);
  check_elements(g, sigma, "Sigma");
  return displacement(g, sigma, f);
}

Eigen::MatrixXd displacement_form(const FiniteGroupTable& g, const std::vector<Element>& s) {
  const auto n = static_cast<long>(g.order());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y : s) {
      const Element xy = g.mul(x, y);
      m(x, x) += 1.0;
      m(xy, xy) += 1.0;
      m(x, xy) -= 1.0;
      m(xy, x) -= 1.0;
    }
  return m;
}

PoincareResult relative_poincare_constant(const FiniteGroupTable& g, const std::vector<Element>& sigma,
                                          const std::vector<Element>& x_set, const PoincareOptions& options) {
  check_elements(g, sigma, "Sigma");
  check_elements(g, x_set, "X");
  if (g.order() > options.order_cap)
    throw CapExceeded("relative_poincare_constant: order " + std::to_string(g.order()) + " above the cap " +
                      std::to_string(options.order_cap));
  if (g.order() < 2) throw InputError("relative_poincare_constant: the group must have at least two elements");
  const Eigen::MatrixXd h = helmert_basis(g.order());
  const Eigen::MatrixXd a =
      h.transpose() * displacement_form(g, x_set) * h / static_cast<double>(x_set.size());
  const Eigen::MatrixXd b = h.transpose() * displacement_form(g, sigma) * h;
  Eigen::LLT<Eigen::MatrixXd> llt(b);
  if (llt.info() != Eigen::Success)
    throw InputError("relative_poincare_constant: rhs form is singular on mean-zero functions (disconnected Cayley graph)");
  // Whitened operator L⁻¹ A L⁻ᵀ.
  const Eigen::MatrixXd l = llt.matrixL();
  Eigen::MatrixXd m = l.triangularView<Eigen::Lower>().solve(a);
  m = l.triangularView<Eigen::Lower>().solve(m.transpose()).transpose();
  m = 0.5 * (m + m.transpose());
  const auto es = verified_eigensolve(m, 1e-8 * std::max(1.0, m.cwiseAbs().maxCoeff()));
  const long top = es.eigenvalues().size() - 1;
  PoincareResult res;
  res.constant = es.eigenvalues()(top);
  const Eigen::VectorXd z = es.eigenvectors().col(top);
  Eigen::VectorXd y = l.transpose().triangularView<Eigen::Upper>().solve(z);
  Eigen::VectorXd f = h * y;
  f /= f.norm();
  // Fix the sign so the output is reproducible: first clearly nonzero entry positive.
  for (long i = 0; i < f.size(); ++i)
    if (std::abs(f(i)) > 1e-12) {
      if (f(i) < 0) f = -f;
      break;
    }
  res.witness = f;
  res.witness_lhs = relative_form_lhs(g, x_set, f);
  res.witness_rhs = relative_form_rhs(g, sigma, f);
  const double ratio = res.witness_lhs / res.witness_rhs;
  if (!(std::abs(ratio - res.constant) <= 1e-9 * std::max(1.0, res.constant)))
    throw VerificationFailure("relative_poincare_constant: witness ratio " + std::to_string(ratio) +
                              " differs from the eigenvalue " + std::to_string(res.constant));
  return res;
}

RelativeInequalityReport check_relative_inequality(const FiniteGroupTable& g, const std::vector<Element>& sigma,
                                                   const std::vector<Element>& x_set, double c,
                                                   const GroupFunction& f) {
  if (!(c > 0.0)) throw InputError("verify_relative_inequality: C must be positive");
  RelativeInequalityReport rep;
  rep.trials = 1;
  rep.dimension = static_cast<std::size_t>(f.cols());
  const double lhs = relative_form_lhs(g, x_set, f);
  const double rhs = relative_form_rhs(g, sigma, f);
  if (rhs <= 0.0) {
    ++rep.degenerate;
    return rep;
  }
  const double ratio = lhs / rhs;
  rep.worst_ratio = ratio;
  if (ratio > c * (1.0 + 1e-9)) ++rep.violations;
  const KernelFunction psi = cnd_from_function(g, f);
  double sup_x = 0.0, sup_s = 0.0;
  for (Element y : x_set) sup_x = std::max(sup_x, psi[y]);
  for (Element s : sigma) sup_s = std::max(sup_s, psi[s]);
  rep.worst_psi_ratio = sup_x / sup_s;
  const double psi_bound = c * static_cast<double>(x_set.size() * sigma.size());
  if (rep.worst_psi_ratio > psi_bound * (1.0 + 1e-9)) ++rep.psi_violations;
  rep.pass = rep.violations == 0 && rep.psi_violations == 0;
  return rep;
}

RelativeInequalityReport verify_relative_inequality(const FiniteGroupTable& g, const std::vector<Element>& sigma,
                                                    const std::vector<Element>& x_set, double c, std::size_t trials,
                                                    std::uint64_t seed, std::size_t dimension) {
  if (dimension == 0) throw InputError("verify_relative_inequality: dimension must be positive");
  RelativeInequalityReport rep;
  rep.seed = seed;
  rep.dimension = dimension;
  Rng rng(seed);
  GroupFunction f(static_cast<long>(g.order()), static_cast<long>(dimension));
  for (std::size_t t = 0; t < trials; ++t) {
    for (long i = 0; i < f.rows(); ++i)
      for (long j = 0; j < f.cols(); ++j) f(i, j) = rng.normal();
    const auto one = check_relative_inequality(g, sigma, x_set, c, f);
    ++rep.trials;
    rep.violations += one.violations;
    rep.degenerate += one.degenerate;
    rep.psi_violations += one.psi_violations;
    rep.worst_ratio = std::max(rep.worst_ratio, one.worst_ratio);
    rep.worst_psi_ratio = std::max(rep.worst_psi_ratio, one.worst_psi_ratio);
  }
  rep.pass = rep.violations == 0 && rep.psi_violations == 0;
  return rep;
}

}  // namespace coarse
