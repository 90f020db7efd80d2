#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "coarse/group_table.hpp"

namespace coarse {

/// Real function on the elements of a finite group, indexed by element.
using KernelFunction = std::vector<double>;

/// Orthonormal basis of the mean-zero subspace of ℝⁿ (n × (n−1)), Helmert columns:
/// column k−1 is (1,…,1,−k,0,…,0)/√(k(k+1)) with k leading ones.
Eigen::MatrixXd helmert_basis(std::size_t n);

/// M[x][y] = φ(y⁻¹x).
Eigen::MatrixXd kernel_matrix(const FiniteGroupTable& g, const KernelFunction& phi);

struct DefinitenessReport {
  bool pass = false;
  bool symmetric = true;
  /// Smallest eigenvalue of M (PD test) or largest eigenvalue of the
  /// compressed matrix (CND test).
  double extreme_eigenvalue = 0.0;
};

/// M[x][y] = φ(y⁻¹x) is symmetric with smallest eigenvalue ≥ −tol.
DefinitenessReport is_positive_definite(const FiniteGroupTable& g, const KernelFunction& phi, double tol = 1e-8);

/// Σ c_x c_y ψ(y⁻¹x) ≤ tol·|c|² for all c with Σc = 0: the matrix compressed to
/// the mean-zero subspace has largest eigenvalue ≤ tol. Throws InputError
/// unless ψ(1) = 0 and ψ(g⁻¹) = ψ(g) (to within tol).
DefinitenessReport is_cnd(const FiniteGroupTable& g, const KernelFunction& psi, double tol = 1e-8);

/// ψ(w) = Σ_x ‖f(x) − f(xw)‖², rows of f indexed by element.
KernelFunction cnd_from_function(const FiniteGroupTable& g, const Eigen::MatrixXd& f);

/// exp(−tψ) pointwise. Throws InputError for t < 0.
KernelFunction schoenberg_transform(const KernelFunction& psi, double t);

/// −log ε / δ. Throws InputError unless 0 < ε ≤ 1 and δ > 0.
double schoenberg_bound(double epsilon, double delta);

struct LemmaReplay {
  bool degenerate = false;     // ψ vanishes on V
  double sup_v = 0.0;          // before normalization
  double sup_x = 0.0;          // after normalization
  double inf_v_phi = 0.0;
  double inf_x_phi = 0.0;
  bool hypothesis = false;     // inf_V φ ≥ 1 − δ
  double epsilon = 0.0;        // the ε used in the conclusion
  double bound = 0.0;          // −log ε / δ
  bool conclusion = false;     // sup_X ψ ≤ bound · sup_V ψ (normalized: sup_V ψ = 1)
};

/// Normalizes ψ so that sup_V ψ = 1, forms φ = exp(−δψ) and checks
/// inf_V φ ≥ 1 − δ; with ε = inf_X φ (or the given ε when inf_X φ ≥ ε) it
/// checks sup_X ψ ≤ (−log ε/δ)·sup_V ψ.
LemmaReplay schoenberg_lemma_replay(const FiniteGroupTable& g, const KernelFunction& psi,
                                    const std::vector<Element>& v, const std::vector<Element>& x, double delta,
                                    std::optional<double> epsilon = std::nullopt, double tol = 1e-12);

}  // namespace coarse
