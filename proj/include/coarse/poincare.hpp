#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "coarse/group_table.hpp"

namespace coarse {

/// Rows of f are the values f(x) ∈ ℝ^d, indexed by group element.
using GroupFunction = Eigen::MatrixXd;

/// (1/|X|) Σ_{x∈G, y∈X} ‖f(x) − f(xy)‖².
double relative_form_lhs(const FiniteGroupTable& g, const std::vector<Element>& x_set, const GroupFunction& f);
/// Σ_{x∈G, σ∈Σ} ‖f(x) − f(xσ)‖², Σ taken as the given list (σ and σ⁻¹ both counted).
double relative_form_rhs(const FiniteGroupTable& g, const std::vector<Element>& sigma, const GroupFunction& f);

/// Matrix of f ↦ Σ_{x, s∈S} (f(x) − f(xs))², i.e. Σ_s (2I − P_s − P_sᵀ) with
/// (P_s f)(x) = f(xs).
Eigen::MatrixXd displacement_form(const FiniteGroupTable& g, const std::vector<Element>& s);

struct PoincareResult {
  double constant = 0.0;
  Eigen::VectorXd witness;  // mean zero, unit norm, attains the constant
  double witness_lhs = 0.0;
  double witness_rhs = 0.0;
};

struct PoincareOptions {
  std::size_t order_cap = 2048;
};

/// Smallest C with lhs ≤ C·rhs for every f: the top generalized eigenvalue of
/// the two forms on the mean-zero subspace, whitened by the rhs form. Scalar
/// functions suffice since both forms act coordinatewise. Throws InputError
/// when the rhs form is singular there (Σ does not generate), CapExceeded above
/// the order cap, VerificationFailure when the witness misses the constant by
/// more than 1e−9 (relative).
PoincareResult relative_poincare_constant(const FiniteGroupTable& g, const std::vector<Element>& sigma,
                                          const std::vector<Element>& x_set, const PoincareOptions& options = {});

struct RelativeInequalityReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t dimension = 0;
  std::size_t violations = 0;
  std::size_t degenerate = 0;    // rhs = 0 (constant f)
  double worst_ratio = 0.0;      // max lhs/rhs
  /// sup_X ψ / sup_Σ ψ for ψ = cnd_from_function(f); bounded by C·|X|·|Σ|.
  double worst_psi_ratio = 0.0;
  std::size_t psi_violations = 0;
  bool pass = true;
};

/// Random Gaussian f: G → ℝ^d checked against lhs ≤ C·rhs (relative slack
/// 1e−9) and, through ψ(w) = ‖f − ρ(w)f‖², against sup_X ψ ≤ C|X||Σ| sup_Σ ψ.
RelativeInequalityReport verify_relative_inequality(const FiniteGroupTable& g, const std::vector<Element>& sigma,
                                                    const std::vector<Element>& x_set, double c, std::size_t trials,
                                                    std::uint64_t seed, std::size_t dimension = 3);

/// Same check on one given function (counts as one trial).
RelativeInequalityReport check_relative_inequality(const FiniteGroupTable& g, const std::vector<Element>& sigma,
                                                   const std::vector<Element>& x_set, double c, const GroupFunction& f);

}  // namespace coarse
