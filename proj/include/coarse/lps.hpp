#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coarse/group_table.hpp"
#include "coarse/labeled_graph.hpp"
#include "coarse/spectrum.hpp"

namespace coarse {

namespace modular {
bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
/// Legendre symbol (a|p) for an odd prime p: 0, 1 or −1.
int legendre(std::int64_t a, std::uint64_t p);
/// Square root of −1 modulo a prime q ≡ 1 (mod 4), from the smallest non-residue.
std::uint64_t sqrt_minus_one(std::uint64_t q);
}  // namespace modular

struct LpsParams {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  int legendre = 0;
};

/// Validates p ≠ q, both prime and ≡ 1 (mod 4); fills in (p|q).
LpsParams lps_params(std::uint32_t p, std::uint32_t q);

/// PGL₂(F_q), elements stored as canonical matrices (first non-zero entry in
/// row-major order scaled to 1), numbered in lexicographic order.
class Pgl2Group {
 public:
  using Matrix = std::array<std::uint32_t, 4>;  // a b / c d

  explicit Pgl2Group(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::size_t order() const { return elements_.size(); }
  Element identity() const { return identity_; }
  const Matrix& matrix(Element e) const { return elements_[e]; }
  /// Index of the projective class of an invertible matrix.
  Element index_of(const Matrix& m) const;
  Matrix canonical(const Matrix& m) const;
  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  /// Full table, feasible only for small q.
  FiniteGroupTable table(std::vector<Element> generators) const;

 private:
  std::uint32_t q_;
  std::vector<Matrix> elements_;
  std::unordered_map<std::uint32_t, Element> index_;
  Element identity_ = 0;
};

struct LpsOptions {
  /// Refuse q above this bound unless allow_large is set.
  std::uint32_t max_q = 61;
  bool allow_large = false;
  /// Build the explicit FiniteGroupTable when the group order is at most this.
  std::size_t table_limit = 4096;
};

struct LpsGraph {
  LpsParams params;
  LabeledGraph graph;
  Pgl2Group group;
  /// The p+1 solutions of a0²+a1²+a2²+a3² = p with a0 > 0 odd and a1, a2, a3 even.
  std::vector<std::array<int, 4>> quadruples;
  /// Group element of each quadruple, same order.
  std::vector<Element> generators;
  std::optional<FiniteGroupTable> table;
};

/// X^{p,q}: Cayley graph of PGL₂(q) on the p+1 LPS generators. Only the case
/// (p|q) = −1 is supported.
LpsGraph lps_graph(std::uint32_t p, std::uint32_t q, const LpsOptions& options = {});

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct LpsReport {
  std::vector<Check> checks;
  bool pass = false;
  std::size_t vertex_count = 0;
  std::size_t max_degree = 0;
  std::optional<std::size_t> girth;
  double girth_bound = 0.0;
  bool bipartite = false;
  double nontrivial_radius = 0.0;
  double ramanujan_bound = 0.0;
  std::optional<std::size_t> diameter;
  double diameter_over_log_n = 0.0;
};

/// Regularity, order, connectivity, girth bound, bipartiteness and the
/// Ramanujan bound |λ| ≤ 2√p (+1e−9) on every eigenvalue other than ±(p+1).
LpsReport verify_lps(const LabeledGraph& g, const LpsParams& params, const SpectrumOptions& options = {});

}  // namespace coarse
