#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coarse/labeled_graph.hpp"

namespace coarse {

using Element = std::uint32_t;

/// A finite group given by its full multiplication table, with a symmetric
/// generating set. Identity and inverses are derived from the table.
class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;
  /// `mul` is row-major order×order. Throws InputError unless the table is a
  /// group (associativity exhaustive up to order 256, 1000 seeded random triples
  /// above) and the generators are symmetric, non-identity, distinct and generating.
  FiniteGroupTable(std::size_t order, std::vector<Element> mul, std::vector<Element> generators,
                   std::vector<std::string> element_names = {});

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Element>& table() const { return mul_; }
  const std::vector<std::string>& element_names() const { return names_; }
  std::string name(Element a) const { return names_.empty() ? std::to_string(a) : names_[a]; }

  /// Same group with another symmetric generating set.
  FiniteGroupTable with_generators(std::vector<Element> generators) const;

  /// Generators that label Cayley edges: one per {s, s⁻¹} pair, first occurrence wins.
  std::vector<Element> generator_representatives() const;

 private:
  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element identity_ = 0;
  std::vector<Element> generators_;
  std::vector<std::string> names_;
};

/// True iff map(xy) = map(x)map(y) for all x, y.
bool is_homomorphism(const FiniteGroupTable& from, const FiniteGroupTable& to, const std::vector<Element>& map);

/// Right Cayley graph: a dart g → gs labeled s for every representative
/// generator s; an involutive generator contributes one edge per pair {g, gs}.
/// The alphabet consists of the representatives' names.
LabeledGraph cayley_graph(const FiniteGroupTable& group);

namespace groups {
/// ℤ/n with generators {1, n−1} (just {1} for n = 2, none for n = 1).
FiniteGroupTable cyclic(std::size_t n);
/// ℤ/n with the given symmetric generators.
FiniteGroupTable cyclic(std::size_t n, std::vector<Element> generators);
using Permutation = std::vector<std::uint32_t>;
/// Group generated by permutations (closed under inverses automatically);
/// elements in breadth-first order from the identity, product (στ)(i) = τ(σ(i)).
FiniteGroupTable from_permutations(const std::vector<Permutation>& generators);
FiniteGroupTable symmetric(std::size_t n);  // generated by adjacent transpositions
FiniteGroupTable dihedral(std::size_t n);   // order 2n: rotation and reflection
FiniteGroupTable quaternion();              // Q8
FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);
}  // namespace groups

}  // namespace coarse
