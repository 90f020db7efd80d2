#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coarse/group_table.hpp"
#include "coarse/labeled_graph.hpp"

namespace coarse {

/// Point (φ, b) of ℤ/2 ≀_Q B: φ is the support of a ℤ/2-valued function on
/// Q stored as a bitset, b an element of B.
struct WreathElement {
  std::vector<std::uint64_t> config;
  Element b = 0;

  bool lamp(Element q) const { return (config[q / 64] >> (q % 64)) & 1u; }
  void flip(Element q) { config[q / 64] ^= std::uint64_t{1} << (q % 64); }
  std::vector<Element> support() const;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
  friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
};

struct WreathElementHash {
  std::size_t operator()(const WreathElement& x) const noexcept;
};

/// ℤ/2 ≀_Q B through the surjection proj: B → Q, with Σ = {δ} ∪ V where δ
/// lights the lamp at 1_Q and V are the generators of B.
class WreathGroup {
 public:
  /// Throws InputError unless proj is a surjective homomorphism.
  WreathGroup(FiniteGroupTable q, FiniteGroupTable b, std::vector<Element> proj);

  const FiniteGroupTable& lamp_group() const { return q_; }
  const FiniteGroupTable& base_group() const { return b_; }
  const std::vector<Element>& proj() const { return proj_; }
  /// 2^|Q|·|B|, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> order() const;

  WreathElement identity() const;
  /// (φ₁,b₁)(φ₂,b₂) = (φ₁ ⊕ b₁·φ₂, b₁b₂) with (b·φ)(q) = φ(proj(b)⁻¹q).
  WreathElement mul(const WreathElement& x, const WreathElement& y) const;
  WreathElement inv(const WreathElement& x) const;
  /// (δ_g, 1_B).
  WreathElement delta(Element g) const;
  WreathElement from_base(Element b) const;
  /// Throws InputError when x does not belong to this group.
  void check(const WreathElement& x) const;

  /// Σ in order: δ first, then the generators of B as listed.
  std::vector<WreathElement> sigma() const;
  std::vector<std::string> sigma_names() const;
  std::string format(const WreathElement& x) const;

 private:
  FiniteGroupTable q_, b_;
  std::vector<Element> proj_;
  std::size_t words_ = 0;
};

struct WreathCayley {
  LabeledGraph graph;
  std::vector<WreathElement> elements;  // BFS order from the identity
  std::unordered_map<WreathElement, Vertex, WreathElementHash> index;
  bool complete = false;  // the whole group was enumerated
};

struct WreathCayleyOptions {
  std::optional<std::size_t> radius;  // nullopt: the whole group
  std::size_t vertex_cap = std::size_t{1} << 20;
};

/// Right Cayley graph on Σ (or the ball of the given radius about the
/// identity, as an induced subgraph). Vertices are numbered in BFS order,
/// neighbours explored in Σ order; δ is an involution and gives one edge per
/// pair. Throws CapExceeded when more than vertex_cap vertices are needed.
WreathCayley wreath_cayley(const WreathGroup& w, const WreathCayleyOptions& options = {});

/// The whole group as a table, numbered as in wreath_cayley, with Σ as the
/// generating set. Throws CapExceeded above `order_cap` elements.
FiniteGroupTable wreath_table(const WreathGroup& w, std::size_t order_cap = 4096);

/// X = {(δ_g, 1_B) : g ∈ Q}, in the order of Q.
std::vector<WreathElement> x_subset(const WreathGroup& w);

struct SubwreathEmbedding {
  std::vector<WreathElement> domain;  // every element of the small group
  std::vector<WreathElement> image;
};

/// Small = ℤ/2 ≀_{L'} L, big = ℤ/2 ≀_{K'} K with proj π. `inclusion` maps L
/// into K and must carry Cay(L,U) into Cay(K,V); `f` is defined on π(inclusion(L))
/// (other entries kNoElement), is a bijection onto L', and f∘π∘inclusion must be
/// the small group's projection. Maps (φ,l) ↦ (Φ, inclusion(l)) with
/// Φ(k') = φ(f(k')) on π(inclusion(L)) and 0 elsewhere. Throws InputError when a
/// hypothesis fails.
inline constexpr Element kNoElement = 0xffffffffu;
SubwreathEmbedding subwreath_embed(const WreathGroup& small, const WreathGroup& big,
                                   const std::vector<Element>& inclusion, const std::vector<Element>& f,
                                   std::size_t vertex_cap = std::size_t{1} << 20);

/// True iff `map` is injective and sends every edge of `small` to a pair of
/// adjacent vertices of `big`.
bool verify_subgraph_embedding(const std::vector<Vertex>& map, const LabeledGraph& small, const LabeledGraph& big);

}  // namespace coarse
