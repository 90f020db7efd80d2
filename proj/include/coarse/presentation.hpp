#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coarse/covering.hpp"
#include "coarse/group_table.hpp"
#include "coarse/labeled_graph.hpp"

namespace coarse {

struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
  /// relator_component[i] is the component whose cycle gave relators[i].
  std::vector<std::size_t> relator_component;
};

/// A finite group together with the image of each symbol of an alphabet.
struct Quotient {
  FiniteGroupTable group;
  std::vector<Element> image;  // one entry per symbol

  /// Left-to-right product; an inverse letter contributes inv(image).
  /// Throws InputError on a symbol without image.
  Element evaluate(const Word& w) const;
};

/// Normal closure of the given elements in a finite group, as a membership table.
std::vector<bool> normal_closure(const FiniteGroupTable& group, const std::vector<Element>& elements);

struct PresentationOptions {
  std::size_t rank_cap = 100000;          // cycle rank per component
  std::size_t simple_cycle_edge_limit = 12;
};

struct SimpleCycleCheck {
  std::size_t component = 0;
  std::size_t cycles = 0;        // simple closed paths enumerated (one per cycle)
  std::size_t quotient_failures = 0;
};

struct PresentationResult {
  Presentation presentation;
  std::vector<SimpleCycleCheck> simple_cycle_checks;  // components with few edges only
  bool pass = true;
};

/// Relators are the freely reduced labels of the fundamental cycles of a BFS
/// spanning tree of each component, read from its root. Components with at
/// most `simple_cycle_edge_limit` edges additionally have every simple closed
/// path checked to lie in the normal closure of those relators inside each
/// supplied quotient. Requires a reduced labeling.
PresentationResult graphical_presentation(const GraphFamily& fam, const std::vector<Quotient>& quotients = {},
                                          const PresentationOptions& options = {});

/// Labels of all simple cycles of g, one closed path per cycle (either direction).
std::vector<Word> simple_cycle_labels(const LabeledGraph& g);

struct CosetOptions {
  std::size_t max_cosets = std::size_t{1} << 21;
};

/// Index of the subgroup generated by `subgroup` in ⟨alphabet | relators⟩, by
/// Hasse–Lingstrom–Todd–Coxeter coset enumeration. With no subgroup words it
/// is the group order. Throws CapExceeded when the coset table outgrows the cap.
std::size_t coset_enumeration(std::size_t symbols, const std::vector<Word>& relators,
                              const std::vector<Word>& subgroup = {}, const CosetOptions& options = {});

/// Same alphabets, dart labels preserved through dart_map, and a bijection on
/// every vertex star. Throws InputError when the alphabets differ.
bool check_label_preserving_cover(const CoveringMap& cm);

struct SurjectionQuotientReport {
  bool base_relators_trivial = true;   // false: not a quotient of the base group
  bool cover_relators_trivial = true;
  std::optional<Word> failing_relator;
};

struct SurjectionReport {
  std::vector<SurjectionQuotientReport> quotients;
  bool pass = true;
};

/// For each quotient of the base group, every relator of the cover's graphical
/// presentation evaluates to the identity. A supplied group in which a base
/// relator is nontrivial is not a quotient of the base group and fails the check.
SurjectionReport verify_cover_surjection(const CoveringMap& cm, const std::vector<Quotient>& quotients);

}  // namespace coarse
