#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coarse/labeled_graph.hpp"

namespace coarse {

/// Positive rational number num/den in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  /// Parses "a/b" or "a". Throws InputError on malformed text or a zero denominator.
  static Rational parse(const std::string& text);
  Rational(std::uint64_t n = 0, std::uint64_t d = 1);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  /// True iff length < this·girth, in exact arithmetic.
  bool strictly_below(std::size_t length, std::size_t girth) const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct ReducedCheck {
  bool reduced = true;
  Vertex vertex = 0;          // offending vertex when not reduced
  DartId first = 0, second = 0;  // two outgoing darts sharing a label
};

/// Outgoing darts at every vertex carry pairwise distinct labels.
/// Throws InputError when a dart is unlabeled.
ReducedCheck check_reduced(const LabeledGraph& g);

struct PieceOccurrence {
  std::size_t component = 0;
  Vertex start = 0;
  std::vector<DartId> darts;

  friend bool operator==(const PieceOccurrence&, const PieceOccurrence&) = default;
};

struct Piece {
  Word word;  // the lexicographically smaller of the word and its inverse
  std::vector<PieceOccurrence> occurrences;
  /// True when the search stopped at the length bound, so longer extensions
  /// were not examined.
  bool at_length_bound = false;

  std::size_t length() const { return word.size(); }
};

struct PieceOptions {
  std::size_t dart_cap = 2000;
  /// Longest word examined; pieces of this length are reported with
  /// at_length_bound set. 0 means the total edge count of the family.
  std::size_t max_length = 0;
};

/// For every vertex of every component, the index of its class under
/// label-preserving isomorphisms of pointed components. Two starts of the same
/// label word are essentially distinct iff their classes differ.
std::vector<std::vector<std::uint32_t>> pointed_isomorphism_classes(const GraphFamily& fam);

/// All maximal pieces, sorted by (length descending, word). Requires a reduced
/// labeling; throws CapExceeded above the dart cap.
std::vector<Piece> enumerate_pieces(const GraphFamily& fam, const PieceOptions& options = {});

struct SmallCancellationReport {
  Rational lambda;
  std::vector<std::optional<std::size_t>> girth;  // nullopt = acyclic
  /// Longest piece meeting each component (0 when none), searched up to the
  /// length that decides the condition.
  std::vector<std::size_t> max_piece_length;
  std::vector<bool> component_pass;
  bool reduced = true;
  bool pass = true;
};

/// C'(λ): a reduced labeling in which every piece meeting a component is
/// strictly shorter than λ times the girth of that component.
SmallCancellationReport check_small_cancellation(const GraphFamily& fam, Rational lambda,
                                                 const PieceOptions& options = {});

struct RandomLabelingResult {
  bool success = false;
  std::size_t attempts = 0;
  std::size_t reduced_attempts = 0;  // samples that passed check_reduced
  GraphFamily family;                // the accepted labeling when success
  std::optional<SmallCancellationReport> report;
};

/// Rejection sampling: every edge gets an independent uniform symbol and
/// orientation; the first sample that is reduced and C'(λ) is returned.
/// Throws InputError unless λ·girth > 1 for every component with a cycle.
RandomLabelingResult random_labeling(const GraphFamily& fam, std::size_t alphabet_size, Rational lambda,
                                     std::uint64_t seed, std::size_t max_attempts,
                                     const PieceOptions& options = {});

}  // namespace coarse
