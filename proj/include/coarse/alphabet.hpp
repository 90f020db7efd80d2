#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coarse {

/// A letter of S ∪ S⁻¹: symbol index plus an inversion bit. The formal
/// inverse of a letter is obtained by flipping the low bit of its code.
class Letter {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  constexpr Letter() = default;
  constexpr Letter(std::uint32_t symbol, bool inverted) : code_(2 * symbol + (inverted ? 1u : 0u)) {}

  static constexpr Letter from_code(std::uint32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }
  static constexpr Letter none() { return Letter{}; }

  constexpr bool is_none() const { return code_ == kNone; }
  constexpr std::uint32_t code() const { return code_; }
  constexpr std::uint32_t symbol() const { return code_ >> 1; }
  constexpr bool inverted() const { return (code_ & 1u) != 0; }
  constexpr Letter inverse() const { return is_none() ? *this : from_code(code_ ^ 1u); }

  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint32_t code_ = kNone;
};

using Word = std::vector<Letter>;

/// Formal inverse: reverse and invert every letter.
Word inverse_word(const Word& w);
/// Cancels adjacent x x⁻¹ pairs until none remain.
Word freely_reduce(const Word& w);
/// Free reduction followed by removal of matching first/last letter pairs.
Word cyclically_reduce(const Word& w);
/// True iff u and v are equal after cyclic reduction up to rotation and inversion.
bool cyclically_equivalent(const Word& u, const Word& v);

/// Ordered set of symbols S. Inverses are formal and never stored.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// Alphabet {a, b, c, ...} of the given size (falls back to s0, s1, ... past 26).
  static Alphabet letters(std::size_t size);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t symbol) const { return names_.at(symbol); }

  /// Symbol index or -1.
  long find(std::string_view name) const;
  bool contains(Letter l) const { return !l.is_none() && l.symbol() < names_.size(); }

  std::string format(Letter l) const;
  /// Space-separated tokens, inverse letters suffixed with "^-1".
  std::string format(const Word& w) const;
  /// Accepts the format() output. When every symbol is a single lowercase
  /// character a compact form is also accepted, with uppercase for inverses:
  /// "abAB" is a b a^-1 b^-1.
  Word parse(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace coarse
