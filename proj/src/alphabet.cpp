#include "coarse/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "coarse/errors.hpp"

namespace coarse {

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = l.inverse();
  return out;
}

Word freely_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word cyclically_reduce(const Word& w) {
  Word r = freely_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

bool cyclically_equivalent(const Word& u, const Word& v) {
  const Word a = cyclically_reduce(u);
  const Word b = cyclically_reduce(v);
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (const Word& target : {b, inverse_word(b)}) {
    Word doubled = target;
    doubled.insert(doubled.end(), target.begin(), target.end());
    for (std::size_t s = 0; s < a.size(); ++s)
      if (std::equal(a.begin(), a.end(), doubled.begin() + static_cast<long>(s))) return true;
  }
  return false;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InputError("alphabet: empty symbol name");
    if (n.find_first_of(" \t\n^") != std::string::npos)
      throw InputError("alphabet: symbol '" + n + "' contains a reserved character");
    if (!seen.insert(n).second) throw InputError("alphabet: duplicate symbol '" + n + "'");
  }
}

Alphabet Alphabet::letters(std::size_t size) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i)
    names.push_back(size <= 26 ? std::string(1, static_cast<char>('a' + i)) : "s" + std::to_string(i));
  return Alphabet(std::move(names));
}

long Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<long>(i);
  return -1;
}

std::string Alphabet::format(Letter l) const {
  if (l.is_none()) return "?";
  std::string s = l.symbol() < names_.size() ? names_[l.symbol()] : "#" + std::to_string(l.symbol());
  return l.inverted() ? s + "^-1" : s;
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += format(w[i]);
  }
  return out;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  const bool compact_ok = std::all_of(names_.begin(), names_.end(), [](const std::string& n) {
    return n.size() == 1 && std::islower(static_cast<unsigned char>(n[0]));
  });
  const bool has_space = text.find(' ') != std::string_view::npos;
  if (compact_ok && !has_space && text.find('^') == std::string_view::npos) {
    for (char c : text) {
      const bool inv = std::isupper(static_cast<unsigned char>(c)) != 0;
      const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      long s = find(std::string_view(&lower, 1));
      if (s < 0) throw InputError(std::string("word: unknown symbol '") + c + "'");
      out.emplace_back(static_cast<std::uint32_t>(s), inv);
    }
    return out;
  }
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    long s = find(tok);
    if (s < 0) throw InputError("word: unknown symbol '" + tok + "'");
    out.emplace_back(static_cast<std::uint32_t>(s), inv);
  }
  return out;
}

}  // namespace coarse
