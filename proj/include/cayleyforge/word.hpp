#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayleyforge {

// Index of a generator in its Alphabet.
using Symbol = std::uint8_t;

// A word over some alphabet; the empty vector is the empty word.
using Word = std::vector<Symbol>;

// Ordered set of single-character generator names. The position of a character
// is its Symbol id, so the alphabet order fixes shortlex order everywhere.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view letters);

  std::size_t size() const noexcept { return _letters.size(); }
  bool contains(Symbol s) const noexcept { return s < _letters.size(); }
  char letter(Symbol s) const;
  std::string const& letters() const noexcept { return _letters; }

  // Throws InputError when c is not a generator.
  Symbol symbol(char c) const;

  // Parses a string of generator characters. Spaces are ignored so both
  // "abba" and "a b b a" are accepted.
  Word parse(std::string_view text) const;
  std::string render(std::span<Symbol const> w) const;

  bool operator==(Alphabet const&) const = default;

 private:
  std::string _letters;
};

// Length first, then lexicographic by symbol id.
bool shortlex_less(std::span<Symbol const> lhs, std::span<Symbol const> rhs) noexcept;

struct ShortlexLess {
  bool operator()(Word const& lhs, Word const& rhs) const noexcept {
    return shortlex_less(lhs, rhs);
  }
};

// w = x^n
inline Word power(Symbol x, std::size_t n) { return Word(n, x); }

inline Word concat(std::span<Symbol const> lhs, std::span<Symbol const> rhs) {
  Word out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

inline bool is_factor_at(std::span<Symbol const> w, std::size_t pos,
                         std::span<Symbol const> factor) noexcept {
  if (pos > w.size() || w.size() - pos < factor.size()) {
    return false;
  }
  for (std::size_t i = 0; i < factor.size(); ++i) {
    if (w[pos + i] != factor[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace cayleyforge
