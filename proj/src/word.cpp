#include "cayleyforge/word.hpp"

#include <algorithm>

#include "cayleyforge/errors.hpp"

namespace cayleyforge {

Alphabet::Alphabet(std::string_view letters) : _letters(letters) {
  if (_letters.size() > 255) {
    throw InputError("alphabet has more than 255 generators");
  }
  for (std::size_t i = 0; i < _letters.size(); ++i) {
    char const c = _letters[i];
    if (c == ' ' || c == '\t' || c == '{' || c == '}' || c == '#') {
      throw InputError(std::string("invalid generator character '") + c + "'");
    }
    if (_letters.find(c, i + 1) != std::string::npos) {
      throw InputError(std::string("duplicate generator '") + c + "'");
    }
  }
}

char Alphabet::letter(Symbol s) const {
  if (!contains(s)) {
    throw InputError("symbol id " + std::to_string(s) + " outside alphabet of size "
                     + std::to_string(size()));
  }
  return _letters[s];
}

Symbol Alphabet::symbol(char c) const {
  auto const pos = _letters.find(c);
  if (pos == std::string::npos) {
    throw InputError(std::string("symbol '") + c + "' is not in alphabet {" + _letters + "}");
  }
  return static_cast<Symbol>(pos);
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c == ' ') {
      continue;
    }
    w.push_back(symbol(c));
  }
  return w;
}

std::string Alphabet::render(std::span<Symbol const> w) const {
  std::string out;
  out.reserve(w.size());
  for (Symbol s : w) {
    out.push_back(letter(s));
  }
  return out;
}

bool shortlex_less(std::span<Symbol const> lhs, std::span<Symbol const> rhs) noexcept {
  if (lhs.size() != rhs.size()) {
    return lhs.size() < rhs.size();
  }
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

}  // namespace cayleyforge
