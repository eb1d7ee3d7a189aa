#pragma once

#include <string>

#include "cayleyforge/presentations.hpp"
#include "cayleyforge/rewriting.hpp"

namespace testing {

inline cayleyforge::Word M(std::string const& s) {
  return cayleyforge::Alphabet("ab").parse(s);
}

inline cayleyforge::Word N(std::string const& s) {
  return cayleyforge::Alphabet("cd").parse(s);
}

inline std::string strM(cayleyforge::Word const& w) {
  return cayleyforge::Alphabet("ab").render(w);
}

inline std::string strN(cayleyforge::Word const& w) {
  return cayleyforge::Alphabet("cd").render(w);
}

}  // namespace testing
