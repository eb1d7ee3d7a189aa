#pragma once

// Text format for presentations:
//
//   # comment
//   alphabet a b
//   rule a b{n} a -> a b a where n >= 2
//   rule c d d c -> c d c
//
// Symbols are single characters separated by whitespace. A token x{k} with a
// numeric k is shorthand for k copies of x; x{var} introduces the (single)
// exponent variable of a schema and requires a matching `where var >= m`.

#include <string>
#include <string_view>

#include "cayleyforge/rewriting.hpp"

namespace cayleyforge {

// Throws ParseError on malformed input or a rule that is not length-reducing.
RewritingSystem parse_presentation(std::string_view text);

// Inverse of parse_presentation up to whitespace and comments.
std::string format_presentation(RewritingSystem const& system);

// "builtin:M", "builtin:N" (also bare "M", "N") or a path to a presentation
// file. Builtins come back certified; files are returned as parsed.
RewritingSystem load_presentation(std::string const& name_or_path);

}  // namespace cayleyforge
