#pragma once

// The two monoids
//
//   M = < a, b | a b^n a = a b a  (n >= 2) >
//   N = < c, d | c d c = c d^2 c = c d^4 = c d^3 c^2 = c d^3 c d c >
//
// their complete rewriting systems, structured normal forms, and the
// length-preserving bijection f between the normal-form sets that induces an
// isomorphism of the unlabelled right Cayley graphs.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cayleyforge/rewriting.hpp"

namespace cayleyforge {

// Symbol ids of the builtin alphabets "ab" and "cd".
inline constexpr Symbol kA = 0;
inline constexpr Symbol kB = 1;
inline constexpr Symbol kC = 0;
inline constexpr Symbol kD = 1;

// a b^n a -> a b a for n >= 2, as a single schema. Certified at the default
// schema bound.
RewritingSystem system_M();

// The four rules c d^2 c, c d^4, c d^3 c^2, c d^3 c d c -> c d c. Certified.
RewritingSystem system_N();

// a b^n a -> a b a for n = 2..n0 only, as concrete rules. Not certified.
// Throws InputError for n0 < 2.
RewritingSystem truncated_system_M(std::size_t n0);

enum class ClassM { NFM1, NFM2, NFM3 };
enum class ClassN { NFN1, NFN2, NFN3 };

std::string_view to_string(ClassM c) noexcept;
std::string_view to_string(ClassN c) noexcept;

// b^s (NFM1), b^s u (NFM2) or b^s u b^t with t > 0 (NFM3), u in U_M.
struct NormalFormM {
  ClassM tag = ClassM::NFM1;
  std::size_t s = 0;
  Word u;
  std::size_t t = 0;

  bool operator==(NormalFormM const&) const = default;
};

// d^p (NFN1), d^p v (NFN2) or d^p v (d^3 c)^q d^r with 0 <= r <= 3, q + r > 0
// (NFN3), v in U_N.
struct NormalFormN {
  ClassN tag = ClassN::NFN1;
  std::size_t p = 0;
  Word v;
  std::size_t q = 0;
  std::size_t r = 0;

  bool operator==(NormalFormN const&) const = default;
};

// a^{i_0} b a^{i_1} b ... b a^{i_k}, all i_j >= 1.
bool in_U_M(std::span<Symbol const> w) noexcept;
// c^{i_0} d c^{i_1} d ... d c^{i_k}, all i_j >= 1.
bool in_U_N(std::span<Symbol const> w) noexcept;

// Throw ClassificationError on reducible input, InputError on foreign symbols.
NormalFormM classify_M(std::span<Symbol const> w);
NormalFormN classify_N(std::span<Symbol const> w);

Word assemble(NormalFormM const& nf);
Word assemble(NormalFormN const& nf);

// Letter substitution a -> c, b -> d and its inverse.
Word bar(std::span<Symbol const> u);
Word bar_inverse(std::span<Symbol const> v);

// b^s u b^t -> d^s bar(u) (d^3 c)^q d^r with t = 4q + r, 0 <= r <= 3.
Word map_f(std::span<Symbol const> w);
Word map_f_inverse(std::span<Symbol const> w);

// All irreducible words of length <= max_len in shortlex order, grown one
// letter at a time from irreducible parents.
std::vector<Word> enumerate_normal_forms(RewritingSystem const& system, std::size_t max_len);

// Edge tables: the type label of the edge leaving normal form w along
// generator g, and its target as given by the closed formula for that type
// (no rewriting involved). Labels are "NFM1a".."NFM3b" and "NFN1c".."NFN3d".
struct TableEdge {
  std::string label;
  Word target;
};

TableEdge table_edge_M(std::span<Symbol const> w, Symbol g);
TableEdge table_edge_N(std::span<Symbol const> w, Symbol g);

// Edge type of the image under f (resp. f^-1) of an edge of the given type
// leaving a vertex whose trailing exponent has residue r = t mod 4 (resp. the
// NFN3 parameter r). r is ignored for types that do not split on it.
std::string_view image_edge_type_M_to_N(std::string_view label_m, std::size_t r);
std::string_view image_edge_type_N_to_M(std::string_view label_n, std::size_t r);

}  // namespace cayleyforge
