#pragma once

// Isomorphism checks between unlabelled Cayley balls: the explicit map f
// between the right balls of M and N, an independent backtracking search for
// arbitrary digraphs, and separation of the left balls by invariants.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayleyforge/cayley.hpp"

namespace cayleyforge {

inline constexpr std::size_t kDefaultSearchBudget = 10'000'000;

struct IsoCertificate {
  std::vector<std::size_t> mapping;  // vertex of g1 -> vertex of g2
};

// Checks from scratch that mapping is a bijection carrying the arc multiset of
// g1 exactly onto that of g2.
bool validate_certificate(UnlabelledDigraph const& g1, UnlabelledDigraph const& g2,
                          std::vector<std::size_t> const& mapping);

enum class IsoStatus { verified, counterexample };

std::string_view to_string(IsoStatus s) noexcept;

struct IsoWitness {
  // "vertex", "arc" or "edge-type"
  std::string kind;
  // "forward" (M to N) or "backward" (N to M)
  std::string direction;
  Arc arc;
  std::string detail;

  bool operator==(IsoWitness const&) const = default;
};

struct IsoReport {
  IsoStatus status = IsoStatus::verified;
  std::optional<IsoWitness> witness;
  std::vector<std::size_t> mapping;  // ballM index -> ballN index
  std::size_t vertices_checked = 0;
  std::size_t arcs_checked_forward = 0;
  std::size_t arcs_checked_backward = 0;
  // (edge type in M, edge type of its image in N) -> count
  std::map<std::pair<std::string, std::string>, std::size_t> edge_types;

  bool operator==(IsoReport const&) const = default;
};

// Both balls must be closed, right-sided and of equal radius (InputError
// otherwise); ball_m over {a, b} for M and ball_n over {c, d} for N. Checks
// that f is a bijection of vertex sets, maps every arc of ball_m onto an arc of
// ball_n and f^-1 maps every arc of ball_n back, and that each image edge has
// the type predicted by the edge tables.
IsoReport verify_explicit_iso(CayleyBall const& ball_m, CayleyBall const& ball_n);

enum class SearchStatus { found, none, indeterminate };

std::string_view to_string(SearchStatus s) noexcept;

struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<IsoCertificate> certificate;
  std::size_t expansions = 0;
  std::string reason;
};

// Backtracking search over a stable colour refinement of both graphs.
// `budget` caps candidate expansions; hitting it yields indeterminate, never
// none.
SearchResult find_isomorphism(UnlabelledDigraph const& g1, UnlabelledDigraph const& g2,
                              std::size_t budget = kDefaultSearchBudget);

struct SeparationStep {
  std::size_t radius = 0;
  std::size_t vertices = 0;
  std::size_t arcs_first = 0;
  std::size_t arcs_second = 0;
  std::optional<std::string> invariant;  // set when fingerprints differ
  std::optional<SearchStatus> search;    // set when the search was run
};

struct SeparationReport {
  bool separated = false;
  std::optional<std::size_t> radius;
  std::string invariant;
  std::vector<SeparationStep> steps;
};

// Compares closed left balls of the two systems at radius 1, 2, ...,
// max_radius, stopping at the first radius where fingerprints differ or the
// search proves non-isomorphism. A separation is a statement about the balls.
SeparationReport separate_left_graphs(RewritingSystem const& first, RewritingSystem const& second,
                                      std::size_t max_radius,
                                      std::size_t budget = kDefaultSearchBudget);

// M against N.
SeparationReport separate_left_graphs(std::size_t max_radius,
                                      std::size_t budget = kDefaultSearchBudget);

}  // namespace cayleyforge
