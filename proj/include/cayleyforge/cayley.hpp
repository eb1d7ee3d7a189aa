#pragma once

// Finite balls of right and left Cayley graphs of a monoid given by a
// complete length-reducing rewriting system. Since every rule shortens words,
// the length of a normal form is its directed distance from the identity, so
// the ball of radius L is exactly the set of normal forms of length <= L.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayleyforge/rewriting.hpp"

namespace cayleyforge {

enum class Side { right, left };
enum class FrontierPolicy { closed, with_frontier };

std::string_view to_string(Side side) noexcept;
std::string_view to_string(FrontierPolicy policy) noexcept;
Side parse_side(std::string_view text);
FrontierPolicy parse_policy(std::string_view text);

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  Symbol generator = 0;

  auto operator<=>(Edge const&) const = default;
};

// An edge whose target lies outside the ball.
struct FrontierTarget {
  std::size_t src = 0;
  Symbol generator = 0;
  Word target;

  bool operator==(FrontierTarget const&) const = default;
};

struct CayleyBall {
  Side side = Side::right;
  std::size_t radius = 0;
  FrontierPolicy policy = FrontierPolicy::closed;
  Alphabet alphabet;
  std::vector<Word> vertices;  // shortlex order, vertices[0] is the empty word
  std::vector<Edge> edges;     // ordered by (src, generator)
  std::vector<FrontierTarget> frontier;

  std::optional<std::size_t> index_of(std::span<Symbol const> w) const;

  bool operator==(CayleyBall const&) const = default;
};

struct Arc {
  std::size_t src = 0;
  std::size_t dst = 0;

  auto operator<=>(Arc const&) const = default;
};

// Directed multigraph on 0..n-1. Arcs are kept sorted.
struct UnlabelledDigraph {
  std::size_t n = 0;
  std::vector<Arc> arcs;

  bool operator==(UnlabelledDigraph const&) const = default;
};

// normal_form(v g) for the right graph, normal_form(g v) for the left one.
Word edge_target(RewritingSystem const& system, std::span<Symbol const> v, Symbol g, Side side);

// Throws ContractError when the system has not been certified complete.
CayleyBall build_ball(RewritingSystem const& system, Side side, std::size_t radius,
                      FrontierPolicy policy = FrontierPolicy::closed);

UnlabelledDigraph strip_labels(CayleyBall const& ball);

struct DegreePair {
  std::size_t in = 0;
  std::size_t out = 0;

  auto operator<=>(DegreePair const&) const = default;
};

// A vertex's own degrees plus the sorted degree pairs of its successors and
// predecessors (one entry per arc).
struct TwoStepProfile {
  DegreePair self;
  std::vector<DegreePair> successors;
  std::vector<DegreePair> predecessors;

  auto operator<=>(TwoStepProfile const&) const = default;
};

// Isomorphism invariants; all multisets are stored sorted.
struct Fingerprint {
  std::size_t vertices = 0;
  std::size_t arcs = 0;
  std::vector<DegreePair> degrees;
  std::vector<TwoStepProfile> profiles;

  bool operator==(Fingerprint const&) const = default;
};

Fingerprint graph_invariants(UnlabelledDigraph const& g);

// Name of the first invariant on which the fingerprints differ, in the order
// "vertex count", "arc count", "in/out degree pairs", "two-step degree
// profile"; nullopt when they agree.
std::optional<std::string> first_difference(Fingerprint const& lhs, Fingerprint const& rhs);

std::string export_dot(CayleyBall const& ball);
std::string export_dot(UnlabelledDigraph const& g);

// {"side","radius","policy","alphabet","vertices":[...],"edges":[[src,dst,"g"],...],
//  "frontier":[[src,"g","target"],...]}
std::string export_json(CayleyBall const& ball);
// {"n":..,"arcs":[[src,dst],...]}
std::string export_json(UnlabelledDigraph const& g);

// Throw InputError on malformed documents.
CayleyBall import_ball_json(std::string_view text);
// Accepts either schema; a ball document is stripped of its labels.
UnlabelledDigraph import_digraph_json(std::string_view text);

}  // namespace cayleyforge
