#pragma once

// Critical pairs and local confluence for length-reducing systems. Schemas are
// instantiated up to a caller-supplied exponent bound, so certificates for
// systems with schemas are bounded.

#include <cstddef>
#include <optional>
#include <vector>

#include "cayleyforge/rewriting.hpp"

namespace cayleyforge {

inline constexpr std::size_t kDefaultSchemaBound = 12;

enum class OverlapKind { overlap, containment };

// One instantiated rule: index into the system plus the exponent for schemas.
struct RuleInstance {
  std::size_t rule_index = 0;
  std::optional<std::size_t> exponent;
  RewriteRule rule;
};

// Concrete rules, then every schema instantiated at min_exponent..schema_bound.
std::vector<RuleInstance> instantiate_rules(RewritingSystem const& system,
                                            std::size_t schema_bound);

struct CriticalPair {
  Word source;
  Word left_result;   // first rule applied
  Word right_result;  // second rule applied
  OverlapKind kind = OverlapKind::overlap;
  // Indices into CriticalPairSet::instances.
  std::size_t first = 0;
  std::size_t second = 0;
  // Length of the shared factor for overlaps; offset of the inner rule for
  // containments.
  std::size_t offset = 0;
};

struct CriticalPairSet {
  std::vector<RuleInstance> instances;
  std::vector<CriticalPair> pairs;
};

// Case 1: the lhs of `first` ends with a nonempty proper prefix of the lhs of
// `second`. Case 2: the lhs of `second` occurs inside the lhs of a different
// `first`. Throws InputError when schema_bound is below some min_exponent.
CriticalPairSet critical_pairs(RewritingSystem const& system,
                               std::size_t schema_bound = kDefaultSchemaBound);

struct PairResolution {
  std::size_t pair_index = 0;
  Word left_normal_form;
  Word right_normal_form;
  bool joined() const { return left_normal_form == right_normal_form; }
};

// Word of shape x y x y x with x != y.
bool has_xyxyx_shape(std::span<Symbol const> w) noexcept;

struct ConfluenceReport {
  bool passed = false;
  bool length_reducing = false;
  std::size_t schema_bound = 0;
  bool bounded = false;  // true when the system has schemas
  std::size_t overlap_count = 0;
  std::size_t containment_count = 0;
  // Overlap pairs whose common normal form has the shape x y x y x.
  std::size_t xyxyx_overlaps = 0;
  CriticalPairSet critical;
  std::vector<PairResolution> resolutions;  // one per critical pair
  std::vector<std::size_t> failures;        // indices into resolutions
};

// Reduces both results of every critical pair to normal form and checks they
// coincide. A non-length-reducing system fails without inspecting pairs.
ConfluenceReport check_local_confluence(RewritingSystem const& system,
                                        std::size_t schema_bound = kDefaultSchemaBound);


// Returns a copy of `system` flagged as complete, or throws ContractError
// naming the first failing check.
RewritingSystem certify_complete(RewritingSystem system,
                                 std::size_t schema_bound = kDefaultSchemaBound);

}  // namespace cayleyforge
