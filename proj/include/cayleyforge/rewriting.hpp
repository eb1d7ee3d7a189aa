#pragma once

// String rewriting over a finite alphabet: concrete rules, one-exponent rule
// schemas, matching, reduction to normal form and the length-reducing check
// that guarantees termination.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cayleyforge/word.hpp"

namespace cayleyforge {

struct RewriteRule {
  Word lhs;
  Word rhs;

  bool operator==(RewriteRule const&) const = default;
};

// Infinite family prefix . pumped^n . suffix -> rhs for every n >= min_exponent.
struct RuleSchema {
  Word prefix;
  Symbol pumped = 0;
  std::size_t min_exponent = 1;
  Word suffix;
  Word rhs;

  // The concrete rule for exponent n; n must be >= min_exponent.
  RewriteRule instance(std::size_t n) const;
  std::size_t min_lhs_length() const noexcept {
    return prefix.size() + min_exponent + suffix.size();
  }

  bool operator==(RuleSchema const&) const = default;
};

class RewritingSystem {
 public:
  RewritingSystem() = default;
  // Throws InputError if a rule mentions a symbol outside the alphabet, has an
  // empty left-hand side, or a schema has min_exponent == 0.
  RewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                  std::vector<RuleSchema> schemas = {});

  Alphabet const& alphabet() const noexcept { return _alphabet; }
  std::vector<RewriteRule> const& rules() const noexcept { return _rules; }
  std::vector<RuleSchema> const& schemas() const noexcept { return _schemas; }

  // Rules are numbered first, then schemas.
  std::size_t rule_count() const noexcept { return _rules.size() + _schemas.size(); }
  bool is_schema(std::size_t rule_index) const noexcept { return rule_index >= _rules.size(); }
  RuleSchema const& schema(std::size_t rule_index) const { return _schemas.at(rule_index - _rules.size()); }

  bool is_length_reducing() const noexcept { return _length_reducing; }

  // Set when certify_complete() has verified bounded local confluence. The
  // value is the schema bound used for that certificate.
  std::optional<std::size_t> certified_bound() const noexcept { return _certified_bound; }
  bool is_certified() const noexcept { return _certified_bound.has_value(); }

  // "c d d c -> c d c" style, schemas as "a b{n} a -> a b a where n >= 2".
  std::string describe_rule(std::size_t rule_index) const;

  bool operator==(RewritingSystem const&) const = default;

 private:
  friend RewritingSystem certify_complete(RewritingSystem, std::size_t);

  Alphabet _alphabet;
  std::vector<RewriteRule> _rules;
  std::vector<RuleSchema> _schemas;
  bool _length_reducing = true;
  std::optional<std::size_t> _certified_bound;
};

struct Match {
  std::size_t rule_index = 0;
  std::size_t position = 0;
  std::size_t matched_length = 0;
  // Only set for schema matches.
  std::optional<std::size_t> exponent;

  bool operator==(Match const&) const = default;
};

// Throws InputError if w contains a symbol outside the system's alphabet.
void check_word(RewritingSystem const& system, std::span<Symbol const> w);

// Every match in w ordered by (position, rule index). A schema contributes at
// most one match per position, using the largest exponent that fits.
std::vector<Match> find_matches(RewritingSystem const& system, std::span<Symbol const> w);

// The first element of find_matches, without computing the rest.
std::optional<Match> first_match(RewritingSystem const& system, std::span<Symbol const> w);

Word apply_match(RewritingSystem const& system, std::span<Symbol const> w, Match const& m);

std::optional<Word> single_step(RewritingSystem const& system, std::span<Symbol const> w);

bool is_irreducible(RewritingSystem const& system, std::span<Symbol const> w);

struct ReductionStep {
  Match match;
  Word result;
};

// Leftmost-first reduction to an irreducible word. Throws ContractError when
// the system is not length-reducing.
Word normal_form(RewritingSystem const& system, std::span<Symbol const> w);
std::vector<ReductionStep> reduce_with_trace(RewritingSystem const& system,
                                             std::span<Symbol const> w);

struct LengthReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::size_t> failing;
};

LengthReport check_length_reducing(RewritingSystem const& system);

// Equality in the presented monoid. Requires a certified system.
bool words_equal(RewritingSystem const& system, std::span<Symbol const> lhs,
                 std::span<Symbol const> rhs);

}  // namespace cayleyforge
