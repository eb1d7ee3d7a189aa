#include "cayleyforge/rewriting.hpp"

#include <algorithm>

#include "cayleyforge/errors.hpp"

namespace cayleyforge {

namespace {

void check_symbols(Alphabet const& alphabet, std::span<Symbol const> w, char const* what) {
  for (Symbol s : w) {
    if (!alphabet.contains(s)) {
      throw InputError(std::string(what) + " uses symbol id " + std::to_string(s)
                       + " outside alphabet {" + alphabet.letters() + "}");
    }
  }
}

std::string spaced(Alphabet const& alphabet, std::span<Symbol const> w) {
  std::string out;
  for (Symbol s : w) {
    if (!out.empty()) {
      out.push_back(' ');
    }
    out.push_back(alphabet.letter(s));
  }
  return out;
}

// Largest n >= min_exponent with prefix . pumped^n . suffix occurring at pos.
std::optional<std::size_t> schema_exponent_at(RuleSchema const& schema,
                                              std::span<Symbol const> w, std::size_t pos) {
  if (!is_factor_at(w, pos, schema.prefix)) {
    return std::nullopt;
  }
  std::size_t const start = pos + schema.prefix.size();
  std::size_t run = 0;
  while (start + run < w.size() && w[start + run] == schema.pumped) {
    ++run;
  }
  for (std::size_t n = run; n >= schema.min_exponent; --n) {
    if (is_factor_at(w, start + n, schema.suffix)) {
      return n;
    }
  }
  return std::nullopt;
}

std::optional<Match> match_at(RewritingSystem const& system, std::span<Symbol const> w,
                              std::size_t pos, std::size_t rule_index) {
  if (!system.is_schema(rule_index)) {
    auto const& rule = system.rules()[rule_index];
    if (is_factor_at(w, pos, rule.lhs)) {
      return Match{rule_index, pos, rule.lhs.size(), std::nullopt};
    }
    return std::nullopt;
  }
  auto const& schema = system.schema(rule_index);
  if (auto n = schema_exponent_at(schema, w, pos)) {
    return Match{rule_index, pos, schema.prefix.size() + *n + schema.suffix.size(), n};
  }
  return std::nullopt;
}

}  // namespace

RewriteRule RuleSchema::instance(std::size_t n) const {
  if (n < min_exponent) {
    throw InputError("schema exponent " + std::to_string(n) + " below minimum "
                     + std::to_string(min_exponent));
  }
  RewriteRule rule;
  rule.lhs = prefix;
  rule.lhs.insert(rule.lhs.end(), n, pumped);
  rule.lhs.insert(rule.lhs.end(), suffix.begin(), suffix.end());
  rule.rhs = rhs;
  return rule;
}

RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<RewriteRule> rules,
                                 std::vector<RuleSchema> schemas)
    : _alphabet(std::move(alphabet)), _rules(std::move(rules)), _schemas(std::move(schemas)) {
  for (auto const& rule : _rules) {
    if (rule.lhs.empty()) {
      throw InputError("rule with empty left-hand side");
    }
    check_symbols(_alphabet, rule.lhs, "rule");
    check_symbols(_alphabet, rule.rhs, "rule");
    _length_reducing = _length_reducing && rule.lhs.size() > rule.rhs.size();
  }
  for (auto const& schema : _schemas) {
    if (schema.min_exponent == 0) {
      throw InputError("schema minimum exponent must be at least 1");
    }
    if (!_alphabet.contains(schema.pumped)) {
      throw InputError("schema pumps a symbol outside the alphabet");
    }
    check_symbols(_alphabet, schema.prefix, "schema");
    check_symbols(_alphabet, schema.suffix, "schema");
    check_symbols(_alphabet, schema.rhs, "schema");
    _length_reducing = _length_reducing && schema.min_lhs_length() > schema.rhs.size();
  }
}

std::string RewritingSystem::describe_rule(std::size_t rule_index) const {
  if (rule_index >= rule_count()) {
    throw InputError("rule index " + std::to_string(rule_index) + " out of range");
  }
  if (!is_schema(rule_index)) {
    auto const& rule = _rules[rule_index];
    return spaced(_alphabet, rule.lhs) + " -> " + spaced(_alphabet, rule.rhs);
  }
  auto const& s = schema(rule_index);
  std::string lhs = spaced(_alphabet, s.prefix);
  if (!lhs.empty()) {
    lhs.push_back(' ');
  }
  lhs += _alphabet.letter(s.pumped);
  lhs += "{n}";
  if (!s.suffix.empty()) {
    lhs += ' ' + spaced(_alphabet, s.suffix);
  }
  return lhs + " -> " + spaced(_alphabet, s.rhs) + " where n >= " + std::to_string(s.min_exponent);
}

void check_word(RewritingSystem const& system, std::span<Symbol const> w) {
  check_symbols(system.alphabet(), w, "word");
}

std::vector<Match> find_matches(RewritingSystem const& system, std::span<Symbol const> w) {
  check_word(system, w);
  std::vector<Match> out;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < system.rule_count(); ++r) {
      if (auto m = match_at(system, w, pos, r)) {
        out.push_back(*m);
      }
    }
  }
  return out;
}

std::optional<Match> first_match(RewritingSystem const& system, std::span<Symbol const> w) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t r = 0; r < system.rule_count(); ++r) {
      if (auto m = match_at(system, w, pos, r)) {
        return m;
      }
    }
  }
  return std::nullopt;
}

Word apply_match(RewritingSystem const& system, std::span<Symbol const> w, Match const& m) {
  if (m.rule_index >= system.rule_count() || m.position + m.matched_length > w.size()) {
    throw InputError("match does not fit the word");
  }
  Word const& rhs = system.is_schema(m.rule_index) ? system.schema(m.rule_index).rhs
                                                  : system.rules()[m.rule_index].rhs;
  Word out;
  out.reserve(w.size() - m.matched_length + rhs.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m.position));
  out.insert(out.end(), rhs.begin(), rhs.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(m.position + m.matched_length),
             w.end());
  return out;
}

std::optional<Word> single_step(RewritingSystem const& system, std::span<Symbol const> w) {
  check_word(system, w);
  if (auto m = first_match(system, w)) {
    return apply_match(system, w, *m);
  }
  return std::nullopt;
}

bool is_irreducible(RewritingSystem const& system, std::span<Symbol const> w) {
  check_word(system, w);
  return !first_match(system, w).has_value();
}

Word normal_form(RewritingSystem const& system, std::span<Symbol const> w) {
  if (!system.is_length_reducing()) {
    throw ContractError("normal_form requires a length-reducing system");
  }
  check_word(system, w);
  Word current(w.begin(), w.end());
  while (auto m = first_match(system, current)) {
    current = apply_match(system, current, *m);
  }
  return current;
}

std::vector<ReductionStep> reduce_with_trace(RewritingSystem const& system,
                                             std::span<Symbol const> w) {
  if (!system.is_length_reducing()) {
    throw ContractError("reduction requires a length-reducing system");
  }
  check_word(system, w);
  std::vector<ReductionStep> steps;
  Word current(w.begin(), w.end());
  while (auto m = first_match(system, current)) {
    current = apply_match(system, current, *m);
    steps.push_back({*m, current});
  }
  return steps;
}

LengthReport check_length_reducing(RewritingSystem const& system) {
  LengthReport report;
  for (std::size_t i = 0; i < system.rules().size(); ++i) {
    auto const& rule = system.rules()[i];
    if (rule.lhs.size() <= rule.rhs.size()) {
      report.failing.push_back(i);
    }
    ++report.checked;
  }
  for (std::size_t i = 0; i < system.schemas().size(); ++i) {
    auto const& schema = system.schemas()[i];
    if (schema.min_lhs_length() <= schema.rhs.size()) {
      report.failing.push_back(system.rules().size() + i);
    }
    ++report.checked;
  }
  report.passed = report.failing.empty();
  return report;
}

bool words_equal(RewritingSystem const& system, std::span<Symbol const> lhs,
                 std::span<Symbol const> rhs) {
  if (!system.is_certified()) {
    throw ContractError("words_equal requires a system certified complete");
  }
  return normal_form(system, lhs) == normal_form(system, rhs);
}

}  // namespace cayleyforge
