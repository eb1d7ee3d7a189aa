#include "cayleyforge/presentation_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "cayleyforge/errors.hpp"
#include "cayleyforge/presentations.hpp"

namespace cayleyforge {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
      ++j;
    }
    if (j > i) {
      out.push_back(line.substr(i, j - i));
    }
    i = j;
  }
  return out;
}

std::optional<std::size_t> parse_uint(std::string_view s) {
  std::size_t value = 0;
  auto const* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    return std::nullopt;
  }
  return value;
}

struct Side {
  Word word;
  // Set when a {var} token appears: position of the pumped run in `word`.
  std::optional<std::size_t> pumped_at;
  Symbol pumped = 0;
  std::string variable;
};

Side parse_side(Alphabet const& alphabet, std::span<std::string_view const> tokens,
                std::size_t line) {
  Side side;
  for (auto tok : tokens) {
    if (tok.size() == 1) {
      if (alphabet.letters().find(tok[0]) == std::string::npos) {
        throw ParseError(std::string("symbol '") + tok[0] + "' is not in the alphabet", line);
      }
      side.word.push_back(alphabet.symbol(tok[0]));
      continue;
    }
    if (tok.size() < 4 || tok[1] != '{' || tok.back() != '}') {
      throw ParseError("bad token '" + std::string(tok) + "' (expected x or x{k})", line);
    }
    if (alphabet.letters().find(tok[0]) == std::string::npos) {
      throw ParseError(std::string("symbol '") + tok[0] + "' is not in the alphabet", line);
    }
    Symbol const s = alphabet.symbol(tok[0]);
    auto const inner = tok.substr(2, tok.size() - 3);
    if (auto k = parse_uint(inner)) {
      side.word.insert(side.word.end(), *k, s);
      continue;
    }
    for (char c : inner) {
      if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
        throw ParseError("bad exponent '" + std::string(inner) + "'", line);
      }
    }
    if (side.pumped_at) {
      throw ParseError("at most one exponent variable per rule", line);
    }
    side.pumped_at = side.word.size();
    side.pumped = s;
    side.variable = std::string(inner);
  }
  return side;
}

}  // namespace

RewritingSystem parse_presentation(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<RewriteRule> rules;
  std::vector<RuleSchema> schemas;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_ws(line);
    if (tokens.empty()) {
      continue;
    }
    if (tokens[0] == "alphabet") {
      if (alphabet) {
        throw ParseError("duplicate alphabet declaration", line_no);
      }
      std::string letters;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].size() != 1) {
          throw ParseError("generators must be single characters, got '"
                               + std::string(tokens[i]) + "'",
                           line_no);
        }
        letters.push_back(tokens[i][0]);
      }
      if (letters.empty()) {
        throw ParseError("empty alphabet", line_no);
      }
      try {
        alphabet.emplace(letters);
      } catch (InputError const& e) {
        throw ParseError(e.what(), line_no);
      }
      continue;
    }
    if (tokens[0] != "rule") {
      throw ParseError("unknown declaration '" + std::string(tokens[0]) + "'", line_no);
    }
    if (!alphabet) {
      throw ParseError("rule before alphabet declaration", line_no);
    }
    std::span<std::string_view const> rest(tokens.begin() + 1, tokens.end());
    auto arrow = std::find(rest.begin(), rest.end(), "->");
    if (arrow == rest.end()) {
      throw ParseError("rule without '->'", line_no);
    }
    auto where = std::find(arrow, rest.end(), "where");
    Side lhs = parse_side(*alphabet, {rest.begin(), arrow}, line_no);
    Side rhs = parse_side(*alphabet, {arrow + 1, where}, line_no);
    if (rhs.pumped_at) {
      throw ParseError("exponent variables are only allowed on the left-hand side", line_no);
    }
    if (lhs.word.empty() && !lhs.pumped_at) {
      throw ParseError("empty left-hand side", line_no);
    }

    if (!lhs.pumped_at) {
      if (where != rest.end()) {
        throw ParseError("'where' clause without an exponent variable", line_no);
      }
      if (lhs.word.size() <= rhs.word.size()) {
        throw ParseError("rule is not length-reducing", line_no);
      }
      rules.push_back({std::move(lhs.word), std::move(rhs.word)});
      continue;
    }

    std::span<std::string_view const> cond(where, rest.end());
    if (cond.size() != 4 || cond[1] != lhs.variable || cond[2] != ">=") {
      throw ParseError("expected 'where " + lhs.variable + " >= <min>'", line_no);
    }
    auto min = parse_uint(cond[3]);
    if (!min || *min == 0) {
      throw ParseError("schema minimum exponent must be a positive integer", line_no);
    }
    RuleSchema schema;
    auto const at = static_cast<std::ptrdiff_t>(*lhs.pumped_at);
    schema.prefix.assign(lhs.word.begin(), lhs.word.begin() + at);
    schema.suffix.assign(lhs.word.begin() + at, lhs.word.end());
    schema.pumped = lhs.pumped;
    schema.min_exponent = *min;
    schema.rhs = std::move(rhs.word);
    if (schema.min_lhs_length() <= schema.rhs.size()) {
      throw ParseError("schema instance at " + lhs.variable + " = " + std::to_string(*min)
                           + " is not length-reducing",
                       line_no);
    }
    schemas.push_back(std::move(schema));
  }
  if (!alphabet) {
    throw ParseError("missing alphabet declaration", 0);
  }
  return RewritingSystem(std::move(*alphabet), std::move(rules), std::move(schemas));
}

std::string format_presentation(RewritingSystem const& system) {
  std::string out = "alphabet";
  for (char c : system.alphabet().letters()) {
    out += ' ';
    out += c;
  }
  out += '\n';
  for (std::size_t i = 0; i < system.rule_count(); ++i) {
    out += "rule " + system.describe_rule(i) + '\n';
  }
  return out;
}

RewritingSystem load_presentation(std::string const& name_or_path) {
  std::string_view name = name_or_path;
  if (name.starts_with("builtin:")) {
    name.remove_prefix(8);
    if (name != "M" && name != "N") {
      throw InputError("unknown builtin presentation '" + name_or_path + "'");
    }
  }
  if (name == "M") {
    return system_M();
  }
  if (name == "N") {
    return system_N();
  }
  std::ifstream file(name_or_path);
  if (!file) {
    throw InputError("cannot open presentation file '" + name_or_path + "'");
  }
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace cayleyforge
