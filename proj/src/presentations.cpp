#include "cayleyforge/presentations.hpp"

#include <algorithm>

#include "cayleyforge/confluence.hpp"
#include "cayleyforge/errors.hpp"

namespace cayleyforge {

namespace {

void require_binary(std::span<Symbol const> w) {
  for (Symbol s : w) {
    if (s > 1) {
      throw InputError("word uses symbol id " + std::to_string(s)
                       + " outside a two-letter alphabet");
    }
  }
}

std::size_t leading_run(std::span<Symbol const> w, Symbol x) {
  std::size_t n = 0;
  while (n < w.size() && w[n] == x) {
    ++n;
  }
  return n;
}

std::size_t trailing_run(std::span<Symbol const> w, Symbol x) {
  std::size_t n = 0;
  while (n < w.size() && w[w.size() - 1 - n] == x) {
    ++n;
  }
  return n;
}

// Both U_M and U_N: blocks of `block` separated by single `sep` letters,
// nonempty, starting and ending with `block`.
bool alternating_blocks(std::span<Symbol const> w, Symbol block, Symbol sep) {
  if (w.empty() || w.front() != block || w.back() != block) {
    return false;
  }
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == sep && w[i - 1] == sep) {
      return false;
    }
  }
  return true;
}

void require_irreducible(RewritingSystem const& system, std::span<Symbol const> w) {
  if (auto m = first_match(system, w)) {
    throw ClassificationError("word " + system.alphabet().render(w) + " is reducible: rule "
                              + system.describe_rule(m->rule_index) + " matches at position "
                              + std::to_string(m->position));
  }
}

RewritingSystem make_M() {
  RuleSchema schema;
  schema.prefix = {kA};
  schema.pumped = kB;
  schema.min_exponent = 2;
  schema.suffix = {kA};
  schema.rhs = {kA, kB, kA};
  return certify_complete(RewritingSystem(Alphabet("ab"), {}, {schema}));
}

RewritingSystem make_N() {
  Alphabet const cd("cd");
  Word const cdc = cd.parse("cdc");
  std::vector<RewriteRule> rules = {
      {cd.parse("cddc"), cdc},
      {cd.parse("cdddd"), cdc},
      {cd.parse("cdddcc"), cdc},
      {cd.parse("cdddcdc"), cdc},
  };
  return certify_complete(RewritingSystem(cd, std::move(rules)));
}

}  // namespace

RewritingSystem system_M() {
  static RewritingSystem const m = make_M();
  return m;
}

RewritingSystem system_N() {
  static RewritingSystem const n = make_N();
  return n;
}

RewritingSystem truncated_system_M(std::size_t n0) {
  if (n0 < 2) {
    throw InputError("truncation point must be at least 2, got " + std::to_string(n0));
  }
  std::vector<RewriteRule> rules;
  for (std::size_t n = 2; n <= n0; ++n) {
    Word lhs{kA};
    lhs.insert(lhs.end(), n, kB);
    lhs.push_back(kA);
    rules.push_back({std::move(lhs), {kA, kB, kA}});
  }
  return RewritingSystem(Alphabet("ab"), std::move(rules));
}

std::string_view to_string(ClassM c) noexcept {
  switch (c) {
    case ClassM::NFM1: return "NFM1";
    case ClassM::NFM2: return "NFM2";
    case ClassM::NFM3: return "NFM3";
  }
  return "?";
}

std::string_view to_string(ClassN c) noexcept {
  switch (c) {
    case ClassN::NFN1: return "NFN1";
    case ClassN::NFN2: return "NFN2";
    case ClassN::NFN3: return "NFN3";
  }
  return "?";
}

bool in_U_M(std::span<Symbol const> w) noexcept {
  return alternating_blocks(w, kA, kB);
}

bool in_U_N(std::span<Symbol const> w) noexcept {
  return alternating_blocks(w, kC, kD);
}

NormalFormM classify_M(std::span<Symbol const> w) {
  require_binary(w);
  require_irreducible(system_M(), w);
  NormalFormM nf;
  nf.s = leading_run(w, kB);
  if (nf.s == w.size()) {
    nf.tag = ClassM::NFM1;
    return nf;
  }
  nf.t = trailing_run(w, kB);
  nf.u.assign(w.begin() + static_cast<std::ptrdiff_t>(nf.s),
              w.end() - static_cast<std::ptrdiff_t>(nf.t));
  if (!in_U_M(nf.u)) {
    throw ClassificationError("irreducible word has core outside U_M");
  }
  nf.tag = nf.t == 0 ? ClassM::NFM2 : ClassM::NFM3;
  return nf;
}

NormalFormN classify_N(std::span<Symbol const> w) {
  require_binary(w);
  require_irreducible(system_N(), w);
  NormalFormN nf;
  nf.p = leading_run(w, kD);
  if (nf.p == w.size()) {
    nf.tag = ClassN::NFN1;
    return nf;
  }

  // Greedy U_N prefix: c-blocks joined by single d's that are followed by c.
  std::size_t i = nf.p;
  while (true) {
    while (i < w.size() && w[i] == kC) {
      ++i;
    }
    if (i + 1 < w.size() && w[i] == kD && w[i + 1] == kC) {
      ++i;
      continue;
    }
    break;
  }
  nf.v.assign(w.begin() + static_cast<std::ptrdiff_t>(nf.p),
              w.begin() + static_cast<std::ptrdiff_t>(i));

  // The rest must be (d^3 c)^q d^r.
  while (i + 4 <= w.size() && w[i] == kD && w[i + 1] == kD && w[i + 2] == kD
         && w[i + 3] == kC) {
    ++nf.q;
    i += 4;
  }
  nf.r = w.size() - i;
  if (nf.r > 3 || !std::all_of(w.begin() + static_cast<std::ptrdiff_t>(i), w.end(),
                               [](Symbol x) { return x == kD; })) {
    throw ClassificationError("irreducible word " + system_N().alphabet().render(w)
                              + " does not have the shape d^p v (d^3 c)^q d^r");
  }
  nf.tag = (nf.q == 0 && nf.r == 0) ? ClassN::NFN2 : ClassN::NFN3;
  return nf;
}

Word assemble(NormalFormM const& nf) {
  Word w = power(kB, nf.s);
  w.insert(w.end(), nf.u.begin(), nf.u.end());
  w.insert(w.end(), nf.t, kB);
  return w;
}

Word assemble(NormalFormN const& nf) {
  Word w = power(kD, nf.p);
  w.insert(w.end(), nf.v.begin(), nf.v.end());
  for (std::size_t i = 0; i < nf.q; ++i) {
    w.insert(w.end(), {kD, kD, kD, kC});
  }
  w.insert(w.end(), nf.r, kD);
  return w;
}

Word bar(std::span<Symbol const> u) {
  require_binary(u);
  Word out;
  out.reserve(u.size());
  for (Symbol x : u) {
    out.push_back(x == kA ? kC : kD);
  }
  return out;
}

Word bar_inverse(std::span<Symbol const> v) {
  require_binary(v);
  Word out;
  out.reserve(v.size());
  for (Symbol x : v) {
    out.push_back(x == kC ? kA : kB);
  }
  return out;
}

Word map_f(std::span<Symbol const> w) {
  NormalFormM const m = classify_M(w);
  NormalFormN n;
  n.p = m.s;
  n.v = bar(m.u);
  switch (m.tag) {
    case ClassM::NFM1: n.tag = ClassN::NFN1; break;
    case ClassM::NFM2: n.tag = ClassN::NFN2; break;
    case ClassM::NFM3:
      n.tag = ClassN::NFN3;
      n.q = m.t / 4;
      n.r = m.t % 4;
      break;
  }
  return assemble(n);
}

Word map_f_inverse(std::span<Symbol const> w) {
  NormalFormN const n = classify_N(w);
  NormalFormM m;
  m.s = n.p;
  m.u = bar_inverse(n.v);
  switch (n.tag) {
    case ClassN::NFN1: m.tag = ClassM::NFM1; break;
    case ClassN::NFN2: m.tag = ClassM::NFM2; break;
    case ClassN::NFN3:
      m.tag = ClassM::NFM3;
      m.t = 4 * n.q + n.r;
      break;
  }
  return assemble(m);
}

std::vector<Word> enumerate_normal_forms(RewritingSystem const& system, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t const level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t g = 0; g < system.alphabet().size(); ++g) {
        Word child = out[i];
        child.push_back(static_cast<Symbol>(g));
        if (!first_match(system, child)) {
          out.push_back(std::move(child));
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

TableEdge table_edge_M(std::span<Symbol const> w, Symbol g) {
  if (g > 1) {
    throw InputError("generator outside {a, b}");
  }
  NormalFormM const nf = classify_M(w);
  std::string label(to_string(nf.tag));
  label += g == kA ? 'a' : 'b';
  Word target = power(kB, nf.s);
  target.insert(target.end(), nf.u.begin(), nf.u.end());
  if (nf.tag == ClassM::NFM3 && g == kA) {
    target.insert(target.end(), {kB, kA});
  } else {
    target.insert(target.end(), nf.t, kB);
    target.push_back(g);
  }
  return {std::move(label), std::move(target)};
}

TableEdge table_edge_N(std::span<Symbol const> w, Symbol g) {
  if (g > 1) {
    throw InputError("generator outside {c, d}");
  }
  NormalFormN nf = classify_N(w);
  std::string label(to_string(nf.tag));
  label += g == kC ? 'c' : 'd';
  if (nf.tag != ClassN::NFN3) {
    Word target = w.empty() ? Word{} : Word(w.begin(), w.end());
    target.push_back(g);
    return {std::move(label), std::move(target)};
  }
  // r = 0, 1, 2: c collapses to d^p v d c, d raises r.
  // r = 3:       c closes another d^3 c block, d collapses.
  bool const collapse = (g == kC) == (nf.r <= 2);
  NormalFormN next = nf;
  if (collapse) {
    next.q = 0;
    next.r = 0;
    next.tag = ClassN::NFN2;
    next.v.insert(next.v.end(), {kD, kC});
  } else if (g == kD) {
    next.r += 1;
  } else {
    next.q += 1;
    next.r = 0;
  }
  return {std::move(label), assemble(next)};
}

std::string_view image_edge_type_M_to_N(std::string_view label_m, std::size_t r) {
  if (label_m == "NFM1a") return "NFN1c";
  if (label_m == "NFM1b") return "NFN1d";
  if (label_m == "NFM2a") return "NFN2c";
  if (label_m == "NFM2b") return "NFN2d";
  if (label_m == "NFM3a") return r <= 2 ? "NFN3c" : "NFN3d";
  if (label_m == "NFM3b") return r <= 2 ? "NFN3d" : "NFN3c";
  throw InputError("unknown edge type '" + std::string(label_m) + "'");
}

std::string_view image_edge_type_N_to_M(std::string_view label_n, std::size_t r) {
  if (label_n == "NFN1c") return "NFM1a";
  if (label_n == "NFN1d") return "NFM1b";
  if (label_n == "NFN2c") return "NFM2a";
  if (label_n == "NFN2d") return "NFM2b";
  if (label_n == "NFN3c") return r <= 2 ? "NFM3a" : "NFM3b";
  if (label_n == "NFN3d") return r <= 2 ? "NFM3b" : "NFM3a";
  throw InputError("unknown edge type '" + std::string(label_n) + "'");
}

}  // namespace cayleyforge
