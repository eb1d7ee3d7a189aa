#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "cayleyforge/confluence.hpp"
#include "cayleyforge/errors.hpp"
#include "cayleyforge/presentations.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cayleyforge;
using testing::M;
using testing::N;

namespace {

using Triple = std::tuple<std::string, std::string, std::string, bool>;

std::multiset<Triple> as_strings(CriticalPairSet const& set, Alphabet const& alphabet) {
  std::multiset<Triple> out;
  for (auto const& cp : set.pairs) {
    out.emplace(alphabet.render(cp.source), alphabet.render(cp.left_result),
                alphabet.render(cp.right_result), cp.kind == OverlapKind::containment);
  }
  return out;
}

std::multiset<Triple> as_strings(std::vector<oracle::StrPair> const& pairs) {
  std::multiset<Triple> out;
  for (auto const& p : pairs) {
    out.emplace(p.source, p.left, p.right, p.containment);
  }
  return out;
}

RewritingSystem two_rule_counterexample() {
  return RewritingSystem(Alphabet("ab"), {{M("ab"), M("a")}, {M("ba"), M("b")}});
}

}  // namespace

TEST_CASE("critical pairs of R_N") {
  auto const set = critical_pairs(system_N());
  auto const strings = as_strings(set, system_N().alphabet());
  CHECK(strings.count({"cddcddc", "cdcddc", "cddcdc", false}) == 1);
  CHECK(strings == as_strings(oracle::critical_pairs(oracle::rules_N())));
}

TEST_CASE("critical pairs of R_M at bound 3") {
  auto const set = critical_pairs(system_M(), 3);
  auto const strings = as_strings(set, system_M().alphabet());
  CHECK(strings.count({"abbabbba", "ababbba", "abbaba", false}) == 1);
  CHECK(strings == as_strings(oracle::critical_pairs(oracle::rules_M(3))));

  auto const it = std::find_if(set.pairs.begin(), set.pairs.end(), [](CriticalPair const& cp) {
    return testing::strM(cp.source) == "abbabbba";
  });
  REQUIRE(it != set.pairs.end());
  CHECK(testing::strM(normal_form(system_M(), it->left_result)) == "ababa");
  CHECK(testing::strM(normal_form(system_M(), it->right_result)) == "ababa");
}

TEST_CASE("critical pairs agree with brute force for larger bounds") {
  for (std::size_t bound : {2, 5, 8}) {
    CHECK(as_strings(critical_pairs(system_M(), bound), system_M().alphabet())
          == as_strings(oracle::critical_pairs(oracle::rules_M(bound))));
  }
}

TEST_CASE("each overlap appears exactly once") {
  auto const set = critical_pairs(system_M(), 9);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t, OverlapKind>> seen;
  for (auto const& cp : set.pairs) {
    CHECK(seen.emplace(cp.first, cp.second, cp.offset, cp.kind).second);
  }
  // Schemas instantiate n = 2..9: 8 rules, each pair overlapping only in "a".
  CHECK(set.pairs.size() == 64);
}

TEST_CASE("disjoint single rule has no critical pairs") {
  RewritingSystem const sys(Alphabet("ab"), {{M("ab"), M("a")}});
  CHECK(critical_pairs(sys).pairs.empty());
}

TEST_CASE("containment pairs") {
  // b b b -> b contains b b -> b twice.
  RewritingSystem const sys(Alphabet("ab"), {{M("bbb"), M("b")}, {M("bb"), M("b")}});
  auto const set = critical_pairs(sys);
  auto const n = std::count_if(set.pairs.begin(), set.pairs.end(), [](CriticalPair const& cp) {
    return cp.kind == OverlapKind::containment;
  });
  CHECK(n == 2);
  CHECK(as_strings(set, sys.alphabet())
        == as_strings(oracle::critical_pairs({{"bbb", "b"}, {"bb", "b"}})));
  CHECK(check_local_confluence(sys).passed);
}

TEST_CASE("local confluence") {
  SUBCASE("R_N is confluent and every overlap resolves to xyxyx") {
    auto const report = check_local_confluence(system_N());
    CHECK(report.passed);
    CHECK_FALSE(report.bounded);
    CHECK(report.overlap_count == 12);
    CHECK(report.xyxyx_overlaps == report.overlap_count);
    for (auto const& res : report.resolutions) {
      CHECK(testing::strN(res.left_normal_form) == "cdcdc");
    }
  }
  SUBCASE("R_M at bound 12") {
    auto const report = check_local_confluence(system_M(), 12);
    CHECK(report.passed);
    CHECK(report.bounded);
    CHECK(report.xyxyx_overlaps == report.overlap_count);
  }
  SUBCASE("two-rule counterexample fails on aba") {
    auto const sys = two_rule_counterexample();
    auto const report = check_local_confluence(sys);
    CHECK_FALSE(report.passed);
    REQUIRE(report.failures.size() >= 1);
    bool found = false;
    for (auto i : report.failures) {
      auto const& cp = report.critical.pairs[i];
      auto const& res = report.resolutions[i];
      if (testing::strM(cp.source) == "aba") {
        found = true;
        std::set<std::string> nfs{testing::strM(res.left_normal_form),
                                  testing::strM(res.right_normal_form)};
        CHECK(nfs == std::set<std::string>{"aa", "a"});
      }
    }
    CHECK(found);

    std::map<std::string, std::set<std::string>> memo;
    auto const ends = oracle::endpoints("aba", {{"ab", "a"}, {"ba", "b"}}, memo);
    CHECK(ends == std::set<std::string>{"aa", "a"});
  }
  SUBCASE("not length-reducing") {
    RewritingSystem const sys(Alphabet("ab"), {{M("a"), M("ab")}});
    auto const report = check_local_confluence(sys);
    CHECK_FALSE(report.passed);
    CHECK_FALSE(report.length_reducing);
  }
}

TEST_CASE("certify_complete") {
  CHECK(system_M().certified_bound() == kDefaultSchemaBound);
  CHECK(system_N().is_certified());
  CHECK_THROWS_AS(certify_complete(two_rule_counterexample()), ContractError);
  auto const t = certify_complete(truncated_system_M(4));
  CHECK(t.is_certified());
  CHECK_THROWS_AS(critical_pairs(system_M(), 1), InputError);
}

TEST_CASE("xyxyx shape") {
  CHECK(has_xyxyx_shape(N("cdcdc")));
  CHECK(has_xyxyx_shape(M("babab")));
  CHECK_FALSE(has_xyxyx_shape(M("aaaaa")));
  CHECK_FALSE(has_xyxyx_shape(M("abab")));
}
