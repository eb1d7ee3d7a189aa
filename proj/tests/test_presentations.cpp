#include <doctest.h>

#include <algorithm>
#include <set>

#include "cayleyforge/errors.hpp"
#include "cayleyforge/presentations.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace cayleyforge;
using testing::M;
using testing::N;
using testing::strM;
using testing::strN;

TEST_CASE("builtin M") {
  auto const m = system_M();
  CHECK(m.alphabet().letters() == "ab");
  CHECK(m.rules().empty());
  CHECK(m.schemas().size() == 1);
  CHECK(check_length_reducing(m).passed);
  CHECK(strM(normal_form(m, M("abba"))) == "aba");
  CHECK(is_irreducible(m, M("abab")));
}

TEST_CASE("builtin N") {
  auto const n = system_N();
  CHECK(n.alphabet().letters() == "cd");
  CHECK(n.rules().size() == 4);
  CHECK(n.schemas().empty());
  CHECK(strN(normal_form(n, N("cdddd"))) == "cdc");
  CHECK(is_irreducible(n, N("cdddc")));
  CHECK(oracle::irreducible("cdddc", oracle::rules_N()));
}

TEST_CASE("truncated M") {
  auto const t5 = truncated_system_M(5);
  CHECK(t5.rules().size() == 4);
  CHECK_FALSE(t5.is_certified());
  CHECK(strM(normal_form(t5, M("abbbbbba"))) == "abbbbbba");
  CHECK(is_irreducible(t5, M("abbbbbba")));
  CHECK(strM(normal_form(t5, M("abbba"))) == "aba");
  CHECK(truncated_system_M(2).rules().size() == 1);
  CHECK(is_irreducible(truncated_system_M(2), M("abbba")));
  CHECK_THROWS_AS(truncated_system_M(1), InputError);
}

TEST_CASE("classify_M") {
  CHECK(classify_M(M("bbb")) == NormalFormM{ClassM::NFM1, 3, {}, 0});
  CHECK(classify_M(M("babab")) == NormalFormM{ClassM::NFM3, 1, M("aba"), 1});
  CHECK(classify_M(M("")) == NormalFormM{ClassM::NFM1, 0, {}, 0});
  CHECK(classify_M(M("bbaab")) == NormalFormM{ClassM::NFM3, 2, M("aa"), 1});
  CHECK(classify_M(M("aba")) == NormalFormM{ClassM::NFM2, 0, M("aba"), 0});
  CHECK_THROWS_AS(classify_M(M("abba")), ClassificationError);
  CHECK_THROWS_WITH_AS(classify_M(M("babba")), doctest::Contains("position 1"),
                       ClassificationError);
}

TEST_CASE("classify_N") {
  CHECK(classify_N(N("dd")) == NormalFormN{ClassN::NFN1, 2, {}, 0, 0});
  CHECK(classify_N(N("cdddc")) == NormalFormN{ClassN::NFN3, 0, N("c"), 1, 0});
  CHECK(classify_N(N("cdc")) == NormalFormN{ClassN::NFN2, 0, N("cdc"), 0, 0});
  CHECK(classify_N(N("cdcd")) == NormalFormN{ClassN::NFN3, 0, N("cdc"), 0, 1});
  CHECK(classify_N(N("dccdddcdddcddd")) == NormalFormN{ClassN::NFN3, 1, N("cc"), 2, 3});
  CHECK_THROWS_AS(classify_N(N("cddc")), ClassificationError);
  CHECK_THROWS_AS(classify_N(Word{0, 1, 2}), InputError);
}

TEST_CASE("bar") {
  CHECK(strN(bar(M("aba"))) == "cdc");
  CHECK(bar(Word{}).empty());
  CHECK(strN(bar(M("aab"))) == "ccd");
  CHECK(strM(bar_inverse(N("ccd"))) == "aab");
}

TEST_CASE("map_f") {
  CHECK(strN(map_f(M("bb"))) == "dd");
  CHECK(strN(map_f(M("abbbbb"))) == "cdddcd");
  CHECK(strN(map_f(M("abbbb"))) == "cdddc");
  CHECK(strN(map_f(M("abb"))) == "cdd");
  CHECK(strN(map_f(M("aba"))) == "cdc");
  CHECK_THROWS_AS(map_f(M("abba")), ClassificationError);
}

TEST_CASE("map_f_inverse") {
  CHECK(strM(map_f_inverse(N("dc"))) == "ba");
  CHECK(strM(map_f_inverse(N("cdddcd"))) == "abbbbb");
  CHECK(strM(map_f_inverse(N("cdc"))) == "aba");
  CHECK_THROWS_AS(map_f_inverse(N("cdddd")), ClassificationError);
}

TEST_CASE("enumerate_normal_forms") {
  auto const two = enumerate_normal_forms(system_M(), 2);
  std::vector<std::string> names;
  for (auto const& w : two) {
    names.push_back(strM(w));
  }
  CHECK(names == std::vector<std::string>{"", "a", "b", "aa", "ab", "ba", "bb"});

  auto const m4 = enumerate_normal_forms(system_M(), 4);
  CHECK(m4.size() == 30);
  CHECK(m4.size() == oracle::normal_forms("ab", 4, oracle::rules_M(2)).size());

  auto const n5 = enumerate_normal_forms(system_N(), 5);
  CHECK(n5.size() == 57);
  CHECK(n5.size() == oracle::normal_forms("cd", 5, oracle::rules_N()).size());
  CHECK(std::is_sorted(n5.begin(), n5.end(), ShortlexLess{}));
}

TEST_CASE("enumeration equals enumerate-and-filter up to length 10") {
  for (std::size_t len = 0; len <= 10; ++len) {
    auto const m = enumerate_normal_forms(system_M(), len);
    auto const n = enumerate_normal_forms(system_N(), len);
    auto const om = oracle::normal_forms("ab", len, oracle::rules_M(8));
    auto const on = oracle::normal_forms("cd", len, oracle::rules_N());
    REQUIRE(m.size() == om.size());
    REQUIRE(n.size() == on.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK(strM(m[i]) == om[i]);
    }
    for (std::size_t i = 0; i < n.size(); ++i) {
      CHECK(strN(n[i]) == on[i]);
    }
    CHECK(m.size() == n.size());
  }
}

TEST_CASE("classifiers accept exactly the irreducible words") {
  auto const rules_m = oracle::rules_M(8);
  auto const rules_n = oracle::rules_N();
  for (auto const& s : oracle::all_words("ab", 10)) {
    bool const irr = oracle::irreducible(s, rules_m);
    if (irr) {
      auto const nf = classify_M(M(s));
      CHECK(strM(assemble(nf)) == s);
      CHECK((nf.tag == ClassM::NFM1 || in_U_M(nf.u)));
    } else {
      CHECK_THROWS_AS(classify_M(M(s)), ClassificationError);
    }
  }
  for (auto const& s : oracle::all_words("cd", 10)) {
    bool const irr = oracle::irreducible(s, rules_n);
    if (irr) {
      auto const nf = classify_N(N(s));
      CHECK(strN(assemble(nf)) == s);
      CHECK(nf.r <= 3);
      CHECK((nf.tag != ClassN::NFN3 || nf.q + nf.r > 0));
    } else {
      CHECK_THROWS_AS(classify_N(N(s)), ClassificationError);
    }
  }
}

TEST_CASE("f is a length-preserving, type-preserving bijection") {
  auto const nm = enumerate_normal_forms(system_M(), 10);
  auto const nn = enumerate_normal_forms(system_N(), 10);
  std::set<Word> images;
  for (auto const& w : nm) {
    Word const fw = map_f(w);
    CHECK(fw.size() == w.size());
    CHECK(is_irreducible(system_N(), fw));
    CHECK(map_f_inverse(fw) == w);
    CHECK(static_cast<int>(classify_N(fw).tag) == static_cast<int>(classify_M(w).tag));
    images.insert(fw);
  }
  CHECK(images.size() == nm.size());
  CHECK(images == std::set<Word>(nn.begin(), nn.end()));
  for (auto const& v : nn) {
    CHECK(map_f(map_f_inverse(v)) == v);
  }
}

TEST_CASE("U_M and U_N recognisers") {
  CHECK(in_U_M(M("a")));
  CHECK(in_U_M(M("aabaaba")));
  CHECK_FALSE(in_U_M(M("abba")));
  CHECK_FALSE(in_U_M(M("ab")));
  CHECK_FALSE(in_U_M(M("")));
  CHECK(in_U_N(N("cdcc")));
  CHECK_FALSE(in_U_N(N("dc")));
}

TEST_CASE("edge tables") {
  CHECK(table_edge_M(M("abb"), kA).label == "NFM3a");
  CHECK(strM(table_edge_M(M("abb"), kA).target) == "aba");
  CHECK(strM(table_edge_M(M("abb"), kB).target) == "abbb");
  CHECK(table_edge_N(N("cddd"), kC).label == "NFN3c");
  CHECK(strN(table_edge_N(N("cddd"), kC).target) == "cdddc");
  CHECK(strN(table_edge_N(N("cddd"), kD).target) == "cdc");
  CHECK(strN(table_edge_N(N("cdd"), kC).target) == "cdc");
  CHECK(strN(table_edge_N(N("cdd"), kD).target) == "cddd");
  CHECK(strN(table_edge_N(N("dd"), kC).target) == "ddc");
  CHECK(image_edge_type_M_to_N("NFM3a", 2) == "NFN3c");
  CHECK(image_edge_type_M_to_N("NFM3a", 3) == "NFN3d");
  CHECK(image_edge_type_N_to_M("NFN3d", 3) == "NFM3a");
  CHECK_THROWS_AS(image_edge_type_M_to_N("NFX", 0), InputError);
}
