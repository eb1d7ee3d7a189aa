#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <random>

#include "cayleyforge/errors.hpp"
#include "cayleyforge/graph_iso.hpp"
#include "cayleyforge/presentations.hpp"
#include "cayleyforge/report_json.hpp"
#include "helpers.hpp"

using namespace cayleyforge;
using testing::M;
using testing::N;

namespace {

UnlabelledDigraph random_digraph(std::mt19937& rng, std::size_t n, std::size_t arcs) {
  UnlabelledDigraph g{n, {}};
  for (std::size_t i = 0; i < arcs; ++i) {
    g.arcs.push_back({rng() % n, rng() % n});
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

UnlabelledDigraph permuted(UnlabelledDigraph const& g, std::vector<std::size_t> const& perm) {
  UnlabelledDigraph out{g.n, {}};
  for (auto const& a : g.arcs) {
    out.arcs.push_back({perm[a.src], perm[a.dst]});
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

CayleyBall right_ball_M(std::size_t r) { return build_ball(system_M(), Side::right, r); }
CayleyBall right_ball_N(std::size_t r) { return build_ball(system_N(), Side::right, r); }

}  // namespace

TEST_CASE("explicit isomorphism on right balls") {
  auto const report = verify_explicit_iso(right_ball_M(5), right_ball_N(5));
  CHECK(report.status == IsoStatus::verified);
  CHECK_FALSE(report.witness.has_value());
  CHECK(report.vertices_checked == 57);
  CHECK(report.arcs_checked_forward == 67);
  CHECK(report.arcs_checked_backward == 67);

  auto const zero = verify_explicit_iso(right_ball_M(0), right_ball_N(0));
  CHECK(zero.status == IsoStatus::verified);
  CHECK(zero.mapping == std::vector<std::size_t>{0});
  CHECK(zero.arcs_checked_forward == 0);
}

TEST_CASE("explicit isomorphism: the NFM3a edge (abb, aba)") {
  auto const bm = right_ball_M(3);
  auto const bn = right_ball_N(3);
  auto const report = verify_explicit_iso(bm, bn);
  REQUIRE(report.status == IsoStatus::verified);
  auto const abb = *bm.index_of(M("abb"));
  auto const aba = *bm.index_of(M("aba"));
  CHECK(report.mapping[abb] == *bn.index_of(N("cdd")));
  CHECK(report.mapping[aba] == *bn.index_of(N("cdc")));
  Edge const image{report.mapping[abb], report.mapping[aba], kC};
  CHECK(std::find(bn.edges.begin(), bn.edges.end(), image) != bn.edges.end());
  CHECK(table_edge_N(N("cdd"), kC).label == "NFN3c");
  CHECK(report.edge_types.count({"NFM3a", "NFN3c"}) == 1);
}

TEST_CASE("explicit isomorphism rejects bad inputs and finds tampering") {
  CHECK_THROWS_AS(verify_explicit_iso(right_ball_M(3), right_ball_N(4)), InputError);
  CHECK_THROWS_AS(verify_explicit_iso(build_ball(system_M(), Side::left, 3), right_ball_N(3)),
                  InputError);
  CHECK_THROWS_AS(verify_explicit_iso(build_ball(system_M(), Side::right, 3,
                                                 FrontierPolicy::with_frontier),
                                      right_ball_N(3)),
                  InputError);

  auto tampered = right_ball_N(4);
  tampered.edges.erase(tampered.edges.begin() + 3);
  auto const report = verify_explicit_iso(right_ball_M(4), tampered);
  CHECK(report.status == IsoStatus::counterexample);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness->kind == "arc");
  CHECK(report.witness->direction == "forward");

  auto rewired = right_ball_N(4);
  // Swap the targets of two edges: arc count stays, but arcs change.
  std::swap(rewired.edges[0].dst, rewired.edges[5].dst);
  CHECK(verify_explicit_iso(right_ball_M(4), rewired).status == IsoStatus::counterexample);
}

TEST_CASE("find_isomorphism small cases") {
  auto const single = find_isomorphism({1, {}}, {1, {}});
  REQUIRE(single.status == SearchStatus::found);
  CHECK(single.certificate->mapping == std::vector<std::size_t>{0});

  UnlabelledDigraph const cycle{3, {{0, 1}, {1, 2}, {2, 0}}};
  UnlabelledDigraph const path{3, {{0, 1}, {1, 2}}};
  auto const none = find_isomorphism(cycle, path);
  CHECK(none.status == SearchStatus::none);
  CHECK(none.reason.find("fingerprints differ") != std::string::npos);

  // Same degree data, not isomorphic: a 6-cycle against two 3-cycles.
  UnlabelledDigraph const six{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}};
  UnlabelledDigraph const two{6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}};
  CHECK(first_difference(graph_invariants(six), graph_invariants(two)) == std::nullopt);
  CHECK(find_isomorphism(six, two).status == SearchStatus::none);

  UnlabelledDigraph const loops{2, {{0, 0}, {0, 1}, {0, 1}}};
  UnlabelledDigraph const loops2{2, {{1, 0}, {1, 0}, {1, 1}}};
  auto const multi = find_isomorphism(loops, loops2);
  REQUIRE(multi.status == SearchStatus::found);
  CHECK(multi.certificate->mapping == std::vector<std::size_t>{1, 0});
}

TEST_CASE("budget exhaustion is reported as indeterminate") {
  // Ten isolated vertices against ten isolated vertices: one expansion per vertex.
  UnlabelledDigraph const g{10, {}};
  auto const result = find_isomorphism(g, g, 3);
  CHECK(result.status == SearchStatus::indeterminate);
  CHECK_FALSE(result.certificate.has_value());
  CHECK(find_isomorphism(g, g, 10).status == SearchStatus::found);
}

TEST_CASE("search certificates on right balls agree with f up to automorphism") {
  for (std::size_t r = 0; r <= 6; ++r) {
    auto const bm = right_ball_M(r);
    auto const bn = right_ball_N(r);
    auto const gm = strip_labels(bm);
    auto const gn = strip_labels(bn);
    auto const search = find_isomorphism(gm, gn);
    auto const explicit_report = verify_explicit_iso(bm, bn);
    REQUIRE(search.status == SearchStatus::found);
    REQUIRE(explicit_report.status == IsoStatus::verified);
    CHECK(validate_certificate(gm, gn, search.certificate->mapping));
    CHECK(validate_certificate(gm, gn, explicit_report.mapping));

    // sigma = search o f^-1 must be an automorphism of the N ball.
    std::vector<std::size_t> f_inverse(gn.n);
    for (std::size_t i = 0; i < gm.n; ++i) {
      f_inverse[explicit_report.mapping[i]] = i;
    }
    std::vector<std::size_t> sigma(gn.n);
    for (std::size_t v = 0; v < gn.n; ++v) {
      sigma[v] = search.certificate->mapping[f_inverse[v]];
    }
    CHECK(validate_certificate(gn, gn, sigma));
  }
}

TEST_CASE("random relabelled digraphs are found isomorphic") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const n = 1 + rng() % 30;
    auto const g = random_digraph(rng, n, rng() % (3 * n));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto const h = permuted(g, perm);
    auto const result = find_isomorphism(g, h);
    REQUIRE(result.status == SearchStatus::found);
    CHECK(validate_certificate(g, h, result.certificate->mapping));
  }
}

TEST_CASE("planted non-isomorphism: differing fingerprints never yield a certificate") {
  std::mt19937 rng(99);
  int planted = 0;
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t const n = 2 + rng() % 12;
    auto const g = random_digraph(rng, n, 1 + rng() % (2 * n));
    auto h = g;
    h.arcs[rng() % h.arcs.size()].dst = rng() % n;
    std::sort(h.arcs.begin(), h.arcs.end());
    if (!first_difference(graph_invariants(g), graph_invariants(h))) {
      continue;
    }
    ++planted;
    auto const result = find_isomorphism(g, h, SIZE_MAX);
    CHECK(result.status == SearchStatus::none);
    CHECK_FALSE(result.certificate.has_value());
  }
  CHECK(planted > 50);
}

TEST_CASE("validate_certificate") {
  UnlabelledDigraph const g{2, {{0, 1}}};
  CHECK(validate_certificate(g, g, {0, 1}));
  CHECK_FALSE(validate_certificate(g, g, {1, 0}));
  CHECK_FALSE(validate_certificate(g, g, {0, 0}));
  CHECK_FALSE(validate_certificate(g, g, {0}));
}

TEST_CASE("left Cayley balls") {
  auto const one = separate_left_graphs(1);
  CHECK_FALSE(one.separated);
  REQUIRE(one.steps.size() == 1);
  CHECK(one.steps[0].vertices == 3);
  CHECK(one.steps[0].search == SearchStatus::found);

  auto const eight = separate_left_graphs(8);
  CHECK(eight.separated);
  CHECK(eight.radius == 4);
  CHECK(eight.invariant == "two-step degree profile");
  CHECK(eight.steps.size() == 4);

  auto const self = separate_left_graphs(system_M(), system_M(), 6);
  CHECK_FALSE(self.separated);
  for (auto const& s : self.steps) {
    CHECK(s.search == SearchStatus::found);
  }
  CHECK_THROWS_AS(separate_left_graphs(0), InputError);
}

TEST_CASE("report JSON") {
  auto const report = verify_explicit_iso(right_ball_M(4), right_ball_N(4));
  auto const text = to_json(report);
  CHECK(iso_report_from_json(text) == report);
  auto const j = nlohmann::json::parse(text);
  CHECK(j.at("status") == "verified");
  CHECK(j.at("witness").is_null());
  CHECK(j.at("mapping").size() == 30);

  auto tampered = right_ball_N(4);
  tampered.edges.pop_back();
  auto const bad = verify_explicit_iso(right_ball_M(4), tampered);
  CHECK(iso_report_from_json(to_json(bad)) == bad);

  auto const search = find_isomorphism(strip_labels(right_ball_M(3)), strip_labels(right_ball_N(3)));
  auto const sj = nlohmann::json::parse(to_json(search));
  CHECK(sj.at("status") == "found");
  CHECK(sj.at("mapping").size() == 15);

  auto const sep = nlohmann::json::parse(to_json(separate_left_graphs(5)));
  CHECK(sep.at("radius") == 4);
  CHECK(sep.at("steps").size() == 4);
  CHECK_THROWS_AS(iso_report_from_json("{}"), InputError);
}
