#include "cayleyforge/graph_iso.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cayleyforge/errors.hpp"
#include "cayleyforge/presentations.hpp"

namespace cayleyforge {

namespace {

std::size_t constexpr kUnmapped = static_cast<std::size_t>(-1);

// (neighbour, multiplicity), sorted by neighbour.
using Adjacency = std::vector<std::vector<std::pair<std::size_t, std::size_t>>>;

struct Adjacencies {
  Adjacency out;
  Adjacency in;
};

Adjacencies adjacencies(UnlabelledDigraph const& g) {
  Adjacencies adj{Adjacency(g.n), Adjacency(g.n)};
  // g.arcs is sorted, so out-lists come out sorted; in-lists are sorted after.
  for (auto const& a : g.arcs) {
    auto& o = adj.out[a.src];
    if (!o.empty() && o.back().first == a.dst) {
      ++o.back().second;
    } else {
      o.emplace_back(a.dst, 1);
    }
  }
  for (std::size_t v = 0; v < g.n; ++v) {
    for (auto [w, m] : adj.out[v]) {
      adj.in[w].emplace_back(v, m);
    }
  }
  return adj;
}

std::size_t multiplicity(Adjacency const& adj, std::size_t v, std::size_t w) {
  auto const& list = adj[v];
  auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(w, std::size_t{0}));
  return (it != list.end() && it->first == w) ? it->second : 0;
}

using Signature = std::tuple<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>,
                             std::vector<std::pair<std::size_t, std::size_t>>>;

// Joint colour refinement of both graphs until the partition is stable.
// Colours are canonical: they depend only on the isomorphism types involved.
void refine(Adjacencies const& a1, Adjacencies const& a2, std::vector<std::size_t>& c1,
            std::vector<std::size_t>& c2) {
  c1.assign(a1.out.size(), 0);
  c2.assign(a2.out.size(), 0);
  std::size_t classes = 1;
  auto signature = [](Adjacencies const& a, std::vector<std::size_t> const& c, std::size_t v) {
    Signature sig;
    std::get<0>(sig) = c[v];
    for (auto [w, m] : a.out[v]) {
      std::get<1>(sig).emplace_back(c[w], m);
    }
    for (auto [w, m] : a.in[v]) {
      std::get<2>(sig).emplace_back(c[w], m);
    }
    std::sort(std::get<1>(sig).begin(), std::get<1>(sig).end());
    std::sort(std::get<2>(sig).begin(), std::get<2>(sig).end());
    return sig;
  };
  while (true) {
    std::vector<Signature> s1(c1.size());
    std::vector<Signature> s2(c2.size());
    std::map<Signature, std::size_t> ids;
    for (std::size_t v = 0; v < c1.size(); ++v) {
      s1[v] = signature(a1, c1, v);
      ids.emplace(s1[v], 0);
    }
    for (std::size_t v = 0; v < c2.size(); ++v) {
      s2[v] = signature(a2, c2, v);
      ids.emplace(s2[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) {
      id = next++;
    }
    for (std::size_t v = 0; v < c1.size(); ++v) {
      c1[v] = ids.at(s1[v]);
    }
    for (std::size_t v = 0; v < c2.size(); ++v) {
      c2[v] = ids.at(s2[v]);
    }
    if (ids.size() == classes) {
      return;
    }
    classes = ids.size();
  }
}

class Matcher {
 public:
  Matcher(Adjacencies const& a1, Adjacencies const& a2, std::vector<std::size_t> const& c1,
          std::vector<std::size_t> const& c2, std::size_t budget)
      : _a1(a1), _a2(a2), _c1(c1), _c2(c2), _budget(budget),
        _map1(c1.size(), kUnmapped), _map2(c2.size(), kUnmapped) {
    build_order();
  }

  // nullopt when the budget ran out.
  std::optional<bool> run() {
    try {
      return extend(0);
    } catch (BudgetExhausted const&) {
      return std::nullopt;
    }
  }

  std::vector<std::size_t> const& mapping() const { return _map1; }
  std::size_t expansions() const { return _expansions; }

 private:
  struct BudgetExhausted {};

  struct Anchor {
    std::size_t vertex = kUnmapped;
    bool forward = true;  // the new vertex is a successor of the anchor
  };

  void build_order() {
    std::size_t const n = _c1.size();
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : _c1) {
      ++class_size[c];
    }
    std::vector<std::size_t> connected(n, 0);
    std::vector<bool> placed(n, false);
    _anchor.assign(n, Anchor{});
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = kUnmapped;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) {
          continue;
        }
        if (best == kUnmapped) {
          best = v;
          continue;
        }
        bool const v_conn = connected[v] > 0;
        bool const b_conn = connected[best] > 0;
        if (v_conn != b_conn) {
          if (v_conn) {
            best = v;
          }
          continue;
        }
        if (class_size[_c1[v]] < class_size[_c1[best]]) {
          best = v;
        }
      }
      placed[best] = true;
      _order.push_back(best);
      for (auto [w, m] : _a1.out[best]) {
        if (!placed[w]) {
          if (connected[w]++ == 0) {
            _anchor[w] = {best, true};
          }
        }
      }
      for (auto [w, m] : _a1.in[best]) {
        if (!placed[w]) {
          if (connected[w]++ == 0) {
            _anchor[w] = {best, false};
          }
        }
      }
    }
  }

  bool feasible(std::size_t v, std::size_t w) const {
    if (multiplicity(_a1.out, v, v) != multiplicity(_a2.out, w, w)) {
      return false;
    }
    auto check = [&](Adjacency const& adj1, Adjacency const& adj2) {
      for (auto [x, m] : adj1[v]) {
        if (x != v && _map1[x] != kUnmapped && multiplicity(adj2, w, _map1[x]) != m) {
          return false;
        }
      }
      for (auto [y, m] : adj2[w]) {
        if (y != w && _map2[y] != kUnmapped && multiplicity(adj1, v, _map2[y]) != m) {
          return false;
        }
      }
      return true;
    };
    return check(_a1.out, _a2.out) && check(_a1.in, _a2.in);
  }

  bool try_candidate(std::size_t depth, std::size_t v, std::size_t w) {
    if (_map2[w] != kUnmapped || _c2[w] != _c1[v]) {
      return false;
    }
    if (++_expansions > _budget) {
      throw BudgetExhausted{};
    }
    if (!feasible(v, w)) {
      return false;
    }
    _map1[v] = w;
    _map2[w] = v;
    if (extend(depth + 1)) {
      return true;
    }
    _map1[v] = kUnmapped;
    _map2[w] = kUnmapped;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == _order.size()) {
      return true;
    }
    std::size_t const v = _order[depth];
    Anchor const anchor = _anchor[v];
    if (anchor.vertex != kUnmapped) {
      auto const& list = anchor.forward ? _a2.out[_map1[anchor.vertex]]
                                        : _a2.in[_map1[anchor.vertex]];
      for (auto [w, m] : list) {
        if (try_candidate(depth, v, w)) {
          return true;
        }
      }
      return false;
    }
    for (std::size_t w = 0; w < _c2.size(); ++w) {
      if (try_candidate(depth, v, w)) {
        return true;
      }
    }
    return false;
  }

  Adjacencies const& _a1;
  Adjacencies const& _a2;
  std::vector<std::size_t> const& _c1;
  std::vector<std::size_t> const& _c2;
  std::size_t _budget;
  std::size_t _expansions = 0;
  std::vector<std::size_t> _map1;
  std::vector<std::size_t> _map2;
  std::vector<std::size_t> _order;
  std::vector<Anchor> _anchor;
};

}  // namespace

std::string_view to_string(IsoStatus s) noexcept {
  return s == IsoStatus::verified ? "verified" : "counterexample";
}

std::string_view to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::indeterminate: return "indeterminate";
  }
  return "?";
}

bool validate_certificate(UnlabelledDigraph const& g1, UnlabelledDigraph const& g2,
                          std::vector<std::size_t> const& mapping) {
  if (g1.n != g2.n || mapping.size() != g1.n || g1.arcs.size() != g2.arcs.size()) {
    return false;
  }
  std::vector<bool> hit(g2.n, false);
  for (auto w : mapping) {
    if (w >= g2.n || hit[w]) {
      return false;
    }
    hit[w] = true;
  }
  std::vector<Arc> image;
  image.reserve(g1.arcs.size());
  for (auto const& a : g1.arcs) {
    image.push_back({mapping[a.src], mapping[a.dst]});
  }
  std::sort(image.begin(), image.end());
  std::vector<Arc> target = g2.arcs;
  std::sort(target.begin(), target.end());
  return image == target;
}

SearchResult find_isomorphism(UnlabelledDigraph const& g1, UnlabelledDigraph const& g2,
                              std::size_t budget) {
  SearchResult result;
  if (auto diff = first_difference(graph_invariants(g1), graph_invariants(g2))) {
    result.status = SearchStatus::none;
    result.reason = "fingerprints differ: " + *diff;
    return result;
  }
  auto const a1 = adjacencies(g1);
  auto const a2 = adjacencies(g2);
  std::vector<std::size_t> c1;
  std::vector<std::size_t> c2;
  refine(a1, a2, c1, c2);
  {
    auto h1 = c1;
    auto h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) {
      result.status = SearchStatus::none;
      result.reason = "colour refinement classes differ";
      return result;
    }
  }

  Matcher matcher(a1, a2, c1, c2, budget);
  auto const outcome = matcher.run();
  result.expansions = matcher.expansions();
  if (!outcome) {
    result.status = SearchStatus::indeterminate;
    result.reason = "search budget of " + std::to_string(budget) + " expansions exhausted";
    return result;
  }
  if (!*outcome) {
    result.status = SearchStatus::none;
    result.reason = "exhaustive search found no isomorphism";
    return result;
  }
  if (!validate_certificate(g1, g2, matcher.mapping())) {
    throw std::logic_error("isomorphism search produced an invalid certificate");
  }
  result.status = SearchStatus::found;
  result.certificate = IsoCertificate{matcher.mapping()};
  result.reason = "isomorphism found";
  return result;
}

SeparationReport separate_left_graphs(RewritingSystem const& first, RewritingSystem const& second,
                                      std::size_t max_radius, std::size_t budget) {
  if (max_radius < 1) {
    throw InputError("left-graph separation needs a radius of at least 1");
  }
  SeparationReport report;
  for (std::size_t radius = 1; radius <= max_radius; ++radius) {
    auto const g1 = strip_labels(build_ball(first, Side::left, radius));
    auto const g2 = strip_labels(build_ball(second, Side::left, radius));
    SeparationStep step;
    step.radius = radius;
    step.vertices = g1.n;
    step.arcs_first = g1.arcs.size();
    step.arcs_second = g2.arcs.size();
    step.invariant = first_difference(graph_invariants(g1), graph_invariants(g2));
    if (step.invariant) {
      report.separated = true;
      report.radius = radius;
      report.invariant = *step.invariant;
      report.steps.push_back(std::move(step));
      return report;
    }
    auto const search = find_isomorphism(g1, g2, budget);
    step.search = search.status;
    report.steps.push_back(step);
    if (search.status == SearchStatus::none) {
      report.separated = true;
      report.radius = radius;
      report.invariant = "exhaustive isomorphism search";
      return report;
    }
  }
  return report;
}

SeparationReport separate_left_graphs(std::size_t max_radius, std::size_t budget) {
  return separate_left_graphs(system_M(), system_N(), max_radius, budget);
}

}  // namespace cayleyforge
