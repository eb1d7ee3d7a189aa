#include "cayleyforge/cayley.hpp"

#include <algorithm>
#include <map>

#include "cayleyforge/errors.hpp"
#include "cayleyforge/parallel.hpp"
#include "cayleyforge/presentations.hpp"

namespace cayleyforge {

std::string_view to_string(Side side) noexcept {
  return side == Side::right ? "right" : "left";
}

std::string_view to_string(FrontierPolicy policy) noexcept {
  return policy == FrontierPolicy::closed ? "closed" : "with_frontier";
}

Side parse_side(std::string_view text) {
  if (text == "right") {
    return Side::right;
  }
  if (text == "left") {
    return Side::left;
  }
  throw InputError("side must be 'right' or 'left', got '" + std::string(text) + "'");
}

FrontierPolicy parse_policy(std::string_view text) {
  if (text == "closed") {
    return FrontierPolicy::closed;
  }
  if (text == "with_frontier" || text == "frontier") {
    return FrontierPolicy::with_frontier;
  }
  throw InputError("policy must be 'closed' or 'with_frontier', got '" + std::string(text) + "'");
}

std::optional<std::size_t> CayleyBall::index_of(std::span<Symbol const> w) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), w,
                             [](Word const& lhs, std::span<Symbol const> rhs) {
                               return shortlex_less(lhs, rhs);
                             });
  if (it == vertices.end() || !std::equal(it->begin(), it->end(), w.begin(), w.end())) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - vertices.begin());
}

Word edge_target(RewritingSystem const& system, std::span<Symbol const> v, Symbol g, Side side) {
  if (!system.alphabet().contains(g)) {
    throw InputError("generator id " + std::to_string(g) + " outside alphabet {"
                     + system.alphabet().letters() + "}");
  }
  Word w;
  w.reserve(v.size() + 1);
  if (side == Side::left) {
    w.push_back(g);
  }
  w.insert(w.end(), v.begin(), v.end());
  if (side == Side::right) {
    w.push_back(g);
  }
  return normal_form(system, w);
}

CayleyBall build_ball(RewritingSystem const& system, Side side, std::size_t radius,
                      FrontierPolicy policy) {
  if (!system.is_certified()) {
    throw ContractError("build_ball requires a system certified complete");
  }
  CayleyBall ball;
  ball.side = side;
  ball.radius = radius;
  ball.policy = policy;
  ball.alphabet = system.alphabet();
  ball.vertices = enumerate_normal_forms(system, radius);

  std::size_t const k = system.alphabet().size();
  std::vector<Word> targets(ball.vertices.size() * k);
  parallel_for(targets.size(), [&](std::size_t i) {
    targets[i] = edge_target(system, ball.vertices[i / k], static_cast<Symbol>(i % k), side);
  });

  for (std::size_t i = 0; i < targets.size(); ++i) {
    std::size_t const src = i / k;
    auto const g = static_cast<Symbol>(i % k);
    if (targets[i].size() <= radius) {
      auto dst = ball.index_of(targets[i]);
      if (!dst) {
        throw ContractError("edge target is not a normal form of the ball");
      }
      ball.edges.push_back({src, *dst, g});
    } else if (policy == FrontierPolicy::with_frontier) {
      ball.frontier.push_back({src, g, std::move(targets[i])});
    }
  }
  return ball;
}

UnlabelledDigraph strip_labels(CayleyBall const& ball) {
  UnlabelledDigraph g;
  g.n = ball.vertices.size();
  g.arcs.reserve(ball.edges.size());
  for (auto const& e : ball.edges) {
    g.arcs.push_back({e.src, e.dst});
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

Fingerprint graph_invariants(UnlabelledDigraph const& g) {
  std::vector<DegreePair> deg(g.n);
  for (auto const& a : g.arcs) {
    ++deg[a.src].out;
    ++deg[a.dst].in;
  }
  std::vector<TwoStepProfile> profiles(g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    profiles[v].self = deg[v];
  }
  for (auto const& a : g.arcs) {
    profiles[a.src].successors.push_back(deg[a.dst]);
    profiles[a.dst].predecessors.push_back(deg[a.src]);
  }
  for (auto& p : profiles) {
    std::sort(p.successors.begin(), p.successors.end());
    std::sort(p.predecessors.begin(), p.predecessors.end());
  }
  Fingerprint fp;
  fp.vertices = g.n;
  fp.arcs = g.arcs.size();
  fp.degrees = std::move(deg);
  std::sort(fp.degrees.begin(), fp.degrees.end());
  std::sort(profiles.begin(), profiles.end());
  fp.profiles = std::move(profiles);
  return fp;
}

std::optional<std::string> first_difference(Fingerprint const& lhs, Fingerprint const& rhs) {
  if (lhs.vertices != rhs.vertices) {
    return "vertex count";
  }
  if (lhs.arcs != rhs.arcs) {
    return "arc count";
  }
  if (lhs.degrees != rhs.degrees) {
    return "in/out degree pairs";
  }
  if (lhs.profiles != rhs.profiles) {
    return "two-step degree profile";
  }
  return std::nullopt;
}

}  // namespace cayleyforge
