#include <map>

#include "cayleyforge/errors.hpp"
#include "cayleyforge/graph_iso.hpp"
#include "cayleyforge/presentations.hpp"

namespace cayleyforge {

namespace {

void require_right_closed(CayleyBall const& ball, char const* name) {
  if (ball.side != Side::right) {
    throw InputError(std::string(name) + " is not a right Cayley ball");
  }
  if (ball.policy != FrontierPolicy::closed) {
    throw InputError(std::string(name) + " is not a closed ball");
  }
  if (ball.alphabet.size() != 2) {
    throw InputError(std::string(name) + " is not over a two-letter alphabet");
  }
}

std::map<Arc, std::size_t> arc_counts(UnlabelledDigraph const& g) {
  std::map<Arc, std::size_t> counts;
  for (auto const& a : g.arcs) {
    ++counts[a];
  }
  return counts;
}

std::map<Arc, Symbol> generator_of(CayleyBall const& ball) {
  std::map<Arc, Symbol> out;
  for (auto const& e : ball.edges) {
    out.emplace(Arc{e.src, e.dst}, e.generator);
  }
  return out;
}

std::size_t count_of(std::map<Arc, std::size_t> const& counts, Arc a) {
  auto it = counts.find(a);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace

IsoReport verify_explicit_iso(CayleyBall const& ball_m, CayleyBall const& ball_n) {
  require_right_closed(ball_m, "first ball");
  require_right_closed(ball_n, "second ball");
  if (ball_m.radius != ball_n.radius) {
    throw InputError("balls have different radii (" + std::to_string(ball_m.radius) + " and "
                     + std::to_string(ball_n.radius) + ")");
  }

  IsoReport report;
  auto fail = [&report](IsoWitness w) {
    if (!report.witness) {
      report.status = IsoStatus::counterexample;
      report.witness = std::move(w);
    }
  };

  // Vertex bijection.
  std::size_t constexpr none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> inverse(ball_n.vertices.size(), none);
  report.mapping.assign(ball_m.vertices.size(), none);
  for (std::size_t i = 0; i < ball_m.vertices.size(); ++i) {
    ++report.vertices_checked;
    auto const image = ball_n.index_of(map_f(ball_m.vertices[i]));
    if (!image) {
      fail({"vertex", "forward", {i, i}, "f(" + ball_m.alphabet.render(ball_m.vertices[i])
                                             + ") lies outside the second ball"});
      continue;
    }
    if (inverse[*image] != none) {
      fail({"vertex", "forward", {i, inverse[*image]}, "f is not injective"});
      continue;
    }
    inverse[*image] = i;
    report.mapping[i] = *image;
  }
  for (std::size_t j = 0; j < inverse.size(); ++j) {
    if (inverse[j] == none) {
      fail({"vertex", "backward", {j, j},
            ball_n.alphabet.render(ball_n.vertices[j]) + " has no preimage under f"});
    }
  }
  if (report.witness) {
    return report;
  }

  // Arcs in both directions, multiplicity-aware.
  auto const counts_m = arc_counts(strip_labels(ball_m));
  auto const counts_n = arc_counts(strip_labels(ball_n));
  for (auto const& [arc, mult] : counts_m) {
    report.arcs_checked_forward += mult;
    Arc const image{report.mapping[arc.src], report.mapping[arc.dst]};
    if (count_of(counts_n, image) != mult) {
      fail({"arc", "forward", arc, "image of arc is not an arc of the same multiplicity"});
    }
  }
  for (auto const& [arc, mult] : counts_n) {
    report.arcs_checked_backward += mult;
    Arc const preimage{inverse[arc.src], inverse[arc.dst]};
    if (count_of(counts_m, preimage) != mult) {
      fail({"arc", "backward", arc, "preimage of arc is not an arc of the same multiplicity"});
    }
  }
  if (report.witness) {
    return report;
  }

  // Edge types against the tables.
  auto const gen_m = generator_of(ball_m);
  auto const gen_n = generator_of(ball_n);
  for (auto const& e : ball_m.edges) {
    auto const& src = ball_m.vertices[e.src];
    std::string const label_m = table_edge_M(src, e.generator).label;
    std::size_t const r = classify_M(src).t % 4;
    Arc const image{report.mapping[e.src], report.mapping[e.dst]};
    std::string const label_n =
        table_edge_N(ball_n.vertices[image.src], gen_n.at(image)).label;
    ++report.edge_types[{label_m, label_n}];
    if (label_n != image_edge_type_M_to_N(label_m, r)) {
      fail({"edge-type", "forward", {e.src, e.dst},
            label_m + " maps to " + label_n + ", expected "
                + std::string(image_edge_type_M_to_N(label_m, r))});
    }
  }
  for (auto const& e : ball_n.edges) {
    auto const& src = ball_n.vertices[e.src];
    std::string const label_n = table_edge_N(src, e.generator).label;
    std::size_t const r = classify_N(src).r;
    Arc const preimage{inverse[e.src], inverse[e.dst]};
    std::string const label_m =
        table_edge_M(ball_m.vertices[preimage.src], gen_m.at(preimage)).label;
    if (label_m != image_edge_type_N_to_M(label_n, r)) {
      fail({"edge-type", "backward", {e.src, e.dst},
            label_n + " maps to " + label_m + ", expected "
                + std::string(image_edge_type_N_to_M(label_n, r))});
    }
  }
  return report;
}

}  // namespace cayleyforge
