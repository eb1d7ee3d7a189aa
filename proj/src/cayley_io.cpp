#include <algorithm>
#include <json.hpp>

#include "cayleyforge/cayley.hpp"
#include "cayleyforge/errors.hpp"

namespace cayleyforge {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dot_label(Alphabet const& alphabet, Word const& w) {
  return w.empty() ? std::string("ε") : alphabet.render(w);
}

std::string letter(Alphabet const& alphabet, Symbol g) {
  return std::string(1, alphabet.letter(g));
}

Symbol parse_letter(Alphabet const& alphabet, std::string const& s) {
  if (s.size() != 1) {
    throw InputError("generator must be a single character, got '" + s + "'");
  }
  return alphabet.symbol(s[0]);
}

std::size_t checked_index(ordered_json const& j, std::size_t n, char const* what) {
  auto const i = j.get<std::size_t>();
  if (i >= n) {
    throw InputError(std::string(what) + " index " + std::to_string(i) + " out of range");
  }
  return i;
}

}  // namespace

std::string export_dot(CayleyBall const& ball) {
  std::string out = "digraph cayley_ball {\n";
  out += "  // side=" + std::string(to_string(ball.side)) + " radius="
         + std::to_string(ball.radius) + " policy=" + std::string(to_string(ball.policy)) + "\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    out += "  " + std::to_string(i) + " [label=\"" + dot_label(ball.alphabet, ball.vertices[i])
           + "\"];\n";
  }
  for (auto const& e : ball.edges) {
    out += "  " + std::to_string(e.src) + " -> " + std::to_string(e.dst) + " [label=\""
           + letter(ball.alphabet, e.generator) + "\"];\n";
  }
  for (std::size_t i = 0; i < ball.frontier.size(); ++i) {
    auto const& f = ball.frontier[i];
    out += "  f" + std::to_string(i) + " [label=\"" + ball.alphabet.render(f.target)
           + "\", style=dashed];\n";
    out += "  " + std::to_string(f.src) + " -> f" + std::to_string(i) + " [label=\""
           + letter(ball.alphabet, f.generator) + "\", style=dashed];\n";
  }
  out += "}\n";
  return out;
}

std::string export_dot(UnlabelledDigraph const& g) {
  std::string out = "digraph unlabelled {\n";
  for (std::size_t i = 0; i < g.n; ++i) {
    out += "  " + std::to_string(i) + ";\n";
  }
  for (auto const& a : g.arcs) {
    out += "  " + std::to_string(a.src) + " -> " + std::to_string(a.dst) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(CayleyBall const& ball) {
  ordered_json j;
  j["side"] = to_string(ball.side);
  j["radius"] = ball.radius;
  j["policy"] = to_string(ball.policy);
  j["alphabet"] = ball.alphabet.letters();
  auto& vertices = j["vertices"] = ordered_json::array();
  for (auto const& w : ball.vertices) {
    vertices.push_back(ball.alphabet.render(w));
  }
  auto& edges = j["edges"] = ordered_json::array();
  for (auto const& e : ball.edges) {
    edges.push_back(ordered_json::array({e.src, e.dst, letter(ball.alphabet, e.generator)}));
  }
  auto& frontier = j["frontier"] = ordered_json::array();
  for (auto const& f : ball.frontier) {
    frontier.push_back(ordered_json::array(
        {f.src, letter(ball.alphabet, f.generator), ball.alphabet.render(f.target)}));
  }
  return j.dump() + "\n";
}

std::string export_json(UnlabelledDigraph const& g) {
  ordered_json j;
  j["n"] = g.n;
  auto& arcs = j["arcs"] = ordered_json::array();
  for (auto const& a : g.arcs) {
    arcs.push_back(ordered_json::array({a.src, a.dst}));
  }
  return j.dump() + "\n";
}

CayleyBall import_ball_json(std::string_view text) {
  try {
    auto const j = ordered_json::parse(text);
    CayleyBall ball;
    ball.side = parse_side(j.at("side").get<std::string>());
    ball.radius = j.at("radius").get<std::size_t>();
    ball.policy = j.contains("policy") ? parse_policy(j.at("policy").get<std::string>())
                                       : FrontierPolicy::closed;
    if (j.contains("alphabet")) {
      ball.alphabet = Alphabet(j.at("alphabet").get<std::string>());
      for (auto const& v : j.at("vertices")) {
        ball.vertices.push_back(ball.alphabet.parse(v.get<std::string>()));
      }
    } else {
      // Infer the alphabet from edge labels in order of first appearance.
      std::string letters;
      for (auto const& e : j.at("edges")) {
        auto const g = e.at(2).get<std::string>();
        if (g.size() == 1 && letters.find(g[0]) == std::string::npos) {
          letters += g;
        }
      }
      for (auto const& v : j.at("vertices")) {
        for (char c : v.get<std::string>()) {
          if (letters.find(c) == std::string::npos) {
            letters += c;
          }
        }
      }
      std::sort(letters.begin(), letters.end());
      ball.alphabet = Alphabet(letters);
      for (auto const& v : j.at("vertices")) {
        ball.vertices.push_back(ball.alphabet.parse(v.get<std::string>()));
      }
    }
    std::size_t const n = ball.vertices.size();
    for (auto const& e : j.at("edges")) {
      if (e.size() != 3) {
        throw InputError("edge entries must be [src, dst, \"g\"]");
      }
      ball.edges.push_back({checked_index(e.at(0), n, "edge source"),
                            checked_index(e.at(1), n, "edge target"),
                            parse_letter(ball.alphabet, e.at(2).get<std::string>())});
    }
    if (j.contains("frontier")) {
      for (auto const& f : j.at("frontier")) {
        if (f.size() != 3) {
          throw InputError("frontier entries must be [src, \"g\", \"target\"]");
        }
        ball.frontier.push_back({checked_index(f.at(0), n, "frontier source"),
                                 parse_letter(ball.alphabet, f.at(1).get<std::string>()),
                                 ball.alphabet.parse(f.at(2).get<std::string>())});
      }
    }
    return ball;
  } catch (nlohmann::json::exception const& e) {
    throw InputError(std::string("malformed ball JSON: ") + e.what());
  }
}

UnlabelledDigraph import_digraph_json(std::string_view text) {
  try {
    auto const j = ordered_json::parse(text);
    if (j.contains("vertices")) {
      return strip_labels(import_ball_json(text));
    }
    UnlabelledDigraph g;
    g.n = j.at("n").get<std::size_t>();
    for (auto const& a : j.at("arcs")) {
      if (a.size() != 2) {
        throw InputError("arc entries must be [src, dst]");
      }
      g.arcs.push_back({checked_index(a.at(0), g.n, "arc source"),
                        checked_index(a.at(1), g.n, "arc target")});
    }
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
  } catch (nlohmann::json::exception const& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace cayleyforge
