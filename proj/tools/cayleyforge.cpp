// Command-line front end. Exit codes: 0 success, 1 a checked property failed,
// 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "cayleyforge/cayley.hpp"
#include "cayleyforge/confluence.hpp"
#include "cayleyforge/errors.hpp"
#include "cayleyforge/graph_iso.hpp"
#include "cayleyforge/presentation_io.hpp"
#include "cayleyforge/presentations.hpp"
#include "cayleyforge/report_json.hpp"
#include "cayleyforge/rewriting.hpp"

namespace cf = cayleyforge;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string presentation = "builtin:M";
  std::string word;
  std::size_t radius = 6;
  std::size_t max_radius = 8;
  std::size_t schema_bound = cf::kDefaultSchemaBound;
  std::size_t n0 = 0;
  std::size_t budget = cf::kDefaultSearchBudget;
  std::string side = "right";
  std::string policy = "closed";
  std::string format = "text";
  std::string output;
  std::string graph1;
  std::string graph2;
  bool unlabelled = false;
};

void emit(Options const& opt, std::string const& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) {
    throw cf::InputError("cannot write '" + opt.output + "'");
  }
  out << text;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw cf::InputError("cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cf::RewritingSystem certified(Options const& opt) {
  auto system = cf::load_presentation(opt.presentation);
  if (system.is_certified()) {
    return system;
  }
  return cf::certify_complete(std::move(system), opt.schema_bound);
}

int cmd_reduce(Options const& opt) {
  auto const system = cf::load_presentation(opt.presentation);
  auto const& alphabet = system.alphabet();
  cf::Word const input = alphabet.parse(opt.word);
  auto const steps = cf::reduce_with_trace(system, input);
  cf::Word const result = steps.empty() ? input : steps.back().result;

  if (opt.format == "json") {
    ordered_json j;
    j["input"] = alphabet.render(input);
    j["normal_form"] = alphabet.render(result);
    auto& trace = j["steps"] = ordered_json::array();
    for (auto const& s : steps) {
      ordered_json step;
      step["rule"] = s.match.rule_index;
      step["rule_text"] = system.describe_rule(s.match.rule_index);
      step["position"] = s.match.position;
      step["exponent"] = s.match.exponent ? ordered_json(*s.match.exponent) : ordered_json(nullptr);
      step["result"] = alphabet.render(s.result);
      trace.push_back(std::move(step));
    }
    emit(opt, j.dump() + "\n");
    return kOk;
  }
  std::ostringstream out;
  out << (result.empty() ? "ε" : alphabet.render(result)) << "\n";
  out << "steps: " << steps.size() << "\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    auto const& s = steps[i];
    out << "  " << i + 1 << ". rule " << s.match.rule_index << " ["
        << system.describe_rule(s.match.rule_index) << "]";
    if (s.match.exponent) {
      out << " n=" << *s.match.exponent;
    }
    out << " at position " << s.match.position << " => " << alphabet.render(s.result) << "\n";
  }
  emit(opt, out.str());
  return kOk;
}

int cmd_confluence(Options const& opt) {
  auto const system = cf::load_presentation(opt.presentation);
  auto const report = cf::check_local_confluence(system, opt.schema_bound);
  if (opt.format == "json") {
    emit(opt, cf::to_json(report, system));
    return report.passed ? kOk : kFailed;
  }
  auto const& alphabet = system.alphabet();
  std::ostringstream out;
  out << "presentation: " << opt.presentation << "\n";
  out << "rules: " << system.rules().size() << " concrete, " << system.schemas().size()
      << " schemas\n";
  if (report.bounded) {
    out << "bounded certificate: schemas instantiated for exponents up to " << report.schema_bound
        << "\n";
  }
  out << "length-reducing: " << (report.length_reducing ? "yes" : "no") << "\n";
  if (report.length_reducing) {
    out << "critical pairs: " << report.critical.pairs.size() << " (" << report.overlap_count
        << " overlaps, " << report.containment_count << " containments)\n";
    out << "overlaps resolving to xyxyx: " << report.xyxyx_overlaps << "/" << report.overlap_count
        << "\n";
  }
  for (auto i : report.failures) {
    auto const& cp = report.critical.pairs[i];
    auto const& res = report.resolutions[i];
    out << "non-joining pair on " << alphabet.render(cp.source) << ": "
        << alphabet.render(cp.left_result) << " ->* " << alphabet.render(res.left_normal_form)
        << ", " << alphabet.render(cp.right_result) << " ->* "
        << alphabet.render(res.right_normal_form) << "\n";
  }
  out << "result: " << (report.passed ? "locally confluent" : "NOT locally confluent") << "\n";
  emit(opt, out.str());
  return report.passed ? kOk : kFailed;
}

int cmd_ball(Options const& opt) {
  auto const system = certified(opt);
  auto const ball =
      cf::build_ball(system, cf::parse_side(opt.side), opt.radius, cf::parse_policy(opt.policy));
  if (opt.format == "dot") {
    emit(opt, opt.unlabelled ? cf::export_dot(cf::strip_labels(ball)) : cf::export_dot(ball));
  } else if (opt.format == "json") {
    emit(opt, opt.unlabelled ? cf::export_json(cf::strip_labels(ball)) : cf::export_json(ball));
  } else {
    std::ostringstream out;
    out << "side: " << cf::to_string(ball.side) << "\nradius: " << ball.radius
        << "\nvertices: " << ball.vertices.size() << "\nedges: " << ball.edges.size()
        << "\nfrontier: " << ball.frontier.size() << "\n";
    emit(opt, out.str());
  }
  return kOk;
}

int cmd_verify_iso(Options const& opt) {
  auto const ball_m = cf::build_ball(cf::system_M(), cf::Side::right, opt.radius);
  auto const ball_n = cf::build_ball(cf::system_N(), cf::Side::right, opt.radius);
  auto const explicit_report = cf::verify_explicit_iso(ball_m, ball_n);
  auto const gm = cf::strip_labels(ball_m);
  auto const gn = cf::strip_labels(ball_n);
  auto const search = cf::find_isomorphism(gm, gn, opt.budget);
  bool const ok = explicit_report.status == cf::IsoStatus::verified
                  && search.status == cf::SearchStatus::found;

  if (opt.format == "json") {
    ordered_json j;
    j["radius"] = opt.radius;
    j["vertices"] = {gm.n, gn.n};
    j["arcs"] = {gm.arcs.size(), gn.arcs.size()};
    j["explicit"] = ordered_json::parse(cf::to_json(explicit_report));
    j["search"] = ordered_json::parse(cf::to_json(search));
    j["verified"] = ok;
    emit(opt, j.dump() + "\n");
    return ok ? kOk : kFailed;
  }
  std::ostringstream out;
  out << "right balls of radius " << opt.radius << "\n";
  out << "vertices: " << gm.n << " <-> " << gn.n << "\n";
  out << "arcs: " << gm.arcs.size() << " <-> " << gn.arcs.size() << "\n";
  out << "explicit map f: " << cf::to_string(explicit_report.status) << " ("
      << explicit_report.vertices_checked << " vertices, "
      << explicit_report.arcs_checked_forward << " arcs forward, "
      << explicit_report.arcs_checked_backward << " arcs backward)\n";
  if (explicit_report.witness) {
    auto const& w = *explicit_report.witness;
    out << "  witness: " << w.kind << " " << w.direction << " (" << w.arc.src << ", "
        << w.arc.dst << "): " << w.detail << "\n";
  }
  for (auto const& [types, count] : explicit_report.edge_types) {
    out << "  " << types.first << " -> " << types.second << ": " << count << "\n";
  }
  out << "independent search: " << cf::to_string(search.status) << " (" << search.expansions
      << " expansions)\n";
  out << "result: " << (ok ? "isomorphic" : "NOT verified") << "\n";
  emit(opt, out.str());
  return ok ? kOk : kFailed;
}

int cmd_truncation_test(Options const& opt) {
  auto const truncated = cf::truncated_system_M(opt.n0);
  auto const full = cf::system_M();
  cf::Word word{cf::kA};
  word.insert(word.end(), opt.n0 + 1, cf::kB);
  word.push_back(cf::kA);
  cf::Word const aba{cf::kA, cf::kB, cf::kA};

  bool const irreducible = cf::is_irreducible(truncated, word);
  bool const equal_in_m = cf::words_equal(full, word, aba);
  std::string const w = full.alphabet().render(word);
  std::ostringstream out;
  out << "truncated presentation: a b^n a -> a b a for n = 2.." << opt.n0 << " ("
      << truncated.rules().size() << " rules)\n";
  out << w << " irreducible in truncated system: " << (irreducible ? "yes" : "no") << "\n";
  out << w << " = aba in M: " << (equal_in_m ? "yes" : "no") << "\n";
  bool const ok = irreducible && equal_in_m;
  out << "result: " << (ok ? "pass" : "FAIL") << "\n";
  emit(opt, out.str());
  return ok ? kOk : kFailed;
}

int cmd_left_noniso(Options const& opt) {
  auto const report = cf::separate_left_graphs(opt.max_radius, opt.budget);
  if (opt.format == "json") {
    emit(opt, cf::to_json(report));
    return report.separated ? kOk : kFailed;
  }
  std::ostringstream out;
  for (auto const& s : report.steps) {
    out << "radius " << s.radius << ": " << s.vertices << " vertices, arcs " << s.arcs_first
        << " / " << s.arcs_second;
    if (s.invariant) {
      out << ", fingerprints differ (" << *s.invariant << ")";
    } else {
      out << ", fingerprints equal";
    }
    if (s.search) {
      out << ", search: " << cf::to_string(*s.search);
    }
    out << "\n";
  }
  if (report.separated) {
    out << "left balls separated at radius " << *report.radius << " by " << report.invariant
        << "\n";
    out << "(this separates the finite balls of the left Cayley graphs)\n";
  } else {
    out << "left balls not separated up to radius " << opt.max_radius << "\n";
  }
  emit(opt, out.str());
  return report.separated ? kOk : kFailed;
}

int cmd_find_iso(Options const& opt) {
  auto const g1 = cf::import_digraph_json(read_file(opt.graph1));
  auto const g2 = cf::import_digraph_json(read_file(opt.graph2));
  auto const result = cf::find_isomorphism(g1, g2, opt.budget);
  if (opt.format == "json") {
    emit(opt, cf::to_json(result));
  } else {
    std::ostringstream out;
    out << "status: " << cf::to_string(result.status) << "\nreason: " << result.reason
        << "\nexpansions: " << result.expansions << "\n";
    emit(opt, out.str());
  }
  return result.status == cf::SearchStatus::found ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String rewriting, Cayley graph balls and isomorphism checks for monoids"};
  app.require_subcommand(1);
  Options opt;

  auto add_presentation = [&opt](CLI::App* sub) {
    sub->add_option("presentation,-p,--presentation", opt.presentation,
                    "builtin:M, builtin:N or a presentation file")
        ->capture_default_str();
  };
  auto add_output = [&opt](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember(std::move(formats)))
        ->capture_default_str();
    sub->add_option("-o,--output", opt.output, "Write to this file instead of stdout");
  };

  auto* reduce = app.add_subcommand("reduce", "Reduce a word to normal form with a step trace");
  add_presentation(reduce);
  reduce->add_option("-w,--word", opt.word, "Word to reduce (empty for the identity)");
  add_output(reduce, {"text", "json"});

  auto* confluence =
      app.add_subcommand("confluence", "Check local confluence via critical pairs");
  add_presentation(confluence);
  confluence->add_option("--schema-bound", opt.schema_bound, "Largest schema exponent instantiated")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output(confluence, {"text", "json"});

  auto* ball = app.add_subcommand("ball", "Build a Cayley graph ball");
  add_presentation(ball);
  ball->add_option("--side", opt.side, "right or left")
      ->check(CLI::IsMember({"right", "left"}))
      ->capture_default_str();
  ball->add_option("-r,--radius", opt.radius, "Ball radius")->capture_default_str();
  ball->add_option("--policy", opt.policy, "closed or with_frontier")
      ->check(CLI::IsMember({"closed", "with_frontier"}))
      ->capture_default_str();
  ball->add_flag("--unlabelled", opt.unlabelled, "Export the unlabelled digraph");
  ball->add_option("--schema-bound", opt.schema_bound,
                   "Schema bound used to certify file presentations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  opt.format = "text";
  add_output(ball, {"text", "dot", "json"});

  auto* verify = app.add_subcommand(
      "verify-iso", "Check the explicit map f and an independent search on the right balls of M, N");
  verify->add_option("-r,--radius", opt.radius, "Ball radius")->capture_default_str();
  verify->add_option("--budget", opt.budget, "Search node-expansion limit")->capture_default_str();
  add_output(verify, {"text", "json"});

  auto* truncation = app.add_subcommand(
      "truncation-test", "Show a b^(n0+1) a is irreducible for the first n0 relations of M");
  truncation->add_option("--n0", opt.n0, "Number of relations kept (>= 2)")->required();
  truncation->add_option("-o,--output", opt.output, "Write to this file instead of stdout");

  auto* left = app.add_subcommand("left-noniso", "Separate the left Cayley balls of M and N");
  left->add_option("--max-radius", opt.max_radius, "Largest radius tried")->capture_default_str();
  left->add_option("--budget", opt.budget, "Search node-expansion limit")->capture_default_str();
  add_output(left, {"text", "json"});

  auto* find = app.add_subcommand("find-iso", "Search for an isomorphism between two JSON graphs");
  find->add_option("graph1", opt.graph1, "First graph (ball or digraph JSON)")->required();
  find->add_option("graph2", opt.graph2, "Second graph (ball or digraph JSON)")->required();
  find->add_option("--budget", opt.budget, "Search node-expansion limit")->capture_default_str();
  add_output(find, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*reduce) return cmd_reduce(opt);
    if (*confluence) return cmd_confluence(opt);
    if (*ball) return cmd_ball(opt);
    if (*verify) return cmd_verify_iso(opt);
    if (*truncation) return cmd_truncation_test(opt);
    if (*left) return cmd_left_noniso(opt);
    if (*find) return cmd_find_iso(opt);
  } catch (cf::InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (cf::ClassificationError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (cf::ContractError const& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFailed;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
