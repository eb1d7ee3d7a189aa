#include "cayleyforge/report_json.hpp"

#include <json.hpp>

#include "cayleyforge/errors.hpp"

namespace cayleyforge {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string_view to_string(OverlapKind kind) {
  return kind == OverlapKind::overlap ? "overlap" : "containment";
}

}  // namespace

std::string to_json(ConfluenceReport const& report, RewritingSystem const& system) {
  auto const& alphabet = system.alphabet();
  ordered_json j;
  j["passed"] = report.passed;
  j["length_reducing"] = report.length_reducing;
  j["bounded"] = report.bounded;
  j["schema_bound"] = report.schema_bound;
  j["critical_pairs"] = report.critical.pairs.size();
  j["overlaps"] = report.overlap_count;
  j["containments"] = report.containment_count;
  j["xyxyx_overlaps"] = report.xyxyx_overlaps;
  auto& failures = j["failures"] = ordered_json::array();
  for (auto i : report.failures) {
    auto const& cp = report.critical.pairs[i];
    auto const& res = report.resolutions[i];
    failures.push_back({{"source", alphabet.render(cp.source)},
                        {"kind", to_string(cp.kind)},
                        {"left_result", alphabet.render(cp.left_result)},
                        {"right_result", alphabet.render(cp.right_result)},
                        {"left_normal_form", alphabet.render(res.left_normal_form)},
                        {"right_normal_form", alphabet.render(res.right_normal_form)}});
  }
  return j.dump() + "\n";
}

std::string to_json(IsoReport const& report) {
  ordered_json j;
  j["status"] = to_string(report.status);
  j["mapping"] = report.mapping;
  if (report.witness) {
    auto const& w = *report.witness;
    j["witness"] = {{"kind", w.kind},
                    {"direction", w.direction},
                    {"arc", {w.arc.src, w.arc.dst}},
                    {"detail", w.detail}};
  } else {
    j["witness"] = nullptr;
  }
  j["stats"] = {{"vertices_checked", report.vertices_checked},
                {"arcs_checked_forward", report.arcs_checked_forward},
                {"arcs_checked_backward", report.arcs_checked_backward}};
  auto& types = j["edge_types"] = ordered_json::array();
  for (auto const& [key, count] : report.edge_types) {
    types.push_back({key.first, key.second, count});
  }
  return j.dump() + "\n";
}

IsoReport iso_report_from_json(std::string_view text) {
  try {
    auto const j = ordered_json::parse(text);
    IsoReport report;
    auto const status = j.at("status").get<std::string>();
    if (status == "verified") {
      report.status = IsoStatus::verified;
    } else if (status == "counterexample") {
      report.status = IsoStatus::counterexample;
    } else {
      throw InputError("unknown iso report status '" + status + "'");
    }
    report.mapping = j.at("mapping").get<std::vector<std::size_t>>();
    if (!j.at("witness").is_null()) {
      auto const& w = j.at("witness");
      report.witness = IsoWitness{w.at("kind").get<std::string>(),
                                  w.at("direction").get<std::string>(),
                                  {w.at("arc").at(0).get<std::size_t>(),
                                   w.at("arc").at(1).get<std::size_t>()},
                                  w.at("detail").get<std::string>()};
    }
    auto const& stats = j.at("stats");
    report.vertices_checked = stats.at("vertices_checked").get<std::size_t>();
    report.arcs_checked_forward = stats.at("arcs_checked_forward").get<std::size_t>();
    report.arcs_checked_backward = stats.at("arcs_checked_backward").get<std::size_t>();
    for (auto const& t : j.at("edge_types")) {
      report.edge_types[{t.at(0).get<std::string>(), t.at(1).get<std::string>()}] =
          t.at(2).get<std::size_t>();
    }
    return report;
  } catch (nlohmann::json::exception const& e) {
    throw InputError(std::string("malformed iso report JSON: ") + e.what());
  }
}

std::string to_json(SearchResult const& result) {
  ordered_json j;
  j["status"] = to_string(result.status);
  if (result.certificate) {
    j["mapping"] = result.certificate->mapping;
  } else {
    j["mapping"] = nullptr;
  }
  j["expansions"] = result.expansions;
  j["reason"] = result.reason;
  return j.dump() + "\n";
}

std::string to_json(SeparationReport const& report) {
  ordered_json j;
  j["separated"] = report.separated;
  j["radius"] = report.radius ? ordered_json(*report.radius) : ordered_json(nullptr);
  j["invariant"] = report.invariant;
  auto& steps = j["steps"] = ordered_json::array();
  for (auto const& s : report.steps) {
    ordered_json step;
    step["radius"] = s.radius;
    step["vertices"] = s.vertices;
    step["arcs"] = {s.arcs_first, s.arcs_second};
    step["invariant"] = s.invariant ? ordered_json(*s.invariant) : ordered_json(nullptr);
    step["search"] = s.search ? ordered_json(to_string(*s.search)) : ordered_json(nullptr);
    steps.push_back(std::move(step));
  }
  return j.dump() + "\n";
}

}  // namespace cayleyforge
