#pragma once

#include <string>
#include <string_view>

#include "cayleyforge/confluence.hpp"
#include "cayleyforge/graph_iso.hpp"

namespace cayleyforge {

std::string to_json(ConfluenceReport const& report, RewritingSystem const& system);

// {"status","mapping":[...],"witness":null|{...},"stats":{...},"edge_types":[...]}
std::string to_json(IsoReport const& report);
IsoReport iso_report_from_json(std::string_view text);

// {"status","mapping":[...]|null,"expansions","reason"}
std::string to_json(SearchResult const& result);

std::string to_json(SeparationReport const& report);

}  // namespace cayleyforge
