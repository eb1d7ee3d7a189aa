#include "cayleyforge/confluence.hpp"

#include <algorithm>

#include "cayleyforge/errors.hpp"

namespace cayleyforge {

std::vector<RuleInstance> instantiate_rules(RewritingSystem const& system,
                                            std::size_t schema_bound) {
  std::vector<RuleInstance> out;
  for (std::size_t i = 0; i < system.rules().size(); ++i) {
    out.push_back({i, std::nullopt, system.rules()[i]});
  }
  for (std::size_t i = 0; i < system.schemas().size(); ++i) {
    auto const& schema = system.schemas()[i];
    if (schema_bound < schema.min_exponent) {
      throw InputError("schema bound " + std::to_string(schema_bound)
                       + " is below the schema minimum exponent "
                       + std::to_string(schema.min_exponent));
    }
    for (std::size_t n = schema.min_exponent; n <= schema_bound; ++n) {
      out.push_back({system.rules().size() + i, n, schema.instance(n)});
    }
  }
  return out;
}

CriticalPairSet critical_pairs(RewritingSystem const& system, std::size_t schema_bound) {
  CriticalPairSet set;
  set.instances = instantiate_rules(system, schema_bound);
  auto const& inst = set.instances;

  for (std::size_t i = 0; i < inst.size(); ++i) {
    Word const& u = inst[i].rule.lhs;
    Word const& v = inst[i].rule.rhs;
    for (std::size_t j = 0; j < inst.size(); ++j) {
      Word const& z = inst[j].rule.lhs;
      Word const& t = inst[j].rule.rhs;

      // u = p q, z = q r with p, q, r nonempty.
      std::size_t const max_shared = std::min(u.size(), z.size());
      for (std::size_t k = 1; k < max_shared; ++k) {
        if (!std::equal(u.end() - static_cast<std::ptrdiff_t>(k), u.end(), z.begin())) {
          continue;
        }
        CriticalPair cp;
        cp.kind = OverlapKind::overlap;
        cp.first = i;
        cp.second = j;
        cp.offset = k;
        cp.source = u;
        cp.source.insert(cp.source.end(), z.begin() + static_cast<std::ptrdiff_t>(k), z.end());
        cp.left_result = v;
        cp.left_result.insert(cp.left_result.end(), z.begin() + static_cast<std::ptrdiff_t>(k),
                              z.end());
        cp.right_result.assign(u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
        cp.right_result.insert(cp.right_result.end(), t.begin(), t.end());
        set.pairs.push_back(std::move(cp));
      }

      // u = p z q
      if (i == j || z.size() > u.size()) {
        continue;
      }
      for (std::size_t pos = 0; pos + z.size() <= u.size(); ++pos) {
        if (!is_factor_at(u, pos, z)) {
          continue;
        }
        CriticalPair cp;
        cp.kind = OverlapKind::containment;
        cp.first = i;
        cp.second = j;
        cp.offset = pos;
        cp.source = u;
        cp.left_result = v;
        cp.right_result.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(pos));
        cp.right_result.insert(cp.right_result.end(), t.begin(), t.end());
        cp.right_result.insert(cp.right_result.end(),
                               u.begin() + static_cast<std::ptrdiff_t>(pos + z.size()), u.end());
        set.pairs.push_back(std::move(cp));
      }
    }
  }
  return set;
}

ConfluenceReport check_local_confluence(RewritingSystem const& system, std::size_t schema_bound) {
  ConfluenceReport report;
  report.schema_bound = schema_bound;
  report.bounded = !system.schemas().empty();
  report.length_reducing = check_length_reducing(system).passed;
  if (!report.length_reducing) {
    return report;
  }
  report.critical = critical_pairs(system, schema_bound);
  auto const& pairs = report.critical.pairs;
  report.resolutions.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto const& cp = pairs[i];
    if (cp.kind == OverlapKind::overlap) {
      ++report.overlap_count;
    } else {
      ++report.containment_count;
    }
    PairResolution res{i, normal_form(system, cp.left_result),
                       normal_form(system, cp.right_result)};
    if (!res.joined()) {
      report.failures.push_back(i);
    } else if (cp.kind == OverlapKind::overlap && has_xyxyx_shape(res.left_normal_form)) {
      ++report.xyxyx_overlaps;
    }
    report.resolutions.push_back(std::move(res));
  }
  report.passed = report.failures.empty();
  return report;
}

bool has_xyxyx_shape(std::span<Symbol const> w) noexcept {
  return w.size() == 5 && w[0] != w[1] && w[0] == w[2] && w[2] == w[4] && w[1] == w[3];
}

RewritingSystem certify_complete(RewritingSystem system, std::size_t schema_bound) {
  auto const lengths = check_length_reducing(system);
  if (!lengths.passed) {
    throw ContractError("system is not length-reducing (rule "
                        + std::to_string(lengths.failing.front()) + ")");
  }
  auto const report = check_local_confluence(system, schema_bound);
  if (!report.passed) {
    auto const& cp = report.critical.pairs[report.failures.front()];
    throw ContractError("system is not locally confluent: critical pair on "
                        + system.alphabet().render(cp.source) + " does not join");
  }
  system._certified_bound = schema_bound;
  return system;
}

}  // namespace cayleyforge
