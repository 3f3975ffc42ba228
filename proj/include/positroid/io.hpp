#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "basis_matroid.hpp"
#include "coline.hpp"
#include "enumerate.hpp"
#include "le_diagram.hpp"
#include "le_graph.hpp"
#include "routing.hpp"
#include "structure.hpp"

namespace positroid {

using json = nlohmann::ordered_json;

[[nodiscard]] inline json subset_to_json(ground_subset s) {
  return json(s.labels());
}

[[nodiscard]] inline json diagram_to_json(const le_diagram& d) {
  json dots = json::array();
  for (const dot& p : d.dots()) dots.push_back({p.s, p.h});
  return json{{"n", d.n()}, {"r", d.r()}, {"path", d.path()}, {"dots", dots}};
}

[[nodiscard]] inline le_diagram diagram_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("diagram JSON must be an object");
  for (const char* key : {"n", "path", "dots"})
    if (!j.contains(key))
      throw parse_error(std::string("diagram JSON lacks \"") + key + "\"");
  if (!j["n"].is_number_integer() || !j["path"].is_string() ||
      !j["dots"].is_array())
    throw parse_error("diagram JSON field has the wrong type");
  std::vector<dot> dots;
  for (const json& p : j["dots"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer())
      throw parse_error("each dot must be a pair of integers");
    dots.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  try {
    le_diagram d(j["n"].get<int>(), j["path"].get<std::string>(),
                 std::move(dots));
    if (j.contains("r") && j["r"].is_number_integer() &&
        j["r"].get<int>() != d.r())
      throw parse_error("header rank " + std::to_string(j["r"].get<int>()) +
                        " disagrees with path (" + std::to_string(d.r()) +
                        " sinks)");
    return d;
  } catch (const le_error&) {
    throw;
  } catch (const parse_error&) {
    throw;
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

/// Reads a diagram from either serialization: JSON when the first
/// non-space byte is '{', the line format otherwise.
[[nodiscard]] inline le_diagram parse_diagram(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c != '{') break;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw parse_error(std::string("bad JSON: ") + e.what());
    }
    return diagram_from_json(j);
  }
  return parse_led(text);
}

[[nodiscard]] inline json coline_report_to_json(const coline_report& rep) {
  json copoints = json::array();
  for (const classified_copoint& c : rep.copoints)
    copoints.push_back(json{{"set", subset_to_json(c.copoint.elements)},
                            {"kind", c.simple ? "simple" : "multiple"}});
  return json{{"coline", subset_to_json(rep.coline.elements)},
              {"copoints", copoints},
              {"positive", rep.positive}};
}

[[nodiscard]] inline json positive_coline_to_json(
    const positive_coline_result& res) {
  json j = coline_report_to_json(res.report);
  j["candidate"] = res.candidate;
  if (res.used_pair)
    j["pair"] = json::array({res.used_pair->first, res.used_pair->second});
  j["lifted"] = res.lifted;
  if (res.lifted) j["component"] = subset_to_json(res.component);
  return j;
}

[[nodiscard]] inline json witness_to_json(const cocircuit_witness& w) {
  return json{{"coline", subset_to_json(w.coline)},
              {"cocircuits",
               json::array({subset_to_json(w.c1), subset_to_json(w.c2)})},
              {"symdiff", json::array({w.symdiff.first, w.symdiff.second})}};
}

[[nodiscard]] inline json decomposition_to_json(
    const decomposition_report& rep) {
  json blocks = json::array();
  for (ground_subset b : rep.blocks) blocks.push_back(subset_to_json(b));
  return json{{"blocks", blocks},
              {"connected", rep.connected},
              {"block_levels", rep.block_levels}};
}

[[nodiscard]] inline json plan_to_json(const le_graph& g,
                                       const routing_plan& plan) {
  json paths = json::array();
  for (const std::vector<int>& path : plan.paths) {
    json names = json::array();
    for (int v : path) names.push_back(g.vertex_name(v));
    paths.push_back(names);
  }
  return paths;
}

[[nodiscard]] inline std::string mask_to_hex(std::uint64_t mask) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%llx",
                static_cast<unsigned long long>(mask));
  return buf;
}

[[nodiscard]] inline json catalog_line_to_json(const catalog_entry& e) {
  json bases = json::array();
  for (std::uint64_t b : e.matroid.bases) bases.push_back(mask_to_hex(b));
  return json{{"diagram", diagram_to_json(e.diagram)}, {"bases", bases}};
}

[[nodiscard]] inline json verification_to_json(
    const verification_report& rep) {
  json suites = json::object();
  for (const auto& [name, nm] : rep.suite_n_max) suites[name] = nm;
  auto failures = [](const std::vector<verification_failure>& fs) {
    json out = json::array();
    for (const verification_failure& f : fs)
      out.push_back(
          json{{"n", f.n}, {"diagram", f.diagram}, {"reason", f.reason}});
    return out;
  };
  json branches = json::array();
  for (const branch_count& b : rep.corollary_branches)
    branches.push_back(
        json{{"n", b.n}, {"candidate_a", b.a}, {"candidate_b", b.b}});
  json j{{"suites", suites},
         {"diagrams_checked", rep.diagrams_checked},
         {"simple_rank3plus", rep.simple_rank3plus_count},
         {"witness_checked", rep.witness_checked},
         {"ok", rep.ok()}};
  if (!rep.corollary_branches.empty()) j["corollary_branches"] = branches;
  json fj = json::object();
  fj["theorem"] = failures(rep.theorem_failures);
  fj["corollary"] = failures(rep.corollary_failures);
  fj["lemma"] = failures(rep.lemma_mismatches);
  fj["duality"] = failures(rep.duality_misses);
  fj["rank_oracle"] = failures(rep.oracle_mismatches);
  fj["axioms"] = failures(rep.axiom_violations);
  j["failures"] = fj;
  return j;
}

}  // namespace positroid
