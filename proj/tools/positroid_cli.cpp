// positroid: command-line access to the diagram/matroid library.
//
// Exit codes: 0 success, 1 bad input or precondition, 2 verification
// found failures, 3 internal guarantee broken (a constructed result
// failed its own recheck).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <positroid/positroid.hpp>

namespace {

using namespace positroid;

std::string read_input(const std::string& path_arg) {
  if (path_arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path_arg, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path_arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

le_diagram load_diagram(const std::string& path_arg) {
  return parse_diagram(read_input(path_arg));
}

std::string set_str(ground_subset s) { return "{" + s.to_string() + "}"; }

/// Bases as label vectors in lexicographic order of the label sequence.
std::vector<std::vector<int>> sorted_bases(const basis_matroid& m) {
  std::vector<std::vector<int>> rows;
  rows.reserve(m.bases.size());
  for (std::uint64_t b : m.bases)
    rows.push_back(ground_subset::from_mask(b).labels());
  std::sort(rows.begin(), rows.end());
  return rows;
}

void print_bases(const basis_matroid& m, bool as_json) {
  const auto rows = sorted_bases(m);
  if (as_json) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(r);
    std::cout << json{{"n", m.n}, {"r", m.r}, {"bases", j}}.dump() << "\n";
    return;
  }
  for (const auto& r : rows) {
    std::string line;
    for (int e : r) line += (line.empty() ? "" : ",") + std::to_string(e);
    std::cout << line << "\n";
  }
}

void print_coline_report(const coline_report& rep) {
  std::cout << "coline " << set_str(rep.coline.elements) << "\n";
  for (const classified_copoint& c : rep.copoints)
    std::cout << (c.simple ? "simple   " : "multiple ")
              << set_str(c.copoint.elements) << "\n";
  std::cout << "positive: " << (rep.positive ? "yes" : "no") << "\n";
}

void print_report_text(const verification_report& rep) {
  for (const auto& [name, nm] : rep.suite_n_max) {
    long fails = 0;
    if (name == "theorem") fails = static_cast<long>(rep.theorem_failures.size());
    if (name == "corollary")
      fails = static_cast<long>(rep.corollary_failures.size());
    if (name == "lemma") fails = static_cast<long>(rep.lemma_mismatches.size());
    if (name == "duality") fails = static_cast<long>(rep.duality_misses.size());
    if (name == "rank-oracle")
      fails = static_cast<long>(rep.oracle_mismatches.size());
    if (name == "axioms")
      fails = static_cast<long>(rep.axiom_violations.size());
    std::cout << "suite " << name << " (n <= " << nm << "): "
              << (fails == 0 ? "OK" : std::to_string(fails) + " failures")
              << "\n";
  }
  std::cout << "diagrams checked: " << rep.diagrams_checked << "\n";
  std::cout << "simple rank>=3: " << rep.simple_rank3plus_count << "\n";
  if (rep.witness_checked > 0)
    std::cout << "witness pairs checked: " << rep.witness_checked << "\n";
  for (const branch_count& b : rep.corollary_branches)
    std::cout << "corollary branches n=" << b.n << ": A=" << b.a
              << " B=" << b.b << "\n";
  auto dump = [](const char* name,
                 const std::vector<verification_failure>& fs) {
    for (const verification_failure& f : fs)
      std::cout << name << " failure [" << f.diagram << "]: " << f.reason
                << "\n";
  };
  dump("theorem", rep.theorem_failures);
  dump("corollary", rep.corollary_failures);
  dump("lemma", rep.lemma_mismatches);
  dump("duality", rep.duality_misses);
  dump("rank-oracle", rep.oracle_mismatches);
  dump("axioms", rep.axiom_violations);
}

int run(int argc, char** argv) {
  CLI::App app{"positroid diagram and matroid toolkit"};
  app.require_subcommand(1);

  std::string file = "-";
  bool as_json = false;
  std::string set_arg, coline_arg, delete_arg, contract_arg, suite_arg = "all";
  int n_arg = 0;
  int r_arg = -1;
  int flat_rank = -1;
  std::optional<int> n_max;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("file", file, ".led or JSON diagram file, or - for stdin");
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check a diagram");
  add_input(c_validate);
  CLI::App* c_graph = app.add_subcommand("graph", "emit the graph as DOT");
  add_input(c_graph);
  CLI::App* c_bases = app.add_subcommand("bases", "list all bases");
  add_input(c_bases);
  CLI::App* c_rank = app.add_subcommand("rank", "rank of a label set");
  add_input(c_rank);
  c_rank->add_option("--set", set_arg, "comma-separated labels")->required();
  CLI::App* c_closure = app.add_subcommand("closure", "closure of a label set");
  add_input(c_closure);
  c_closure->add_option("--set", set_arg, "comma-separated labels")->required();
  CLI::App* c_flats = app.add_subcommand("flats", "flats of one rank");
  add_input(c_flats);
  c_flats->add_option("--rank", flat_rank, "flat rank")->required();
  CLI::App* c_colines = app.add_subcommand("colines", "all colines with censuses");
  add_input(c_colines);
  CLI::App* c_copoints =
      app.add_subcommand("copoints", "copoints on a given coline");
  add_input(c_copoints);
  c_copoints->add_option("--coline", coline_arg, "coline elements")->required();
  CLI::App* c_positive =
      app.add_subcommand("positive-coline", "construct a positive coline");
  add_input(c_positive);
  CLI::App* c_witness =
      app.add_subcommand("witness", "cocircuit pair witnessing positivity");
  add_input(c_witness);
  CLI::App* c_conn =
      app.add_subcommand("connectivity", "levels and isolated blocks");
  add_input(c_conn);
  CLI::App* c_decomp =
      app.add_subcommand("decompose", "connected components with diagrams");
  add_input(c_decomp);
  CLI::App* c_simple =
      app.add_subcommand("simple-check", "loops, coloops, parallel elements");
  add_input(c_simple);
  CLI::App* c_dual = app.add_subcommand("dual", "bases of the dual matroid");
  add_input(c_dual);
  CLI::App* c_minor = app.add_subcommand("minor", "delete/contract a minor");
  add_input(c_minor);
  c_minor->add_option("--delete", delete_arg, "labels to delete");
  c_minor->add_option("--contract", contract_arg, "labels to contract");
  CLI::App* c_enum =
      app.add_subcommand("enumerate", "stream all diagrams for one n");
  c_enum->add_option("--n", n_arg, "ground set size")->required();
  c_enum->add_option("--r", r_arg, "only this rank");
  c_enum->add_flag("--json", as_json, "machine-readable output");
  CLI::App* c_catalog =
      app.add_subcommand("catalog", "line-delimited JSON catalog for one n");
  c_catalog->add_option("--n", n_arg, "ground set size")->required();
  c_catalog->add_flag("--json", as_json, "machine-readable output");
  CLI::App* c_verify =
      app.add_subcommand("verify", "run exhaustive verification suites");
  c_verify->add_option("--n", n_max, "enumerate up to this ground set size");
  c_verify->add_option("--suite", suite_arg,
                       "theorem|corollary|lemma|duality|rank-oracle|axioms|all");
  c_verify->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the message or the help text
    return code == 0 ? 0 : 1;
  }

  if (c_validate->parsed()) {
    const std::string text = read_input(file);
    try {
      const le_diagram d = parse_diagram(text);
      if (as_json) {
        json j = diagram_to_json(d);
        j["ok"] = true;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "ok " << d.summary() << "\n";
      }
    } catch (const le_error& e) {
      for (const le_violation& v : e.violations)
        std::cout << "violation: empty box (" << v.box.s << "," << v.box.h
                  << ") has a dot above at (" << v.above.s << "," << v.above.h
                  << ") and a dot to its left at (" << v.left.s << ","
                  << v.left.h << ")\n";
      throw;
    }
    return 0;
  }

  if (c_graph->parsed()) {
    const le_graph g(load_diagram(file));
    if (as_json) {
      json verts = json::array();
      for (int v = 0; v < g.vertex_count(); ++v) {
        std::string kind =
            !g.is_internal(v)
                ? (g.sinks().contains(v + 1) ? "sink" : "source")
                : "dot";
        verts.push_back(json{{"name", g.vertex_name(v)}, {"kind", kind}});
      }
      json arcs = json::array();
      for (auto [a, b] : g.arcs())
        arcs.push_back(json::array({g.vertex_name(a), g.vertex_name(b)}));
      std::cout << json{{"vertices", verts}, {"arcs", arcs}}.dump() << "\n";
    } else {
      std::cout << to_dot(g);
    }
    return 0;
  }

  if (c_bases->parsed()) {
    const le_diagram d = load_diagram(file);
    print_bases(bases(le_graph(d)), as_json);
    return 0;
  }

  if (c_rank->parsed() || c_closure->parsed()) {
    const le_diagram d = load_diagram(file);
    const basis_matroid m = bases(le_graph(d));
    const ground_subset s = ground_subset::parse(set_arg, d.n());
    if (c_rank->parsed()) {
      if (as_json)
        std::cout << json{{"set", subset_to_json(s)},
                          {"rank", rank_of(m, s)}}
                         .dump()
                  << "\n";
      else
        std::cout << rank_of(m, s) << "\n";
    } else {
      const flat f = closure(m, s);
      if (as_json)
        std::cout << json{{"set", subset_to_json(s)},
                          {"closure", subset_to_json(f.elements)},
                          {"rank", f.rank}}
                         .dump()
                  << "\n";
      else
        std::cout << f.elements.to_string() << "\n";
    }
    return 0;
  }

  if (c_flats->parsed()) {
    const le_diagram d = load_diagram(file);
    const basis_matroid m = bases(le_graph(d));
    const auto fl = flats_of_rank(m, flat_rank);
    if (as_json) {
      json j = json::array();
      for (const flat& f : fl) j.push_back(subset_to_json(f.elements));
      std::cout << json{{"rank", flat_rank}, {"flats", j}}.dump() << "\n";
    } else {
      for (const flat& f : fl) std::cout << f.elements.to_string() << "\n";
    }
    return 0;
  }

  if (c_colines->parsed()) {
    const le_diagram d = load_diagram(file);
    const basis_matroid m = bases(le_graph(d));
    if (m.r < 2) throw domain_error("colines require rank >= 2");
    json arr = json::array();
    for (const flat& L : flats_of_rank(m, m.r - 2)) {
      const coline_report rep = copoints_on(m, L.elements);
      if (as_json) {
        arr.push_back(coline_report_to_json(rep));
      } else {
        std::cout << "coline " << set_str(L.elements) << ": "
                  << rep.simple_count() << " simple, " << rep.multiple_count()
                  << " multiple" << (rep.positive ? "  positive" : "") << "\n";
      }
    }
    if (as_json) std::cout << arr.dump() << "\n";
    return 0;
  }

  if (c_copoints->parsed()) {
    const le_diagram d = load_diagram(file);
    const basis_matroid m = bases(le_graph(d));
    const ground_subset L = ground_subset::parse(coline_arg, d.n());
    const coline_report rep = copoints_on(m, L);
    if (as_json)
      std::cout << coline_report_to_json(rep).dump() << "\n";
    else
      print_coline_report(rep);
    return 0;
  }

  if (c_positive->parsed()) {
    const le_diagram d = load_diagram(file);
    const basis_matroid m = bases(le_graph(d));
    const positive_coline_result res = positive_coline(m, d);
    if (as_json) {
      std::cout << positive_coline_to_json(res).dump() << "\n";
    } else {
      print_coline_report(res.report);
      std::cout << "candidate: " << res.candidate;
      if (res.used_pair)
        std::cout << " (pair " << res.used_pair->first << ","
                  << res.used_pair->second << ")";
      std::cout << "\n";
      if (res.lifted)
        std::cout << "lifted from component " << set_str(res.component)
                  << "\n";
    }
    return 0;
  }

  if (c_witness->parsed()) {
    const le_diagram d = load_diagram(file);
    const basis_matroid m = bases(le_graph(d));
    const positive_coline_result res = positive_coline(m, d);
    const cocircuit_witness w = cocircuit_pair_witness(m, res.report);
    if (as_json) {
      std::cout << witness_to_json(w).dump() << "\n";
    } else {
      std::cout << "coline " << set_str(w.coline) << "\n";
      std::cout << "cocircuit " << set_str(w.c1) << "\n";
      std::cout << "cocircuit " << set_str(w.c2) << "\n";
      std::cout << "symdiff {" << w.symdiff.first << "," << w.symdiff.second
                << "}\n";
    }
    return 0;
  }

  if (c_conn->parsed()) {
    const le_diagram d = load_diagram(file);
    const decomposition_report rep = isolated_blocks(d);
    if (as_json) {
      json j = decomposition_to_json(rep);
      json lv = json::array();
      for (const level& l : levels(d)) lv.push_back(subset_to_json(l.elements));
      j["levels"] = lv;
      j["leading_sources"] = subset_to_json(leading_sources(d));
      std::cout << j.dump() << "\n";
    } else {
      const ground_subset lead = leading_sources(d);
      if (!lead.empty())
        std::cout << "leading sources " << set_str(lead) << "\n";
      const auto lv = levels(d);
      for (std::size_t i = 0; i < lv.size(); ++i)
        std::cout << "level " << i + 1 << " " << set_str(lv[i].elements)
                  << "\n";
      for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
        std::cout << "block " << set_str(rep.blocks[i]) << " levels";
        for (int t : rep.block_levels[i]) std::cout << " " << t;
        std::cout << "\n";
      }
      std::cout << "connected: " << (rep.connected ? "yes" : "no") << "\n";
    }
    return 0;
  }

  if (c_decomp->parsed()) {
    const le_diagram d = load_diagram(file);
    const basis_matroid m = bases(le_graph(d));
    const std::vector<component> comps = decompose(m, d);
    if (as_json) {
      json arr = json::array();
      for (const component& c : comps)
        arr.push_back(json{{"elements", subset_to_json(c.elements)},
                           {"rank", c.matroid.r},
                           {"diagram", diagram_to_json(c.diagram)}});
      std::cout << arr.dump() << "\n";
    } else {
      for (const component& c : comps)
        std::cout << "component " << set_str(c.elements) << " rank "
                  << c.matroid.r << " [" << c.diagram.summary() << "]\n";
    }
    return 0;
  }

  if (c_simple->parsed()) {
    const le_diagram d = load_diagram(file);
    const le_graph g(d);
    const basis_matroid m = bases(g);
    const ground_subset gl = graph_loops(d), ml = loops(m);
    const ground_subset gc = graph_coloops(d), mc = coloops(m);
    const auto gp = graph_parallel_pairs(d), mp = parallel_pairs(m);
    const bool agree = gl == ml && gc == mc && gp == mp;
    if (as_json) {
      json pj = json::array();
      for (auto [a, b] : mp) pj.push_back(json::array({a, b}));
      std::cout << json{{"loops", subset_to_json(ml)},
                        {"coloops", subset_to_json(mc)},
                        {"parallel", pj},
                        {"simple", is_simple(m)},
                        {"detectors_agree", agree}}
                       .dump()
                << "\n";
    } else {
      std::cout << "loops " << set_str(ml) << "\n";
      std::cout << "coloops " << set_str(mc) << "\n";
      for (auto [a, b] : mp)
        std::cout << "parallel {" << a << "," << b << "}\n";
      std::cout << "detectors agree: " << (agree ? "yes" : "no") << "\n";
      std::cout << "simple: " << (is_simple(m) ? "yes" : "no") << "\n";
    }
    if (!agree)
      throw guarantee_violation(
          "graph detectors disagree with the matroid on loops/coloops/parallel");
    return 0;
  }

  if (c_dual->parsed()) {
    const le_diagram d = load_diagram(file);
    print_bases(dual(bases(le_graph(d))), as_json);
    return 0;
  }

  if (c_minor->parsed()) {
    const le_diagram d = load_diagram(file);
    const basis_matroid m = bases(le_graph(d));
    const ground_subset del =
        delete_arg.empty() ? ground_subset{}
                           : ground_subset::parse(delete_arg, d.n());
    const ground_subset con =
        contract_arg.empty() ? ground_subset{}
                             : ground_subset::parse(contract_arg, d.n());
    const minor_result res = minor(m, del, con);
    if (as_json) {
      json rows = json::array();
      for (const auto& r : sorted_bases(res.matroid)) rows.push_back(r);
      std::cout << json{{"n", res.matroid.n},
                        {"r", res.matroid.r},
                        {"bases", rows},
                        {"labels", res.map.to_old}}
                       .dump()
                << "\n";
    } else {
      std::cout << "n " << res.matroid.n << " r " << res.matroid.r << "\n";
      for (std::size_t i = 0; i < res.map.to_old.size(); ++i)
        std::cout << "label " << i + 1 << " = " << res.map.to_old[i] << "\n";
      print_bases(res.matroid, false);
    }
    return 0;
  }

  if (c_enum->parsed()) {
    std::optional<int> rk;
    if (r_arg >= 0) rk = r_arg;
    for_each_le_diagram(n_arg, rk, [&](const le_diagram& d) {
      if (as_json)
        std::cout << diagram_to_json(d).dump() << "\n";
      else
        std::cout << d.summary() << "\n";
    });
    return 0;
  }

  if (c_catalog->parsed()) {
    const catalog cat = build_catalog(n_arg);
    for (const catalog_entry& e : cat.entries)
      std::cout << catalog_line_to_json(e).dump() << "\n";
    if (!cat.collisions.empty()) {
      std::cerr << cat.collisions.size()
                << " diagrams mapped to an already-cataloged matroid\n";
      return 2;
    }
    return 0;
  }

  if (c_verify->parsed()) {
    const std::optional<suite> s = suite_from_name(suite_arg);
    if (!s) throw domain_error("unknown suite '" + suite_arg + "'");
    int threads = 1;
    if (const char* env = std::getenv("POSITROID_THREADS"))
      threads = std::max(1, std::atoi(env));
    const verification_report rep = verify(*s, n_max, threads);
    if (as_json)
      std::cout << verification_to_json(rep).dump() << "\n";
    else
      print_report_text(rep);
    return rep.ok() ? 0 : 2;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const positroid::guarantee_violation& e) {
    std::cerr << "fatal: " << e.what() << "\n";
    return 3;
  } catch (const positroid::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
