#include <catch2/catch_amalgamated.hpp>

#include <positroid/le_graph.hpp>

#include "helpers.hpp"

using namespace positroid;

namespace {

std::vector<std::pair<std::string, std::string>> named_arcs(
    const le_graph& g) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : g.arcs())
    out.emplace_back(g.vertex_name(a), g.vertex_name(b));
  return out;
}

}  // namespace

TEST_CASE("graph of the rank-3 example") {
  const le_graph g(load_fixture("fig2.led"));
  REQUIRE(g.n() == 7);
  REQUIRE(g.vertex_count() == 12);  // 7 externals + 5 dots
  REQUIRE(g.arc_count() == 10);

  // Row arcs chain each row's dots toward its sink; column arcs climb
  // from each source through its column's dots.
  const std::vector<std::pair<std::string, std::string>> expect = {
      {"4", "(3,4)"},      // column 4
      {"6", "(5,6)"},      // column 6 entry
      {"7", "(3,7)"},      // column 7
      {"(2,6)", "2"},      // row 2
      {"(3,4)", "3"},      // row 3 exit
      {"(3,6)", "(3,4)"},  // row 3
      {"(3,6)", "(2,6)"},  // column 6
      {"(3,7)", "(3,6)"},  // row 3
      {"(5,6)", "5"},      // row 5
      {"(5,6)", "(3,6)"},  // column 6
  };
  REQUIRE(named_arcs(g) == expect);
}

TEST_CASE("externals never join directly") {
  for (const char* name : {"fig2.led", "fig3.led", "fig4.led", "fig5.led",
                           "fig7.led", "blocks1.led"}) {
    const le_graph g(load_fixture(name));
    for (auto [a, b] : g.arcs())
      REQUIRE((g.is_internal(a) || g.is_internal(b)));
    // Sinks have out-degree 0, sources in-degree 0.
    for (int v : g.sinks().labels()) {
      REQUIRE(g.right(v - 1) == -1);
      REQUIRE(g.up(v - 1) == -1);
    }
    for (int h : g.sources().labels())
      for (auto [a, b] : g.arcs()) REQUIRE(b != h - 1);
  }
}

TEST_CASE("degenerate rows and columns") {
  const le_graph g(load_fixture("fig3.led"));
  // Sources 1 and 4 head no column, so they have no out-arc at all.
  REQUIRE(g.up(0) == -1);
  REQUIRE(g.right(0) == -1);
  REQUIRE(g.up(3) == -1);
  // Sink 5 heads no row, so nothing enters it.
  for (auto [a, b] : g.arcs()) REQUIRE(b != 4);
}

TEST_CASE("vertex names") {
  const le_graph g(load_fixture("fig2.led"));
  REQUIRE(g.vertex_name(0) == "1");
  REQUIRE(g.vertex_name(6) == "7");
  REQUIRE(g.vertex_name(7) == "(2,6)");
  REQUIRE(g.external_vertex(3) == 2);
  REQUIRE(g.dot_of(8) == dot{3, 4});
}

TEST_CASE("dot output is deterministic and complete") {
  const le_graph g(load_fixture("fig2.led"));
  const std::string a = to_dot(g);
  REQUIRE(a == to_dot(g));
  REQUIRE_THAT(a, Catch::Matchers::StartsWith("digraph le {"));
  REQUIRE_THAT(a, Catch::Matchers::ContainsSubstring(
                      "\"2\" [kind=sink shape=doublecircle];"));
  REQUIRE_THAT(a, Catch::Matchers::ContainsSubstring(
                      "\"1\" [kind=source shape=circle];"));
  REQUIRE_THAT(a, Catch::Matchers::ContainsSubstring(
                      "\"(3,6)\" -> \"(3,4)\";"));
  REQUIRE_THAT(a, Catch::Matchers::ContainsSubstring(
                      "\"(2,6)\" [kind=dot shape=point];"));
}
