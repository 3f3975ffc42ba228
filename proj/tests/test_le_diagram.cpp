#include <catch2/catch_amalgamated.hpp>

#include <positroid/io.hpp>

#include "helpers.hpp"

using namespace positroid;

TEST_CASE("parse_led reads the fixture exactly") {
  const le_diagram d = load_fixture("fig2.led");
  REQUIRE(d.n() == 7);
  REQUIRE(d.r() == 3);
  REQUIRE(d.path() == "HVVHVHH");
  REQUIRE(d.dots() == std::vector<dot>{{2, 6}, {3, 4}, {3, 6}, {3, 7}, {5, 6}});
  REQUIRE(d.sinks() == ground_subset{2, 3, 5});
  REQUIRE(d.sources() == ground_subset{1, 4, 6, 7});
  REQUIRE(d.is_sink(2));
  REQUIRE(d.is_source(4));
  REQUIRE(d.box_exists(2, 6));
  REQUIRE_FALSE(d.box_exists(2, 1));
  REQUIRE(d.has_dot(3, 4));
  REQUIRE_FALSE(d.has_dot(2, 4));
  REQUIRE(d.summary() == "7 3 HVVHVHH 2,6;3,4;3,6;3,7;5,6");
}

TEST_CASE("led round-trip") {
  for (const char* name : {"fig2.led", "fig3.led", "fig4.led", "fig5.led",
                           "fig7.led", "blocks1.led", "u12.led"}) {
    const le_diagram d = load_fixture(name);
    REQUIRE(parse_led(to_led(d)) == d);
  }
}

TEST_CASE("json diagrams parse to the same object") {
  const le_diagram led = load_fixture("fig2.led");
  const le_diagram js = load_fixture("fig2.json");
  REQUIRE(led == js);
  REQUIRE(diagram_from_json(diagram_to_json(led)) == led);
  // parse_diagram sniffs the format from the first non-space byte.
  REQUIRE(parse_diagram("  " + diagram_to_json(led).dump()) == led);
  REQUIRE(parse_diagram(to_led(led)) == led);
}

TEST_CASE("comments and blank lines are ignored") {
  const le_diagram d = parse_led("# heading\n2 1\n\nVH\n# dot\n1 2\n");
  REQUIRE(d.summary() == "2 1 VH 1,2");
}

TEST_CASE("structural parse errors") {
  REQUIRE_THROWS_AS(parse_led(""), parse_error);
  REQUIRE_THROWS_AS(parse_led("2\nVH\n"), parse_error);
  REQUIRE_THROWS_AS(parse_led("2 1\n"), parse_error);
  REQUIRE_THROWS_WITH(parse_led("2 2\nVH\n"),
                      Catch::Matchers::ContainsSubstring("r = 2"));
  REQUIRE_THROWS_AS(parse_led("4 2\nVHVH\n1 2 3\n"), parse_error);
  REQUIRE_THROWS_AS(parse_led("4 2\nVHVH\nx y\n"), parse_error);
}

TEST_CASE("construction rejects malformed diagrams") {
  REQUIRE_THROWS_AS(le_diagram(0, "", {}), domain_error);
  REQUIRE_THROWS_AS(le_diagram(65, std::string(65, 'V'), {}), domain_error);
  REQUIRE_THROWS_AS(le_diagram(2, "V", {}), domain_error);
  REQUIRE_THROWS_AS(le_diagram(2, "VX", {}), domain_error);
  // duplicate dot
  REQUIRE_THROWS_AS(le_diagram(2, "VH", {{1, 2}, {1, 2}}), domain_error);
  // dot outside any box
  REQUIRE_THROWS_AS(le_diagram(2, "VH", {{2, 1}}), domain_error);
  REQUIRE_THROWS_AS(le_diagram(2, "VH", {{1, 3}}), domain_error);
  REQUIRE_THROWS_AS(le_diagram(3, "VVH", {{1, 2}}), domain_error);
  REQUIRE_THROWS_AS(le_diagram(4, "VHVH", {{3, 2}}), domain_error);
}

TEST_CASE("exclusion rule carries a witness") {
  // Box (2,3) is empty, has the dot (1,3) above it and the dot (2,4) to
  // its left.
  try {
    le_diagram(4, "VVHH", {{1, 3}, {2, 4}});
    FAIL("expected le_error");
  } catch (const le_error& e) {
    REQUIRE(e.violations.size() == 1);
    REQUIRE(e.violations[0].box == dot{2, 3});
    REQUIRE(e.violations[0].above == dot{1, 3});
    REQUIRE(e.violations[0].left == dot{2, 4});
    REQUIRE_THAT(e.what(),
                 Catch::Matchers::ContainsSubstring("empty box (2,3)"));
  }
  // Filling the box repairs the diagram.
  REQUIRE_NOTHROW(le_diagram(4, "VVHH", {{1, 3}, {2, 3}, {2, 4}}));
  // So does clearing the column above or the row to the left.
  REQUIRE_NOTHROW(le_diagram(4, "VVHH", {{2, 4}}));
  REQUIRE_NOTHROW(le_diagram(4, "VVHH", {{1, 3}}));
}

TEST_CASE("json parse errors") {
  REQUIRE_THROWS_AS(parse_diagram("{\"n\": 2}"), parse_error);
  REQUIRE_THROWS_AS(parse_diagram("{bad json"), parse_error);
  REQUIRE_THROWS_AS(
      parse_diagram("{\"n\":2,\"r\":2,\"path\":\"VH\",\"dots\":[]}"),
      parse_error);  // r contradicts the path
  REQUIRE_THROWS_AS(
      parse_diagram("{\"n\":2,\"r\":1,\"path\":\"VH\",\"dots\":[[1]]}"),
      parse_error);
}
