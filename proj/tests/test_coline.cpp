#include <catch2/catch_amalgamated.hpp>

#include <positroid/coline.hpp>

#include "helpers.hpp"

using namespace positroid;

namespace {

struct loaded {
  le_diagram d;
  basis_matroid m;
};

loaded load(const std::string& name) {
  le_diagram d = load_fixture(name);
  basis_matroid m = bases(le_graph(d));
  return {std::move(d), std::move(m)};
}

loaded from_text(const std::string& text) {
  le_diagram d = parse_led(text);
  basis_matroid m = bases(le_graph(d));
  return {std::move(d), std::move(m)};
}

}  // namespace

TEST_CASE("consecutive sink pairs") {
  const le_diagram f7 = load_fixture("fig7.led");
  const auto p7 = consecutive_sink_pairs(f7);
  REQUIRE(p7.size() == 1);
  REQUIRE(p7[0].v_i == 1);
  REQUIRE(p7[0].v_next == 2);
  REQUIRE(p7[0].v_after == 4);

  const le_diagram b1 = load_fixture("blocks1.led");  // sinks 1,2,4,5,8
  const auto pb = consecutive_sink_pairs(b1);
  REQUIRE(pb.size() == 2);
  REQUIRE(pb[0].v_i == 1);
  REQUIRE(pb[0].v_after == 4);
  REQUIRE(pb[1].v_i == 4);
  REQUIRE(pb[1].v_after == 8);
  REQUIRE(last_consecutive_sink_pair(b1).v_i == 4);

  // A pair of sinks at the very end has no follower.
  const le_diagram tail = parse_led("3 2\nHVV\n");
  REQUIRE_FALSE(last_consecutive_sink_pair(tail).v_after.has_value());

  REQUIRE_THROWS_AS(last_consecutive_sink_pair(parse_led("4 2\nVHVH\n1 2\n")),
                    domain_error);
}

TEST_CASE("candidate colines from the sink basis") {
  const auto [d5, m5] = load("fig5.led");
  const auto cands = candidate_colines(m5, last_consecutive_sink_pair(d5),
                                       d5.sinks());
  REQUIRE(cands.a.elements == ground_subset{4, 7});
  REQUIRE(cands.b.has_value());
  REQUIRE(cands.b->elements == ground_subset{2, 7});

  const auto [d7, m7] = load("fig7.led");
  const auto c7 = candidate_colines(m7, last_consecutive_sink_pair(d7),
                                    d7.sinks());
  REQUIRE(c7.a.elements == ground_subset{4, 6});
  REQUIRE(c7.b.has_value());
  REQUIRE(c7.b->elements == ground_subset{2, 6});
}

TEST_CASE("candidate A wins on the no-spanning-circuit example") {
  const auto [d, m] = load("fig7.led");
  const positive_coline_result res = positive_coline(m, d);
  REQUIRE(res.candidate == "A");
  REQUIRE(res.report.coline.elements == ground_subset{4, 6});
  REQUIRE(res.report.positive);
  REQUIRE(res.report.simple_count() == 2);
  REQUIRE(res.report.multiple_count() == 1);
  REQUIRE(res.used_pair == std::pair{1, 2});
  REQUIRE_FALSE(res.lifted);
}

TEST_CASE("candidate B rescues the rank-4 example") {
  const auto [d, m] = load("fig5.led");
  const positive_coline_result res = positive_coline(m, d);
  REQUIRE(res.candidate == "B");
  REQUIRE(res.report.coline.elements == ground_subset{2, 7});
  REQUIRE(res.report.simple_count() == 3);
  REQUIRE(res.report.multiple_count() == 1);
  REQUIRE(res.used_pair == std::pair{1, 2});
}

TEST_CASE("an earlier sink pair can rescue both candidates failing") {
  // For this diagram the last pair (2,3) yields candidates with census
  // 2 simple / 2 multiple on both sides, but the pair (1,2) works.
  const auto [d, m] = from_text(
      "8 4\nVVVHVHHH\n1 8\n2 4\n2 7\n3 4\n3 6\n5 6\n5 7\n5 8\n");
  REQUIRE(is_simple(m));
  REQUIRE(last_consecutive_sink_pair(d).v_i == 2);

  const auto last = candidate_colines(m, last_consecutive_sink_pair(d),
                                      d.sinks());
  REQUIRE_FALSE(copoints_on(m, last.a.elements).positive);
  REQUIRE(last.b.has_value());
  REQUIRE_FALSE(copoints_on(m, last.b->elements).positive);

  const positive_coline_result res = positive_coline(m, d);
  REQUIRE(res.candidate == "A");
  REQUIRE(res.used_pair == std::pair{1, 2});
  REQUIRE(res.report.positive);
}

TEST_CASE("no sink pair works and the search widens") {
  // Connected, simple, rank 4, one consecutive sink pair whose candidates
  // both fail; a positive coline exists elsewhere and the construction
  // falls back to scanning all colines.
  for (const char* text :
       {"8 4\nVVHVHVHH\n1 3\n1 7\n2 3\n2 5\n4 5\n4 7\n4 8\n6 7\n",
        "8 4\nVVHVHHVH\n1 3\n1 6\n2 3\n2 5\n4 5\n4 6\n4 8\n7 8\n"}) {
    const auto [d, m] = from_text(text);
    REQUIRE(is_simple(m));
    REQUIRE(isolated_blocks(d).connected);

    const auto pairs = consecutive_sink_pairs(d);
    for (const sink_pair& p : pairs) {
      const auto cands = candidate_colines(m, p, d.sinks());
      REQUIRE_FALSE(copoints_on(m, cands.a.elements).positive);
      if (cands.b) REQUIRE_FALSE(copoints_on(m, cands.b->elements).positive);
    }

    const positive_coline_result res = positive_coline(m, d);
    REQUIRE(res.candidate == "search");
    REQUIRE_FALSE(res.used_pair.has_value());
    REQUIRE(res.report.coline.elements == ground_subset{1, 2, 3});
    REQUIRE(res.report.positive);
  }
}

TEST_CASE("rejections name the obstruction") {
  const auto [d3, m3] = load("fig3.led");
  REQUIRE_THROWS_WITH(positive_coline(m3, d3),
                      Catch::Matchers::ContainsSubstring("loops"));
  const auto [d4, m4] = load("fig4.led");  // has a loop besides its pairs
  REQUIRE_THROWS_AS(positive_coline(m4, d4), domain_error);
  const auto [du, mu] = load("u12.led");
  REQUIRE_THROWS_WITH(positive_coline(mu, du),
                      Catch::Matchers::ContainsSubstring("parallel pair {1,2}"));
  // Simple but of rank 2: the three-element uniform matroid.
  const auto [d23, m23] = from_text("3 2\nVVH\n1 3\n2 3\n");
  REQUIRE(is_simple(m23));
  REQUIRE_THROWS_WITH(positive_coline(m23, d23),
                      Catch::Matchers::ContainsSubstring("rank >= 3"));
}

TEST_CASE("disconnected diagrams lift from a component") {
  // Two rank-2 uniform blocks; the construction works inside {1,2,3} and
  // lifts, so the coline is the other block.
  const auto [d, m] = from_text("6 4\nVVHVVH\n1 3\n2 3\n4 6\n5 6\n");
  REQUIRE_FALSE(isolated_blocks(d).connected);
  const positive_coline_result res = positive_coline(m, d);
  REQUIRE(res.lifted);
  REQUIRE(res.component == ground_subset{1, 2, 3});
  REQUIRE(res.candidate == "rank2");
  REQUIRE(res.report.coline.elements == ground_subset{4, 5, 6});
  REQUIRE(res.report.positive);
  REQUIRE(res.report.simple_count() == 3);
  REQUIRE(res.report.multiple_count() == 0);
  // The report is phrased against the full matroid.
  REQUIRE(rank_of(m, res.report.coline.elements) == m.r - 2);
}

TEST_CASE("all-coloop diagrams use the leading labels") {
  const auto [d, m] = from_text("4 4\nVVVV\n");
  const positive_coline_result res = positive_coline(m, d);
  REQUIRE(res.candidate == "coloops");
  REQUIRE(res.report.coline.elements == ground_subset{1, 2});
  REQUIRE(res.report.simple_count() == 2);

  const cocircuit_witness w = cocircuit_pair_witness(m, res.report);
  REQUIRE(w.symdiff == std::pair{3, 4});
}

TEST_CASE("cocircuit pair witnesses") {
  const auto [d7, m7] = load("fig7.led");
  const cocircuit_witness w7 =
      cocircuit_pair_witness(m7, positive_coline(m7, d7).report);
  REQUIRE(w7.coline == ground_subset{4, 6});
  REQUIRE(w7.c1 == ground_subset{1, 3, 5, 7});
  REQUIRE(w7.c2 == ground_subset{1, 2, 5, 7});
  REQUIRE(w7.symdiff == std::pair{2, 3});

  const auto [d5, m5] = load("fig5.led");
  const cocircuit_witness w5 =
      cocircuit_pair_witness(m5, positive_coline(m5, d5).report);
  REQUIRE(w5.c1 == ground_subset{1, 3, 5, 6, 8});
  REQUIRE(w5.c2 == ground_subset{1, 3, 4, 6, 8});
  REQUIRE(w5.symdiff == std::pair{4, 5});
  REQUIRE((w5.c1 ^ w5.c2).size() == 2);
  // Cocircuits are complements of copoints.
  REQUIRE(is_flat(m5, w5.c1.complement_in(m5.n)));
  REQUIRE(rank_of(m5, w5.c1.complement_in(m5.n)) == m5.r - 1);

  // A census with fewer than two simple copoints cannot be witnessed.
  const coline_report rejected = copoints_on(m5, ground_subset{4, 7});
  REQUIRE_THROWS_AS(cocircuit_pair_witness(m5, rejected), domain_error);
}
