#include <catch2/catch_amalgamated.hpp>

#include <positroid/enumerate.hpp>
#include <positroid/io.hpp>

#include "helpers.hpp"

using namespace positroid;

namespace {

/// Reference count: every path, every subset of its boxes, filtered by
/// the exclusion rule directly. Exponential in the box count, so n <= 4.
int brute_count(int n) {
  int total = 0;
  for (int bits = 0; bits < (1 << n); ++bits) {
    std::string path;
    for (int i = 0; i < n; ++i)
      path += ((bits >> (n - 1 - i)) & 1) ? 'H' : 'V';
    std::vector<dot> boxes;
    for (int s = 1; s <= n; ++s)
      for (int h = s + 1; h <= n; ++h)
        if (path[s - 1] == 'V' && path[h - 1] == 'H')
          boxes.push_back({s, h});
    const int k = static_cast<int>(boxes.size());
    for (int pick = 0; pick < (1 << k); ++pick) {
      std::vector<dot> dots;
      for (int i = 0; i < k; ++i)
        if ((pick >> i) & 1) dots.push_back(boxes[i]);
      if (detail::find_violations(path, dots).empty()) ++total;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("the five diagrams on two elements, in order") {
  std::vector<std::string> got;
  for_each_le_diagram(2, std::nullopt,
                      [&](const le_diagram& d) { got.push_back(d.summary()); });
  REQUIRE(got == std::vector<std::string>{"2 2 VV", "2 1 VH", "2 1 VH 1,2",
                                          "2 1 HV", "2 0 HH"});
}

TEST_CASE("diagram counts") {
  const int expect[] = {2, 5, 16, 65, 326, 1957};
  for (int n = 1; n <= 6; ++n)
    REQUIRE(all_le_diagrams(n).size() == static_cast<std::size_t>(expect[n - 1]));
  for (int n = 1; n <= 4; ++n)
    REQUIRE(static_cast<int>(all_le_diagrams(n).size()) == brute_count(n));
}

TEST_CASE("rank filter partitions the count") {
  std::size_t total = 0;
  for (int r = 0; r <= 4; ++r) {
    std::size_t c = 0;
    for_each_le_diagram(4, r, [&](const le_diagram& d) {
      REQUIRE(d.r() == r);
      ++c;
    });
    if (r == 0 || r == 4) REQUIRE(c == 1);
    total += c;
  }
  REQUIRE(total == 65);
}

TEST_CASE("every generated diagram is valid and distinct") {
  const auto all = all_le_diagrams(5);
  for (std::size_t i = 0; i < all.size(); ++i) {
    REQUIRE(parse_led(to_led(all[i])) == all[i]);  // ctor re-validates
    for (std::size_t j = i + 1; j < all.size() && j < i + 40; ++j)
      REQUIRE_FALSE(all[i] == all[j]);
  }
  REQUIRE(all_le_diagrams(5) == all);  // deterministic order
}

TEST_CASE("generation bounds") {
  REQUIRE_THROWS_AS(all_le_diagrams(0), domain_error);
  REQUIRE_THROWS_AS(all_le_diagrams(25), domain_error);
}

TEST_CASE("catalog is a bijection onto basis sets") {
  for (int n = 1; n <= 6; ++n) {
    const catalog cat = build_catalog(n);
    REQUIRE(cat.n == n);
    REQUIRE(cat.collisions.empty());
    REQUIRE(cat.entries.size() == all_le_diagrams(n).size());
  }
  const catalog c4 = build_catalog(4);
  REQUIRE(c4.entries.size() == 65);
  // Lookup by basis list finds the generating diagram.
  const basis_matroid probe =
      bases(le_graph(parse_led("4 2\nVHVH\n1 2\n3 4\n")));
  const std::size_t idx = c4.find(probe);
  REQUIRE(idx != catalog::npos);
  REQUIRE(c4.entries[idx].matroid == probe);
  // A non-positroid basis set misses.
  REQUIRE(c4.find(basis_matroid(4, 2, {0b0011, 0b1100})) == catalog::npos);
}

TEST_CASE("catalog lines serialize masks as hex") {
  const catalog c2 = build_catalog(2);
  REQUIRE(c2.entries.size() == 5);
  const json first = catalog_line_to_json(c2.entries.front());
  REQUIRE(first["bases"] == json::array({"0x3"}));
  REQUIRE(first["diagram"]["path"] == "VV");
}
