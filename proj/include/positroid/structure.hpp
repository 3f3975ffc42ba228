#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "basis_matroid.hpp"
#include "le_diagram.hpp"
#include "le_graph.hpp"
#include "routing.hpp"

namespace positroid {

/// One level of a diagram: a maximal run of sinks together with the
/// maximal run of sources following it.
struct level {
  ground_subset elements;
  [[nodiscard]] auto operator<=>(const level&) const = default;
};

/// Sources preceding the first sink. They form no level of their own.
[[nodiscard]] inline ground_subset leading_sources(const le_diagram& d) {
  ground_subset out;
  for (int i = 1; i <= d.n() && d.is_source(i); ++i) out.insert(i);
  return out;
}

/// The ordered level decomposition of the path after any leading sources.
[[nodiscard]] inline std::vector<level> levels(const le_diagram& d) {
  std::vector<level> out;
  int i = leading_sources(d).size() + 1;
  while (i <= d.n()) {
    level lv;
    while (i <= d.n() && d.is_sink(i)) lv.elements.insert(i++);
    while (i <= d.n() && d.is_source(i)) lv.elements.insert(i++);
    out.push_back(lv);
  }
  return out;
}

/// The ground-set partition induced by linkage: blocks are the connected
/// components of the source-sink linkage relation. Loops (sources linked
/// to no sink) and coloops (sinks no source links to) come out as
/// singleton blocks, as do leading sources.
struct decomposition_report {
  std::vector<ground_subset> blocks;   // ordered by smallest element
  bool connected = false;              // exactly one block
  /// 1-based indices into levels(d) met by each block (empty for blocks
  /// living outside every level, i.e. leading sources).
  std::vector<std::vector<int>> block_levels;
};

[[nodiscard]] inline decomposition_report isolated_blocks(
    const le_diagram& d) {
  const int n = d.n();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v)
      v = parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(
              parent[static_cast<std::size_t>(v)])];
    return v;
  };
  auto unite = [&](int a, int b) {
    parent[static_cast<std::size_t>(find(a))] = find(b);
  };

  const le_graph g(d);
  for (int h : d.sources().labels())
    for (int v : d.sinks().labels())
      if (linked(g, h, v)) unite(h - 1, v - 1);

  std::vector<ground_subset> blocks;
  std::vector<int> root_block(static_cast<std::size_t>(n), -1);
  for (int e = 1; e <= n; ++e) {
    const int root = find(e - 1);
    if (root_block[static_cast<std::size_t>(root)] == -1) {
      root_block[static_cast<std::size_t>(root)] =
          static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(root_block[static_cast<std::size_t>(root)])]
        .insert(e);
  }

  decomposition_report rep;
  rep.blocks = std::move(blocks);
  rep.connected = rep.blocks.size() <= 1;
  const std::vector<level> lv = levels(d);
  for (const ground_subset& b : rep.blocks) {
    std::vector<int> touching;
    for (std::size_t i = 0; i < lv.size(); ++i)
      if (!(b & lv[i].elements).empty())
        touching.push_back(static_cast<int>(i) + 1);
    rep.block_levels.push_back(std::move(touching));
  }
  return rep;
}

/// Matroid-level connectivity: every two elements lie on a common
/// circuit. Matroids with at most one element count as connected.
[[nodiscard]] inline bool is_connected(const basis_matroid& m) {
  if (m.n <= 1) return true;
  // covered[e-1] accumulates the elements sharing a circuit with e.
  std::vector<std::uint64_t> covered(static_cast<std::size_t>(m.n), 0);
  for (const ground_subset& c : circuits(m))
    for (int e : c.labels())
      covered[static_cast<std::size_t>(e - 1)] |= c.mask();
  const std::uint64_t all = ground_subset::full(m.n).mask();
  for (std::uint64_t row : covered)
    if (row != all) return false;
  return true;
}

/// Some circuit touches every rank, i.e. has cardinality rank + 1.
[[nodiscard]] inline bool has_spanning_circuit(const basis_matroid& m) {
  for (const ground_subset& c : circuits(m))
    if (c.size() == m.r + 1) return true;
  return false;
}

/// The sub-diagram on one block: the path restricted to the block's
/// labels (order preserved, relabeled 1..|block|) with the dots both of
/// whose coordinates lie in the block. Blocks never share dots, so this
/// is exactly the diagram of the block's component.
[[nodiscard]] inline le_diagram restrict_diagram(const le_diagram& d,
                                                 ground_subset block) {
  if (!block.subset_of(ground_subset::full(d.n())))
    throw domain_error("block beyond the ground set");
  if (block.empty()) throw domain_error("cannot restrict to the empty set");
  const std::vector<int> keep = block.labels();
  std::string path;
  for (int e : keep) path += d.path()[static_cast<std::size_t>(e - 1)];
  relabeling map{keep};
  std::vector<dot> dots;
  for (const dot& t : d.dots())
    if (block.contains(t.s) && block.contains(t.h))
      dots.push_back({map.new_of(t.s), map.new_of(t.h)});
  return le_diagram(static_cast<int>(keep.size()), std::move(path),
                    std::move(dots));
}

/// One connected component of a decomposition: its elements in the
/// original labeling, plus its matroid and diagram relabeled 1..|block|.
struct component {
  ground_subset elements;
  basis_matroid matroid;
  le_diagram diagram;
};

/// Splits m along the blocks of its diagram. The component matroids are
/// the restrictions of m, rebuilt from the restricted diagrams.
[[nodiscard]] inline std::vector<component> decompose(const basis_matroid& m,
                                                      const le_diagram& d) {
  if (m.n != d.n())
    throw domain_error("matroid and diagram ground sets differ");
  std::vector<component> out;
  for (const ground_subset& b : isolated_blocks(d).blocks) {
    le_diagram sub = restrict_diagram(d, b);
    basis_matroid sm = bases(le_graph(sub));
    out.push_back({b, std::move(sm), std::move(sub)});
  }
  return out;
}

// ---------------------------------------------------------------------
// Graph-level detectors. Each must agree with the basis-level operation
// of the same name; the exhaustive suites check that on every diagram.
// ---------------------------------------------------------------------

/// Loops are the sources linked to no sink: their column has no dot.
[[nodiscard]] inline ground_subset graph_loops(const le_diagram& d) {
  ground_subset out = d.sources();
  for (const dot& t : d.dots()) out.erase(t.h);
  return out;
}

/// Coloops are the sinks no source links to: their row has no dot.
[[nodiscard]] inline ground_subset graph_coloops(const le_diagram& d) {
  ground_subset out = d.sinks();
  for (const dot& t : d.dots()) out.erase(t.s);
  return out;
}

/// Parallel pairs read off the graph, no basis list involved:
///  - source/sink {h, v}: h is linked to v and to no other sink;
///  - source/source {hi, hj} with hi < hj: every path leaving hj passes
///    through the lowest dot of hi's column.
/// Loops take part in no pair. Output matches parallel_pairs() ordering.
[[nodiscard]] inline std::vector<std::pair<int, int>> graph_parallel_pairs(
    const le_diagram& d) {
  const le_graph g(d);
  const int n = d.n();

  // Reachable sink set per source, by label.
  std::vector<ground_subset> links(static_cast<std::size_t>(n + 1));
  for (int h : d.sources().labels())
    for (int v : d.sinks().labels())
      if (linked(g, h, v)) links[static_cast<std::size_t>(h)].insert(v);

  // Lowest dot of each source column (the first vertex above the source).
  std::vector<int> first_above(static_cast<std::size_t>(n + 1), -1);
  for (int h : d.sources().labels())
    first_above[static_cast<std::size_t>(h)] = g.up(h - 1);

  auto passes_through = [&](int hj, int w) {
    // True when every maximal path from source hj visits vertex w.
    // Equivalently: removing w leaves nothing reachable from hj... except
    // paths may die before any sink; so check instead that no sink stays
    // reachable once w is removed.
    std::vector<int> stack = {hj - 1};
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (v == w || seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (!g.is_internal(v) && d.is_sink(v + 1)) return false;
      if (g.right(v) != -1) stack.push_back(g.right(v));
      if (g.up(v) != -1) stack.push_back(g.up(v));
    }
    return true;
  };

  std::vector<std::pair<int, int>> out;
  for (int e = 1; e <= n; ++e) {
    for (int f = e + 1; f <= n; ++f) {
      if (d.is_sink(e) && d.is_sink(f)) continue;  // sinks are independent
      if (d.is_sink(e) || d.is_sink(f)) {
        const int v = d.is_sink(e) ? e : f;
        const int h = d.is_sink(e) ? f : e;
        if (links[static_cast<std::size_t>(h)] == ground_subset{v})
          out.emplace_back(e, f);
        continue;
      }
      // Two sources; the right one carries the smaller label.
      const int hi = e, hj = f;
      if (links[static_cast<std::size_t>(hi)].empty() ||
          links[static_cast<std::size_t>(hj)].empty())
        continue;  // loops
      const int w = first_above[static_cast<std::size_t>(hi)];
      if (w != -1 && passes_through(hj, w)) out.emplace_back(e, f);
    }
  }
  return out;
}

}  // namespace positroid
