#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "le_diagram.hpp"

namespace positroid {

/// Directed acyclic graph attached to a diagram.
///
/// Vertices: one external vertex per path edge (labels 1..n; sinks on 'V'
/// edges, sources on 'H' edges) and one internal vertex per dot. Arcs run
/// rightward within a row (from a dot to the next dot with smaller column
/// label, the last one reaching the row's sink) and upward within a column
/// (from the source to the lowest dot of the column, then dot to dot toward
/// smaller row labels). Arcs never join two external vertices, so sinks
/// have out-degree 0 and sources in-degree 0.
///
/// Vertex ids: 0..n-1 are the externals (id = label - 1); internal vertex
/// ids follow in (s, h) order.
class le_graph {
 public:
  explicit le_graph(le_diagram d) : diagram_(std::move(d)) {
    const int n = diagram_.n();
    const auto& dots = diagram_.dots();
    const int v = n + static_cast<int>(dots.size());
    right_.assign(static_cast<std::size_t>(v), -1);
    up_.assign(static_cast<std::size_t>(v), -1);

    // Rightward row arcs: dots of a row in descending column order chain
    // toward the sink. dots() is sorted by (s, h), so within a row the
    // successor toward the sink is the previous entry of the same s, and
    // the first entry of the row feeds the sink itself.
    for (std::size_t i = 0; i < dots.size(); ++i) {
      const bool first_of_row = i == 0 || dots[i - 1].s != dots[i].s;
      right_[static_cast<std::size_t>(n) + i] =
          first_of_row ? dots[i].s - 1
                       : n + static_cast<int>(i) - 1;
    }

    // Upward column arcs: per column, source -> lowest dot (largest s),
    // then each dot -> nearest dot above it (least s exceeding its own).
    for (std::size_t i = 0; i < dots.size(); ++i) {
      int below = -1, below_s = 0;  // vertex directly underneath dots[i]
      for (std::size_t j = 0; j < dots.size(); ++j) {
        if (dots[j].h != dots[i].h || dots[j].s <= dots[i].s) continue;
        if (below == -1 || dots[j].s < below_s) {
          below = static_cast<int>(j) + n;
          below_s = dots[j].s;
        }
      }
      if (below == -1) below = dots[i].h - 1;  // the column's source
      up_[static_cast<std::size_t>(below)] = static_cast<int>(i) + n;
    }
  }

  [[nodiscard]] const le_diagram& diagram() const { return diagram_; }
  [[nodiscard]] int n() const { return diagram_.n(); }
  [[nodiscard]] ground_subset sinks() const { return diagram_.sinks(); }
  [[nodiscard]] ground_subset sources() const { return diagram_.sources(); }

  [[nodiscard]] int vertex_count() const {
    return n() + static_cast<int>(diagram_.dots().size());
  }
  [[nodiscard]] int external_vertex(int label) const { return label - 1; }
  [[nodiscard]] bool is_internal(int v) const { return v >= n(); }
  [[nodiscard]] dot dot_of(int v) const {
    return diagram_.dots()[static_cast<std::size_t>(v - n())];
  }

  /// Rightward out-arc target of v, or -1.
  [[nodiscard]] int right(int v) const {
    return right_[static_cast<std::size_t>(v)];
  }
  /// Upward out-arc target of v, or -1.
  [[nodiscard]] int up(int v) const {
    return up_[static_cast<std::size_t>(v)];
  }

  [[nodiscard]] int arc_count() const {
    int c = 0;
    for (int v = 0; v < vertex_count(); ++v)
      c += (right(v) != -1 ? 1 : 0) + (up(v) != -1 ? 1 : 0);
    return c;
  }

  /// All arcs, ordered by (tail vertex id, right-before-up).
  [[nodiscard]] std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(arc_count()));
    for (int v = 0; v < vertex_count(); ++v) {
      if (right(v) != -1) out.emplace_back(v, right(v));
      if (up(v) != -1) out.emplace_back(v, up(v));
    }
    return out;
  }

  /// "3" for externals, "(2,6)" for internals. Stable across runs.
  [[nodiscard]] std::string vertex_name(int v) const {
    if (!is_internal(v)) return std::to_string(v + 1);
    const dot d = dot_of(v);
    return "(" + std::to_string(d.s) + "," + std::to_string(d.h) + ")";
  }

 private:
  le_diagram diagram_;
  std::vector<int> right_;
  std::vector<int> up_;
};

inline le_graph build_le_graph(const le_diagram& d) { return le_graph(d); }

/// Deterministic DOT rendering: one line per vertex (externals first, then
/// internals in (s, h) order), then one line per arc in arcs() order.
inline std::string to_dot(const le_graph& g) {
  std::string out = "digraph le {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out += "  \"" + g.vertex_name(v) + "\" [";
    if (g.is_internal(v)) {
      out += "kind=dot shape=point";
    } else if (g.sinks().contains(v + 1)) {
      out += "kind=sink shape=doublecircle";
    } else {
      out += "kind=source shape=circle";
    }
    out += "];\n";
  }
  for (auto [a, b] : g.arcs())
    out += "  \"" + g.vertex_name(a) + "\" -> \"" + g.vertex_name(b) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace positroid
