#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "basis_matroid.hpp"
#include "error.hpp"
#include "ground_subset.hpp"
#include "le_graph.hpp"

namespace positroid {

/// A family of pairwise vertex-disjoint directed paths, each a vertex-id
/// sequence from a source to a sink, ordered by starting source label.
struct routing_plan {
  std::vector<std::vector<int>> paths;

  /// Sources actually routed.
  [[nodiscard]] ground_subset routed_sources(const le_graph& g) const {
    ground_subset s;
    for (const auto& p : paths)
      if (!p.empty() && !g.is_internal(p.front())) s.insert(p.front() + 1);
    return s;
  }

  /// Structural validity: every step is an arc of g, paths start in X and
  /// end in Y, and no vertex appears twice anywhere.
  [[nodiscard]] bool verify(const le_graph& g, ground_subset X,
                            ground_subset Y) const {
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& p : paths) {
      if (p.empty()) return false;
      if (g.is_internal(p.front()) || !X.contains(p.front() + 1)) return false;
      if (g.is_internal(p.back()) || !Y.contains(p.back() + 1)) return false;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || p[i] >= g.vertex_count()) return false;
        if (used[static_cast<std::size_t>(p[i])]) return false;
        used[static_cast<std::size_t>(p[i])] = 1;
        if (i + 1 < p.size() &&
            g.right(p[i]) != p[i + 1] && g.up(p[i]) != p[i + 1])
          return false;
      }
    }
    return true;
  }
};

namespace detail {

/// Unit-vertex-capacity max-flow specialized to a le_graph. Every graph
/// vertex v splits into v_in = 2v and v_out = 2v + 1 joined by a
/// capacity-1 arc; graph arcs join u_out to v_in. Augmenting paths start
/// at x_in for x in X (ascending label order) and stop at the first
/// reachable y_out with y in Y; trying each start once is exact because
/// the routable subsets form a matroid and ascending single trials are
/// exactly the greedy independence oracle.
class menger_solver {
 public:
  explicit menger_solver(const le_graph& g) : g_(&g) {
    const int V = g.vertex_count();
    adj_.assign(static_cast<std::size_t>(2 * V), {});
    for (int v = 0; v < V; ++v) add(2 * v, 2 * v + 1);
    for (auto [a, b] : g.arcs()) add(2 * a + 1, 2 * b);
    seen_.assign(adj_.size(), 0);
  }

  /// Maximum number of vertex-disjoint paths X -> Y, optionally avoiding
  /// banned graph vertices. Also records which sources got routed: the
  /// lexicographically first maximum routable subset of X.
  int value(ground_subset X, ground_subset Y,
            const std::vector<char>* banned = nullptr) {
    reset(banned);
    y_ = Y;
    int flow = 0;
    routed_ = {};
    for (int x : X.labels()) {
      if (banned && (*banned)[static_cast<std::size_t>(x - 1)]) continue;
      ++stamp_;
      if (augment(2 * (x - 1))) {
        ++flow;
        routed_.insert(x);
      }
    }
    return flow;
  }

  [[nodiscard]] ground_subset routed() const { return routed_; }

 private:
  struct edge {
    int to;
    int rev;
    signed char cap;
  };

  void add(int a, int b) {
    adj_[static_cast<std::size_t>(a)].push_back(
        {b, static_cast<int>(adj_[static_cast<std::size_t>(b)].size()), 1});
    adj_[static_cast<std::size_t>(b)].push_back(
        {a, static_cast<int>(adj_[static_cast<std::size_t>(a)].size()) - 1,
         0});
  }

  void reset(const std::vector<char>* banned) {
    for (std::size_t u = 0; u < adj_.size(); ++u)
      for (edge& e : adj_[u]) e.cap = forward(static_cast<int>(u), e) ? 1 : 0;
    banned_ = banned;
  }

  [[nodiscard]] bool forward(int u, const edge& e) const {
    // The in->out split arc and the out->in graph arcs are the forward
    // ones; both kinds go from one parity to the other.
    if (u % 2 == 0) return e.to == u + 1;
    return e.to % 2 == 0 && e.to != u - 1;
  }

  bool augment(int u) {
    if (seen_[static_cast<std::size_t>(u)] == stamp_) return false;
    seen_[static_cast<std::size_t>(u)] = stamp_;
    if (banned_ && (*banned_)[static_cast<std::size_t>(u / 2)]) return false;
    if (u % 2 == 1 && u / 2 < g_->n() && y_.contains(u / 2 + 1)) return true;
    for (edge& e : adj_[static_cast<std::size_t>(u)]) {
      if (e.cap <= 0) continue;
      if (augment(e.to)) {
        --e.cap;
        ++adj_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)]
              .cap;
        return true;
      }
    }
    return false;
  }

  const le_graph* g_;
  std::vector<std::vector<edge>> adj_;
  std::vector<int> seen_;
  int stamp_ = 0;
  ground_subset y_;
  ground_subset routed_;
  const std::vector<char>* banned_ = nullptr;
};

}  // namespace detail

/// True when some directed path runs from the given source to the given
/// sink.
[[nodiscard]] inline bool linked(const le_graph& g, int source, int sink) {
  if (!g.sources().contains(source))
    throw domain_error(std::to_string(source) + " is not a source label");
  if (!g.sinks().contains(sink))
    throw domain_error(std::to_string(sink) + " is not a sink label");
  std::vector<int> stack = {source - 1};
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = 1;
    if (v == sink - 1) return true;
    if (g.right(v) != -1) stack.push_back(g.right(v));
    if (g.up(v) != -1) stack.push_back(g.up(v));
  }
  return false;
}

namespace detail {

inline void require_labels(const le_graph& g, ground_subset s,
                           const char* what) {
  if (!s.subset_of(ground_subset::full(g.n())))
    throw domain_error(std::string(what) + " {" + s.to_string() +
                       "} beyond ground set 1.." + std::to_string(g.n()));
}

}  // namespace detail

/// Maximum number of pairwise vertex-disjoint directed paths from sources
/// X to sinks Y.
[[nodiscard]] inline int routing_value(const le_graph& g, ground_subset X,
                                       ground_subset Y) {
  detail::require_labels(g, X, "sources");
  detail::require_labels(g, Y, "sinks");
  if (!X.subset_of(g.sources()))
    throw domain_error("X must contain only source labels");
  if (!Y.subset_of(g.sinks()))
    throw domain_error("Y must contain only sink labels");
  detail::menger_solver s(g);
  return s.value(X, Y);
}

/// A maximum vertex-disjoint routing X -> Y, deterministic across runs:
/// the routed sources are the lexicographically first maximum routable
/// subset of X, and each path in source order is the lexicographically
/// smallest vertex sequence (by vertex id) that keeps the remaining
/// sources routable.
[[nodiscard]] inline routing_plan max_disjoint_routing(const le_graph& g,
                                                       ground_subset X,
                                                       ground_subset Y) {
  detail::require_labels(g, X, "sources");
  detail::require_labels(g, Y, "sinks");
  if (!X.subset_of(g.sources()))
    throw domain_error("X must contain only source labels");
  if (!Y.subset_of(g.sinks()))
    throw domain_error("Y must contain only sink labels");

  detail::menger_solver solver(g);
  solver.value(X, Y);
  const std::vector<int> chosen = solver.routed().labels();

  routing_plan plan;
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    // Remaining sources must stay routable next to the candidate path.
    ground_subset rest;
    for (std::size_t j = k + 1; j < chosen.size(); ++j)
      rest.insert(chosen[j]);

    std::vector<int> path;
    std::vector<char> on_path = used;
    auto feasible = [&](const std::vector<char>& banned) {
      return solver.value(rest, Y, &banned) ==
             static_cast<int>(rest.size());
    };
    // Depth-first search trying the smaller successor vertex first; the
    // first complete path that leaves the rest routable is the answer.
    auto dfs = [&](auto&& self, int v) -> bool {
      path.push_back(v);
      on_path[static_cast<std::size_t>(v)] = 1;
      if (!g.is_internal(v) && Y.contains(v + 1) && feasible(on_path))
        return true;
      int next[2] = {g.right(v), g.up(v)};
      if (next[0] > next[1]) std::swap(next[0], next[1]);
      for (int t : next) {
        if (t == -1 || on_path[static_cast<std::size_t>(t)]) continue;
        if (self(self, t)) return true;
      }
      path.pop_back();
      on_path[static_cast<std::size_t>(v)] = 0;
      return false;
    };
    if (!dfs(dfs, chosen[k] - 1))
      throw guarantee_violation(
          "routing extraction lost a path the flow promised");
    for (int v : path) used[static_cast<std::size_t>(v)] = 1;
    plan.paths.push_back(std::move(path));
  }
  return plan;
}

/// rank(I) = |I ∩ B| + max vertex-disjoint routing from I \ B to B \ I,
/// where B is the sink set.
[[nodiscard]] inline int rank(const le_graph& g, ground_subset I) {
  detail::require_labels(g, I, "subset");
  const ground_subset B = g.sinks();
  detail::menger_solver s(g);
  return (I & B).size() + s.value(I - B, B - I);
}

/// All r-subsets of full rank, as a basis-listed matroid. The sink set is
/// always among them.
[[nodiscard]] inline basis_matroid bases(const le_graph& g) {
  const int n = g.n();
  const int r = g.diagram().r();
  if (n > 24)
    throw domain_error("basis enumeration limited to n <= 24");
  const ground_subset B = g.sinks();
  detail::menger_solver s(g);
  std::vector<std::uint64_t> out;
  if (r == 0) {
    out.push_back(0);
  } else {
    std::uint64_t sub = (1ull << r) - 1;
    const std::uint64_t limit = ground_subset::full(n).mask();
    while (sub <= limit) {
      const ground_subset I = ground_subset::from_mask(sub);
      const ground_subset need = I - B;
      if (s.value(need, B - I) == need.size()) out.push_back(sub);
      const std::uint64_t lo = sub & (~sub + 1);
      const std::uint64_t carry = sub + lo;
      sub = carry | (((sub ^ carry) >> 2) / lo);
    }
  }
  return basis_matroid(n, r, std::move(out));
}

/// Flow-free rank oracle: enumerates every directed path from each source
/// of I \ B, then exact-searches for the largest pairwise vertex-disjoint
/// subfamily ending in B \ I. Exponential and intended for small n only.
[[nodiscard]] inline int brute_force_rank(const le_graph& g,
                                          ground_subset I) {
  detail::require_labels(g, I, "subset");
  if (g.vertex_count() > 64)
    throw domain_error("exhaustive search limited to 64 graph vertices");
  const ground_subset B = g.sinks();
  const ground_subset X = I - B;
  const ground_subset Y = B - I;

  // Per source, all complete paths as (visited-vertex mask, end label).
  struct path_info {
    std::uint64_t mask;
    int end;
  };
  std::vector<std::vector<path_info>> menu;
  for (int x : X.labels()) {
    menu.emplace_back();
    auto& paths = menu.back();
    std::vector<std::pair<int, std::uint64_t>> stack = {
        {x - 1, 1ull << (x - 1)}};
    while (!stack.empty()) {
      auto [v, mk] = stack.back();
      stack.pop_back();
      if (!g.is_internal(v) && g.sinks().contains(v + 1)) {
        if (Y.contains(v + 1)) paths.push_back({mk, v + 1});
        continue;
      }
      for (int t : {g.right(v), g.up(v)})
        if (t != -1) stack.emplace_back(t, mk | (1ull << t));
    }
  }

  // Exact search: each source either skips or takes one of its paths.
  auto best = [&](auto&& self, std::size_t k, std::uint64_t used) -> int {
    if (k == menu.size()) return 0;
    int b = self(self, k + 1, used);
    for (const path_info& p : menu[k])
      if ((p.mask & used) == 0)
        b = std::max(b, 1 + self(self, k + 1, used | p.mask));
    return b;
  };
  return (I & B).size() + best(best, 0, 0);
}

// ---------------------------------------------------------------------
// Arbitrary digraphs
// ---------------------------------------------------------------------

/// Plain adjacency-list digraph for rank oracles over arbitrary vertex
/// sets.
struct digraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adj;
};

[[nodiscard]] inline digraph to_digraph(const le_graph& g) {
  digraph d;
  d.vertex_count = g.vertex_count();
  d.adj.assign(static_cast<std::size_t>(d.vertex_count), {});
  for (auto [a, b] : g.arcs())
    d.adj[static_cast<std::size_t>(a)].push_back(b);
  return d;
}

/// Rank of X in the gammoid of (D, targets): the largest subset of the
/// ground vertices indexed by X routable to the targets by pairwise
/// vertex-disjoint paths, where a ground vertex that is itself a target
/// may use the length-0 path. Ground element i of X means vertex
/// grounds[i-1].
class gammoid_solver {
 public:
  gammoid_solver(digraph d, std::vector<int> targets,
                 std::vector<int> grounds)
      : d_(std::move(d)),
        targets_(std::move(targets)),
        grounds_(std::move(grounds)) {
    for (int t : targets_)
      if (t < 0 || t >= d_.vertex_count)
        throw domain_error("target vertex out of range");
    for (int e : grounds_)
      if (e < 0 || e >= d_.vertex_count)
        throw domain_error("ground vertex out of range");
    if (grounds_.size() > 64)
      throw domain_error("at most 64 ground elements supported");

    const int V = d_.vertex_count;
    // Nodes: v_in = 2v, v_out = 2v + 1, source S = 2V, sink T = 2V + 1.
    adj_.assign(static_cast<std::size_t>(2 * V + 2), {});
    for (int v = 0; v < V; ++v) add(2 * v, 2 * v + 1);
    for (int v = 0; v < V; ++v)
      for (int w : d_.adj[static_cast<std::size_t>(v)]) {
        if (w < 0 || w >= V) throw domain_error("arc endpoint out of range");
        add(2 * v + 1, 2 * w);
      }
    for (int t : targets_) add(2 * t + 1, 2 * V + 1);
    // S -> ground edges are appended per query in rank().
  }

  [[nodiscard]] int rank(ground_subset X) {
    if (!X.subset_of(ground_subset::full(static_cast<int>(grounds_.size()))))
      throw domain_error("X beyond the gammoid ground set");
    for (auto& lst : adj_)
      for (edge& e : lst) e.cap = e.init;
    const int S = 2 * d_.vertex_count;
    const std::size_t base = adj_[static_cast<std::size_t>(S)].size();
    for (int i : X.labels())
      add(S, 2 * grounds_[static_cast<std::size_t>(i - 1)]);
    seen_.assign(adj_.size(), 0);
    int flow = 0;
    while (dfs(S)) {
      ++flow;
      seen_.assign(adj_.size(), 0);
    }
    // Drop the per-query S edges (and their reverses).
    auto& s_edges = adj_[static_cast<std::size_t>(S)];
    for (std::size_t i = base; i < s_edges.size(); ++i) {
      auto& lst = adj_[static_cast<std::size_t>(s_edges[i].to)];
      lst.pop_back();
    }
    s_edges.resize(base);
    return flow;
  }

 private:
  struct edge {
    int to;
    int rev;
    signed char cap;
    signed char init;
  };

  void add(int a, int b) {
    adj_[static_cast<std::size_t>(a)].push_back(
        {b, static_cast<int>(adj_[static_cast<std::size_t>(b)].size()), 1, 1});
    adj_[static_cast<std::size_t>(b)].push_back(
        {a, static_cast<int>(adj_[static_cast<std::size_t>(a)].size()) - 1, 0,
         0});
  }

  bool dfs(int u) {
    if (u == 2 * d_.vertex_count + 1) return true;
    if (seen_[static_cast<std::size_t>(u)]) return false;
    seen_[static_cast<std::size_t>(u)] = 1;
    for (edge& e : adj_[static_cast<std::size_t>(u)]) {
      if (e.cap <= 0) continue;
      if (dfs(e.to)) {
        --e.cap;
        ++adj_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)]
              .cap;
        return true;
      }
    }
    return false;
  }

  digraph d_;
  std::vector<int> targets_;
  std::vector<int> grounds_;
  std::vector<std::vector<edge>> adj_;
  std::vector<char> seen_;
};

[[nodiscard]] inline int gammoid_rank(const digraph& d,
                                      const std::vector<int>& targets,
                                      const std::vector<int>& grounds,
                                      ground_subset X) {
  gammoid_solver s(d, targets, grounds);
  return s.rank(X);
}

}  // namespace positroid
