#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "coline.hpp"
#include "le_diagram.hpp"
#include "le_graph.hpp"
#include "routing.hpp"
#include "structure.hpp"

namespace positroid {

namespace detail {

/// Box scan order used by the generator: rows by ascending sink label,
/// inside a row by ascending source label.
struct box_scan {
  struct box {
    int s, h;
    bool first_of_row;
  };
  std::vector<box> boxes;

  explicit box_scan(const std::string& path) {
    const int n = static_cast<int>(path.size());
    for (int s = 1; s <= n; ++s) {
      if (path[static_cast<std::size_t>(s - 1)] != 'V') continue;
      bool first = true;
      for (int h = s + 1; h <= n; ++h) {
        if (path[static_cast<std::size_t>(h - 1)] != 'H') continue;
        boxes.push_back({s, h, first});
        first = false;
      }
    }
  }
};

template <class F>
void gen_fillings(const std::string& path, const box_scan& scan, F&& emit) {
  const int n = static_cast<int>(path.size());
  std::vector<dot> dots;
  // col_above: columns holding a dot in some earlier row. row_dots:
  // columns dotted in the current row. Once the current row passes an
  // empty box whose column has a dot above, no later box of the row may
  // be dotted; this check is exactly the exclusion rule, applied the
  // moment the would-be offending left dot is placed.
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t col_above,
                 std::uint64_t row_dots, bool row_blocked) -> void {
    if (i == scan.boxes.size()) {
      emit(le_diagram(n, path, dots));
      return;
    }
    const auto& b = scan.boxes[i];
    if (b.first_of_row) {
      col_above |= row_dots;
      row_dots = 0;
      row_blocked = false;
    }
    const std::uint64_t colbit = 1ull << (b.h - 1);
    // Leave (s, h) empty; if its column carries a dot above, the rest of
    // the row is locked empty.
    self(self, i + 1, col_above, row_dots,
         row_blocked || (col_above & colbit) != 0);
    if (!row_blocked) {
      dots.push_back({b.s, b.h});
      self(self, i + 1, col_above, row_dots | colbit, false);
      dots.pop_back();
    }
  };
  rec(rec, 0, 0, 0, false);
}

}  // namespace detail

/// Streams every valid diagram on n labels (optionally of one fixed rank)
/// in a deterministic order: paths sorted with V before H positionwise,
/// then fillings by ascending dot-set over the box scan order.
template <class F>
void for_each_le_diagram(int n, std::optional<int> r, F&& f) {
  if (n < 1 || n > 24) throw domain_error("enumeration needs 1 <= n <= 24");
  if (r && (*r < 0 || *r > n)) throw domain_error("rank filter out of range");
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits) {
    std::string path;
    int sinks = 0;
    for (int i = 0; i < n; ++i) {
      const bool source = (bits >> (n - 1 - i)) & 1;
      path += source ? 'H' : 'V';
      sinks += source ? 0 : 1;
    }
    if (r && sinks != *r) continue;
    const detail::box_scan scan(path);
    detail::gen_fillings(path, scan, f);
  }
}

[[nodiscard]] inline std::vector<le_diagram> all_le_diagrams(
    int n, std::optional<int> r = std::nullopt) {
  std::vector<le_diagram> out;
  for_each_le_diagram(n, r, [&](le_diagram d) { out.push_back(std::move(d)); });
  return out;
}

/// Diagram catalog for one ground-set size, keyed by the basis list.
/// Distinct diagrams must give distinct matroids; any collision is kept
/// for the caller to inspect.
struct catalog_entry {
  le_diagram diagram;
  basis_matroid matroid;
};

struct catalog {
  int n = 0;
  std::vector<catalog_entry> entries;  // in generation order
  std::vector<std::pair<le_diagram, std::size_t>> collisions;

  /// Index of the entry with exactly these bases, or npos.
  [[nodiscard]] std::size_t find(const basis_matroid& m) const {
    auto it = index_.find(m.bases);
    return it == index_.end() ? npos : it->second;
  }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::map<std::vector<std::uint64_t>, std::size_t> index_;
};

[[nodiscard]] inline catalog build_catalog(int n) {
  catalog c;
  c.n = n;
  for_each_le_diagram(n, std::nullopt, [&](le_diagram d) {
    basis_matroid m = bases(le_graph(d));
    auto [it, fresh] = c.index_.try_emplace(m.bases, c.entries.size());
    if (fresh)
      c.entries.push_back({std::move(d), std::move(m)});
    else
      c.collisions.emplace_back(std::move(d), it->second);
  });
  return c;
}

// ---------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------

enum class suite {
  theorem,      // every simple diagram of rank >= 3 yields a positive coline
  corollary,    // connected ones: candidate A or candidate B is positive
  lemma,        // one block <=> matroid-connected
  duality,      // duals of cataloged matroids are cataloged
  rank_oracle,  // routing rank == exhaustive search == gammoid rank
  axioms,       // basis exchange, rank laws, closure laws
  all,
};

[[nodiscard]] inline std::string suite_name(suite s) {
  switch (s) {
    case suite::theorem: return "theorem";
    case suite::corollary: return "corollary";
    case suite::lemma: return "lemma";
    case suite::duality: return "duality";
    case suite::rank_oracle: return "rank-oracle";
    case suite::axioms: return "axioms";
    case suite::all: return "all";
  }
  return "?";
}

[[nodiscard]] inline std::optional<suite> suite_from_name(
    const std::string& name) {
  for (suite s : {suite::theorem, suite::corollary, suite::lemma,
                  suite::duality, suite::rank_oracle, suite::axioms,
                  suite::all})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

/// One verification discrepancy: which diagram, what went wrong.
struct verification_failure {
  int n = 0;
  std::string diagram;  // le_diagram::summary()
  std::string reason;
};

struct branch_count {
  int n = 0;
  long a = 0;  // candidate A positive
  long b = 0;  // candidate A rejected, candidate B positive
};

struct verification_report {
  std::map<std::string, int> suite_n_max;  // per executed concrete suite
  long diagrams_checked = 0;
  long simple_rank3plus_count = 0;
  long witness_checked = 0;
  std::vector<branch_count> corollary_branches;  // one entry per n
  std::vector<verification_failure> theorem_failures;
  std::vector<verification_failure> corollary_failures;
  std::vector<verification_failure> lemma_mismatches;
  std::vector<verification_failure> duality_misses;
  std::vector<verification_failure> oracle_mismatches;
  std::vector<verification_failure> axiom_violations;

  [[nodiscard]] int n_hi() const {
    int hi = 0;
    for (const auto& [name, nm] : suite_n_max) hi = std::max(hi, nm);
    return hi;
  }
  [[nodiscard]] bool ok() const {
    return theorem_failures.empty() && corollary_failures.empty() &&
           lemma_mismatches.empty() && duality_misses.empty() &&
           oracle_mismatches.empty() && axiom_violations.empty();
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d4f3215eb7bd4dull;
  return z ^ (z >> 31);
}

inline void check_theorem_one(const le_diagram& d, const basis_matroid& m,
                              verification_report& rep) {
  if (m.r < 3 || !is_simple(m)) return;
  ++rep.simple_rank3plus_count;
  try {
    const positive_coline_result res = positive_coline(m, d);
    if (!res.report.positive) {
      rep.theorem_failures.push_back(
          {d.n(), d.summary(), "returned coline is not positive"});
      return;
    }
    const cocircuit_witness w = cocircuit_pair_witness(m, res.report);
    ++rep.witness_checked;
    if ((w.c1 ^ w.c2).size() != 2)
      rep.theorem_failures.push_back(
          {d.n(), d.summary(), "witness symmetric difference is not a pair"});
  } catch (const guarantee_violation&) {
    throw;  // falsification is fatal by design
  } catch (const error& e) {
    rep.theorem_failures.push_back(
        {d.n(), d.summary(), std::string("unexpected error: ") + e.what()});
  }
}

inline void check_corollary_one(const le_diagram& d, const basis_matroid& m,
                                branch_count& stats,
                                verification_report& rep) {
  if (m.r < 3 || !is_simple(m)) return;
  if (!isolated_blocks(d).connected) return;
  try {
    const std::vector<sink_pair> pairs = consecutive_sink_pairs(d);
    if (pairs.empty()) {
      rep.corollary_failures.push_back(
          {d.n(), d.summary(), "no consecutive sink pair exists"});
      return;
    }
    const sink_pair p = pairs.back();
    const candidate_colines_result cands = candidate_colines(m, p, d.sinks());
    if (copoints_on(m, cands.a.elements).positive) {
      ++stats.a;
      return;
    }
    if (cands.b && copoints_on(m, cands.b->elements).positive) {
      ++stats.b;
      return;
    }
    // The two-candidate rule failed for the last pair. Record how far the
    // search had to widen to find a positive coline; the verdict stays a
    // failure either way because the rule under test is the strict one.
    std::string note = "neither candidate of pair (" + std::to_string(p.v_i) +
                       "," + std::to_string(p.v_next) + ") is positive";
    bool rescued = false;
    for (auto it = std::next(pairs.rbegin()); it != pairs.rend() && !rescued;
         ++it) {
      const candidate_colines_result c2 = candidate_colines(m, *it, d.sinks());
      if (copoints_on(m, c2.a.elements).positive)
        note += "; earlier pair (" + std::to_string(it->v_i) + "," +
                std::to_string(it->v_next) + ") candidate A is positive",
            rescued = true;
      else if (c2.b && copoints_on(m, c2.b->elements).positive)
        note += "; earlier pair (" + std::to_string(it->v_i) + "," +
                std::to_string(it->v_next) + ") candidate B is positive",
            rescued = true;
    }
    if (!rescued) {
      note += "; no pair candidate is positive";
      for (const flat& L : flats_of_rank(m, m.r - 2))
        if (copoints_on(m, L.elements).positive) {
          note += "; coline {" + L.elements.to_string() + "} is positive";
          rescued = true;
          break;
        }
      if (!rescued) note += "; no positive coline exists at all";
    }
    rep.corollary_failures.push_back({d.n(), d.summary(), note});
  } catch (const guarantee_violation&) {
    throw;
  } catch (const error& e) {
    rep.corollary_failures.push_back(
        {d.n(), d.summary(), std::string("unexpected error: ") + e.what()});
  }
}

inline void check_lemma_one(const le_diagram& d, const basis_matroid& m,
                            verification_report& rep) {
  const bool one_block = isolated_blocks(d).connected;
  const bool connected = is_connected(m);
  if (one_block != connected)
    rep.lemma_mismatches.push_back(
        {d.n(), d.summary(),
         std::string("blocks say ") + (one_block ? "connected" : "split") +
             ", circuits say " + (connected ? "connected" : "split")});
}

inline void check_rank_oracle_one(const le_diagram& d, const le_graph& g,
                                  verification_report& rep) {
  menger_solver solver(g);
  const ground_subset B = g.sinks();
  std::vector<int> externals(static_cast<std::size_t>(d.n()));
  for (int i = 0; i < d.n(); ++i) externals[static_cast<std::size_t>(i)] = i;
  std::vector<int> targets;
  for (int v : B.labels()) targets.push_back(v - 1);
  gammoid_solver gs(to_digraph(g), targets, externals);

  const std::uint64_t universe = ground_subset::full(d.n()).mask();
  for (std::uint64_t sub = 0;; ++sub) {
    const ground_subset I = ground_subset::from_mask(sub);
    const int via_routing =
        (I & B).size() + solver.value(I - B, B - I);
    const int via_search = brute_force_rank(g, I);
    const int via_gammoid = gs.rank(I);
    if (via_routing != via_search || via_routing != via_gammoid)
      rep.oracle_mismatches.push_back(
          {d.n(), d.summary(),
           "rank{" + I.to_string() + "}: routing " +
               std::to_string(via_routing) + ", search " +
               std::to_string(via_search) + ", gammoid " +
               std::to_string(via_gammoid)});
    if (sub == universe) break;
  }
}

inline void check_axioms_one(const le_diagram& d, const basis_matroid& m,
                             std::uint64_t seed, verification_report& rep) {
  auto fail = [&](const std::string& why) {
    rep.axiom_violations.push_back({d.n(), d.summary(), why});
  };

  // Basis exchange: remove any e from b1, some f of b2 repairs it.
  for (std::uint64_t b1 : m.bases)
    for (std::uint64_t b2 : m.bases) {
      if (b1 == b2) continue;
      for (std::uint64_t rm = b1 & ~b2; rm != 0; rm &= rm - 1) {
        const std::uint64_t without = b1 & ~(rm & (~rm + 1));
        bool repaired = false;
        for (std::uint64_t add = b2 & ~b1; add != 0 && !repaired;
             add &= add - 1)
          repaired = m.is_basis(
              ground_subset::from_mask(without | (add & (~add + 1))));
        if (!repaired) {
          fail("basis exchange fails between {" +
               ground_subset::from_mask(b1).to_string() + "} and {" +
               ground_subset::from_mask(b2).to_string() + "}");
          break;
        }
      }
    }

  // Rank: normalization, unit increase, monotonicity under one element;
  // closure: extensive + idempotent. Exhaustive over all subsets.
  const std::uint64_t universe = ground_subset::full(m.n).mask();
  for (std::uint64_t sub = 0;; ++sub) {
    const ground_subset I = ground_subset::from_mask(sub);
    const int ri = rank_of(m, I);
    if (ri > I.size() || ri > m.r) fail("rank above cardinality or total");
    for (int e = 1; e <= m.n; ++e) {
      if (I.contains(e)) continue;
      ground_subset J = I;
      J.insert(e);
      const int rj = rank_of(m, J);
      if (rj < ri || rj > ri + 1)
        fail("unit increase fails at {" + I.to_string() + "} + " +
             std::to_string(e));
    }
    const flat cl = closure(m, I);
    if (!I.subset_of(cl.elements)) fail("closure not extensive");
    if (closure(m, cl.elements).elements != cl.elements)
      fail("closure not idempotent at {" + I.to_string() + "}");
    if (sub == universe) break;
  }

  // Submodularity and closure monotonicity on deterministic samples.
  std::uint64_t state = seed;
  for (int t = 0; t < 64; ++t) {
    const ground_subset A =
        ground_subset::from_mask(splitmix64(state) & universe);
    const ground_subset Bs =
        ground_subset::from_mask(splitmix64(state) & universe);
    if (rank_of(m, A | Bs) + rank_of(m, A & Bs) >
        rank_of(m, A) + rank_of(m, Bs))
      fail("submodularity fails at {" + A.to_string() + "}, {" +
           Bs.to_string() + "}");
    const ground_subset sub_a = A & Bs;  // sub_a subset of A
    if (!closure(m, sub_a).elements.subset_of(closure(m, A).elements))
      fail("closure not monotone at {" + sub_a.to_string() + "} in {" +
           A.to_string() + "}");
  }
}

inline void check_duality_n(int n, verification_report& rep) {
  const catalog cat = build_catalog(n);
  for (const catalog_entry& e : cat.entries) {
    const basis_matroid dm = dual(e.matroid);
    if (cat.find(dm) == catalog::npos)
      rep.duality_misses.push_back(
          {n, e.diagram.summary(), "dual matroid not cataloged"});
  }
  rep.diagrams_checked += static_cast<long>(cat.entries.size()) +
                          static_cast<long>(cat.collisions.size());
}

}  // namespace detail

/// Default enumeration ceilings per suite.
[[nodiscard]] inline int default_n_max(suite s) {
  switch (s) {
    case suite::theorem:
    case suite::corollary: return 8;
    case suite::duality: return 6;
    default: return 7;
  }
}

/// Runs one suite (or all of them) over every diagram with up to n_max
/// labels (per-suite defaults when n_max is absent). Discrepancies are
/// data in the report, not errors; only a falsified construction
/// guarantee escapes as guarantee_violation. `threads` > 1 splits the
/// per-n diagram list into contiguous chunks merged in order, so reports
/// are identical across thread counts.
[[nodiscard]] inline verification_report verify(
    suite which, std::optional<int> n_max = std::nullopt, int threads = 1) {
  std::vector<suite> selected;
  if (which == suite::all)
    selected = {suite::theorem, suite::corollary, suite::lemma,
                suite::duality, suite::rank_oracle, suite::axioms};
  else
    selected = {which};

  verification_report rep;
  for (suite s : selected)
    rep.suite_n_max[suite_name(s)] = n_max ? *n_max : default_n_max(s);

  const auto wants = [&](suite s) {
    return std::find(selected.begin(), selected.end(), s) != selected.end();
  };

  const int overall = rep.n_hi();
  for (int n = 1; n <= overall; ++n) {
    const auto in_range = [&](suite s) {
      return wants(s) && n <= rep.suite_n_max[suite_name(s)];
    };
    const bool need_diagrams =
        in_range(suite::theorem) || in_range(suite::corollary) ||
        in_range(suite::lemma) || in_range(suite::rank_oracle) ||
        in_range(suite::axioms);

    if (need_diagrams) {
      const std::vector<le_diagram> diagrams = all_le_diagrams(n);
      branch_count branches{n, 0, 0};

      auto process = [&](std::size_t lo, std::size_t hi,
                         verification_report& out, branch_count& bc) {
        for (std::size_t i = lo; i < hi; ++i) {
          const le_diagram& d = diagrams[i];
          const le_graph g(d);
          const basis_matroid m = bases(g);
          ++out.diagrams_checked;
          if (in_range(suite::theorem)) detail::check_theorem_one(d, m, out);
          if (in_range(suite::corollary))
            detail::check_corollary_one(d, m, bc, out);
          if (in_range(suite::lemma)) detail::check_lemma_one(d, m, out);
          if (in_range(suite::rank_oracle))
            detail::check_rank_oracle_one(d, g, out);
          if (in_range(suite::axioms))
            detail::check_axioms_one(
                d, m, 0x9E3779B9ull * static_cast<std::uint64_t>(i + 1), out);
        }
      };

      if (threads <= 1 || diagrams.size() < 256) {
        process(0, diagrams.size(), rep, branches);
      } else {
        const std::size_t parts =
            std::min<std::size_t>(static_cast<std::size_t>(threads),
                                  diagrams.size());
        std::vector<verification_report> outs(parts);
        std::vector<branch_count> bcs(parts, branch_count{n, 0, 0});
        std::vector<std::thread> pool;
        for (std::size_t p = 0; p < parts; ++p) {
          const std::size_t lo = diagrams.size() * p / parts;
          const std::size_t hi = diagrams.size() * (p + 1) / parts;
          pool.emplace_back([&, lo, hi, p] { process(lo, hi, outs[p], bcs[p]); });
        }
        for (auto& t : pool) t.join();
        for (std::size_t p = 0; p < parts; ++p) {
          const verification_report& o = outs[p];
          rep.diagrams_checked += o.diagrams_checked;
          rep.simple_rank3plus_count += o.simple_rank3plus_count;
          rep.witness_checked += o.witness_checked;
          auto append = [](auto& dst, const auto& src) {
            dst.insert(dst.end(), src.begin(), src.end());
          };
          append(rep.theorem_failures, o.theorem_failures);
          append(rep.corollary_failures, o.corollary_failures);
          append(rep.lemma_mismatches, o.lemma_mismatches);
          append(rep.oracle_mismatches, o.oracle_mismatches);
          append(rep.axiom_violations, o.axiom_violations);
          branches.a += bcs[p].a;
          branches.b += bcs[p].b;
        }
      }
      if (in_range(suite::corollary)) rep.corollary_branches.push_back(branches);
    }

    if (in_range(suite::duality)) detail::check_duality_n(n, rep);
  }
  return rep;
}

}  // namespace positroid
