#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ground_subset.hpp"

namespace positroid {

/// A matroid given by the explicit list of its bases, each an r-subset of
/// {1, ..., n} stored as a bit mask. The basis list is kept sorted
/// ascending by mask value and is the single source of truth for every
/// kernel operation.
struct basis_matroid {
  int n = 0;
  int r = 0;
  std::vector<std::uint64_t> bases;

  basis_matroid(int n_, int r_, std::vector<std::uint64_t> bases_)
      : n(n_), r(r_), bases(std::move(bases_)) {
    if (n < 0 || n > 64) throw domain_error("ground set size out of range");
    if (r < 0 || r > n) throw domain_error("rank out of range");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    if (bases.empty()) throw domain_error("a matroid has at least one basis");
    const std::uint64_t universe = ground_subset::full(n).mask();
    for (std::uint64_t b : bases) {
      if ((b & ~universe) != 0)
        throw domain_error("basis uses labels beyond the ground set");
      if (std::popcount(b) != r)
        throw domain_error("basis of wrong cardinality");
    }
  }

  [[nodiscard]] bool is_basis(ground_subset I) const {
    return std::binary_search(bases.begin(), bases.end(), I.mask());
  }

  [[nodiscard]] ground_subset ground() const { return ground_subset::full(n); }

  [[nodiscard]] bool operator==(const basis_matroid& o) const {
    return n == o.n && r == o.r && bases == o.bases;
  }
};

/// rank(I) = max over bases b of |I intersect b|.
[[nodiscard]] inline int rank_of(const basis_matroid& m, ground_subset I) {
  int best = 0;
  for (std::uint64_t b : m.bases)
    best = std::max(best, std::popcount(b & I.mask()));
  return best;
}

/// A closed set together with its rank.
struct flat {
  ground_subset elements;
  int rank = 0;
  [[nodiscard]] auto operator<=>(const flat&) const = default;
};

/// cl(I): every element whose addition leaves the rank unchanged.
[[nodiscard]] inline flat closure(const basis_matroid& m, ground_subset I) {
  const int rk = rank_of(m, I);
  ground_subset cl = I;
  for (int e = 1; e <= m.n; ++e) {
    if (I.contains(e)) continue;
    ground_subset j = I;
    j.insert(e);
    if (rank_of(m, j) == rk) cl.insert(e);
  }
  return {cl, rk};
}

[[nodiscard]] inline bool is_flat(const basis_matroid& m, ground_subset I) {
  return closure(m, I).elements == I;
}

/// All flats of rank k, ascending by mask value. Built level by level:
/// the flats of rank j+1 are the closures of F + {e} over flats F of rank
/// j and elements e outside F.
[[nodiscard]] inline std::vector<flat> flats_of_rank(const basis_matroid& m,
                                                     int k) {
  if (k < 0 || k > m.r)
    throw domain_error("flat rank " + std::to_string(k) + " out of 0.." +
                       std::to_string(m.r));
  std::vector<std::uint64_t> level = {closure(m, {}).elements.mask()};
  for (int j = 0; j < k; ++j) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t f : level) {
      for (int e = 1; e <= m.n; ++e) {
        ground_subset fe = ground_subset::from_mask(f);
        if (fe.contains(e)) continue;
        fe.insert(e);
        next.push_back(closure(m, fe).elements.mask());
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  std::vector<flat> out;
  out.reserve(level.size());
  for (std::uint64_t f : level)
    out.push_back({ground_subset::from_mask(f), k});
  return out;
}

/// All circuits (minimal dependent sets), ascending by mask value.
[[nodiscard]] inline std::vector<ground_subset> circuits(
    const basis_matroid& m) {
  if (m.n > 24)
    throw domain_error("circuit enumeration limited to n <= 24");
  std::vector<ground_subset> out;
  const std::uint64_t universe = ground_subset::full(m.n).mask();
  for (std::uint64_t c = 1; c <= universe; ++c) {
    ground_subset C = ground_subset::from_mask(c);
    const int sz = C.size();
    if (rank_of(m, C) != sz - 1) continue;  // dependent with nullity 1
    bool minimal = true;
    for (std::uint64_t rest = c; rest != 0 && minimal; rest &= rest - 1) {
      ground_subset del =
          ground_subset::from_mask(c & ~(rest & (~rest + 1)));
      if (rank_of(m, del) != sz - 1) minimal = false;
    }
    if (minimal) out.push_back(C);
  }
  return out;
}

/// Elements in no basis.
[[nodiscard]] inline ground_subset loops(const basis_matroid& m) {
  std::uint64_t any = 0;
  for (std::uint64_t b : m.bases) any |= b;
  return ground_subset::from_mask(ground_subset::full(m.n).mask() & ~any);
}

/// Elements in every basis.
[[nodiscard]] inline ground_subset coloops(const basis_matroid& m) {
  std::uint64_t all = ground_subset::full(m.n).mask();
  for (std::uint64_t b : m.bases) all &= b;
  return ground_subset::from_mask(all);
}

/// Unordered pairs {e, f} of distinct non-loops with rank {e, f} = 1,
/// listed with e < f in ascending (e, f) order.
[[nodiscard]] inline std::vector<std::pair<int, int>> parallel_pairs(
    const basis_matroid& m) {
  std::vector<std::pair<int, int>> out;
  const ground_subset lp = loops(m);
  for (int e = 1; e <= m.n; ++e) {
    if (lp.contains(e)) continue;
    for (int f = e + 1; f <= m.n; ++f) {
      if (lp.contains(f)) continue;
      if (rank_of(m, ground_subset{e, f}) == 1) out.emplace_back(e, f);
    }
  }
  return out;
}

/// No loops and no parallel pairs.
[[nodiscard]] inline bool is_simple(const basis_matroid& m) {
  return loops(m).empty() && parallel_pairs(m).empty();
}

/// One copoint (rank r-1 flat) lying above a coline, with its
/// classification: simple means it adds exactly one element to the coline.
struct classified_copoint {
  flat copoint;
  bool simple = false;
};

/// The copoints above one coline, with the positivity verdict: strictly
/// more simple copoints than multiple ones.
struct coline_report {
  flat coline;
  std::vector<classified_copoint> copoints;  // ascending by mask value
  bool positive = false;

  [[nodiscard]] int simple_count() const {
    int c = 0;
    for (const auto& p : copoints) c += p.simple ? 1 : 0;
    return c;
  }
  [[nodiscard]] int multiple_count() const {
    return static_cast<int>(copoints.size()) - simple_count();
  }
};

/// Classifies every copoint above the coline L. The copoints partition the
/// elements outside L by the closure of L + {e}.
[[nodiscard]] inline coline_report copoints_on(const basis_matroid& m,
                                               ground_subset L) {
  if (m.r < 2) throw domain_error("colines require rank >= 2");
  if (!is_flat(m, L))
    throw domain_error("{" + L.to_string() + "} is not a flat");
  if (rank_of(m, L) != m.r - 2)
    throw domain_error("{" + L.to_string() + "} is a flat of rank " +
                       std::to_string(rank_of(m, L)) + ", not a coline");
  std::vector<std::uint64_t> seen;
  coline_report rep;
  rep.coline = {L, m.r - 2};
  for (int e = 1; e <= m.n; ++e) {
    if (L.contains(e)) continue;
    ground_subset le = L;
    le.insert(e);
    const flat h = closure(m, le);
    if (std::find(seen.begin(), seen.end(), h.elements.mask()) != seen.end())
      continue;
    seen.push_back(h.elements.mask());
    rep.copoints.push_back({h, (h.elements - L).size() == 1});
  }
  std::sort(rep.copoints.begin(), rep.copoints.end(),
            [](const classified_copoint& a, const classified_copoint& b) {
              return a.copoint.elements < b.copoint.elements;
            });
  rep.positive = rep.simple_count() > rep.multiple_count();
  return rep;
}

/// Dual matroid: bases are the complements of the bases.
[[nodiscard]] inline basis_matroid dual(const basis_matroid& m) {
  const std::uint64_t universe = ground_subset::full(m.n).mask();
  std::vector<std::uint64_t> co;
  co.reserve(m.bases.size());
  for (std::uint64_t b : m.bases) co.push_back(universe & ~b);
  return basis_matroid(m.n, m.n - m.r, std::move(co));
}

/// Order-preserving relabeling onto {1, ..., n'}: new label i corresponds
/// to old label to_old[i-1].
struct relabeling {
  std::vector<int> to_old;

  [[nodiscard]] int old_of(int new_label) const {
    return to_old[static_cast<std::size_t>(new_label - 1)];
  }
  [[nodiscard]] int new_of(int old_label) const {
    for (std::size_t i = 0; i < to_old.size(); ++i)
      if (to_old[i] == old_label) return static_cast<int>(i) + 1;
    return 0;
  }
  /// Maps a set of new labels back to old labels.
  [[nodiscard]] ground_subset lift(ground_subset s) const {
    ground_subset out;
    for (int e : s.labels()) out.insert(old_of(e));
    return out;
  }
  /// Maps a set of old labels (all kept) to new labels.
  [[nodiscard]] ground_subset drop(ground_subset s) const {
    ground_subset out;
    for (int e : s.labels()) out.insert(new_of(e));
    return out;
  }
};

struct minor_result {
  basis_matroid matroid;
  relabeling map;
};

/// Simultaneous deletion and contraction, with the surviving elements
/// relabeled 1..n' in their original order. rank'(I) = rank(I + C) -
/// rank(C) on the remaining ground set; bases are its maximal independent
/// sets, enumerated directly.
[[nodiscard]] inline minor_result minor(const basis_matroid& m,
                                        ground_subset deleted,
                                        ground_subset contracted) {
  if (!(deleted & contracted).empty())
    throw domain_error("delete and contract sets overlap");
  if (!deleted.subset_of(m.ground()) || !contracted.subset_of(m.ground()))
    throw domain_error("minor labels beyond the ground set");
  const ground_subset kept = m.ground() - deleted - contracted;
  const int rc = rank_of(m, contracted);
  const int nr = rank_of(m, kept | contracted) - rc;
  relabeling map{kept.labels()};

  const std::vector<int> old_labels = map.to_old;
  const int nn = static_cast<int>(old_labels.size());
  std::vector<std::uint64_t> nb;
  // All nr-subsets of the kept elements, in ascending new-label mask order
  // (Gosper's hack), filtered by the contracted rank condition.
  if (nr == 0) {
    nb.push_back(0);
  } else {
    std::uint64_t sub = (1ull << nr) - 1;
    const std::uint64_t limit = nn >= 64 ? ~0ull : (1ull << nn) - 1;
    while (sub <= limit) {
      ground_subset old_set = contracted;
      for (std::uint64_t t = sub; t != 0; t &= t - 1)
        old_set.insert(old_labels[static_cast<std::size_t>(
            std::countr_zero(t))]);
      if (rank_of(m, old_set) == nr + rc) nb.push_back(sub);
      const std::uint64_t lo = sub & (~sub + 1);
      const std::uint64_t carry = sub + lo;
      sub = carry | (((sub ^ carry) >> 2) / lo);
      if (carry == 0) break;
    }
  }
  return {basis_matroid(nn, nr, std::move(nb)), std::move(map)};
}

}  // namespace positroid
