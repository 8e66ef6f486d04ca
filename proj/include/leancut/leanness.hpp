#pragma once

/**
 * Leanness checking and minimal counterexamples.  A decomposition is lean
 * when for every k, every pair of links a, b and all k-subsets A, B of their
 * adhesions, either k edge-disjoint linking paths join A to B or some link
 * between a and b has adhesion smaller than k.  A certificate records one
 * failing instance together with a small separating cut.
 *
 * Minimality order on certificates: smallest k, then smallest link distance,
 * then smallest (a, b), then lexicographically smallest A, then B.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "leancut/errors.hpp"
#include "leancut/linkage.hpp"
#include "leancut/multigraph.hpp"
#include "leancut/tcd.hpp"

namespace leancut {

struct Certificate {
  int k = 0;
  Link a{0, 1}, b{0, 1};
  std::vector<int> A, B;  // sorted edge ids, |A| == |B| == k
  std::vector<int> cut;   // fewer than k edges separating A from B
};

struct LeanOptions {
  // adhesions larger than this are not searched subset by subset; a pair
  // that cannot be settled by the whole-adhesion flow becomes undecided
  int max_adh_enum = 16;
};

/** Whether the certificate's (k, a, b, A, B) actually refutes leanness. */
inline bool violates(const MultiGraph& g, const TreeCutDecomposition& d, const Certificate& c) {
  if (d.link_index(c.a) < 0 || d.link_index(c.b) < 0)
    throw input_error("violates: link not in decomposition");
  auto A = detail::sorted_unique(c.A), B = detail::sorted_unique(c.B);
  if (c.k < 1 || static_cast<int>(A.size()) != c.k || static_cast<int>(B.size()) != c.k)
    throw input_error("violates: A and B must hold k distinct edges each");
  if (!detail::sorted_is_subset(A, adhesion(g, d, c.a)) ||
      !detail::sorted_is_subset(B, adhesion(g, d, c.b)))
    throw input_error("violates: A or B reaches outside its adhesion");
  for (const Link& l : link_path(d, c.a, c.b))
    if (static_cast<int>(adhesion(g, d, l).size()) < c.k) return false;
  return detail::linking_count(g, A, B) < c.k;
}

namespace detail {

/** Parallel classes (shared endpoint pairs) of the given edges, ids sorted. */
inline std::vector<std::vector<int>> parallel_classes(const MultiGraph& g,
                                                      const std::vector<int>& edge_ids) {
  std::map<std::pair<int, int>, std::vector<int>> by_ends;
  for (int id : edge_ids) {
    const auto& e = g.edge(id);
    by_ends[{e.u, e.v}].push_back(id);
  }
  std::vector<std::vector<int>> out;
  for (auto& [ends, ids] : by_ends) {
    std::sort(ids.begin(), ids.end());
    out.push_back(std::move(ids));
  }
  return out;
}

// Swapping edges within a parallel class never changes linking-path counts,
// so k-subsets only need visiting once per per-class count vector.  Each
// vector's cheapest concrete subset takes the smallest ids available in every
// class; returning those representatives sorted keeps the overall visit order
// aligned with plain lexicographic enumeration of all k-subsets.
inline std::vector<std::vector<int>> subset_reps(const std::vector<std::vector<int>>& classes,
                                                 int k) {
  std::vector<std::vector<int>> reps;
  std::vector<int> take(classes.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == classes.size()) {
      if (left != 0) return;
      std::vector<int> rep;
      for (size_t c = 0; c < classes.size(); ++c)
        rep.insert(rep.end(), classes[c].begin(), classes[c].begin() + take[c]);
      std::sort(rep.begin(), rep.end());
      reps.push_back(std::move(rep));
      return;
    }
    int room = 0;
    for (size_t c = i; c < classes.size(); ++c) room += static_cast<int>(classes[c].size());
    if (room < left) return;
    int cap = std::min(left, static_cast<int>(classes[i].size()));
    for (int c = 0; c <= cap; ++c) {
      take[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, k);
  std::sort(reps.begin(), reps.end());
  return reps;
}

// With A fixed, only class permutations keeping A in place remain available,
// so every class splits into its part inside A and its part outside.
inline std::vector<std::vector<int>> subset_reps_against(
    const std::vector<std::vector<int>>& classes, const std::vector<int>& A, int k) {
  std::vector<std::vector<int>> pools;
  for (const auto& cl : classes) {
    std::vector<int> in, out;
    for (int e : cl) (sorted_contains(A, e) ? in : out).push_back(e);
    if (!in.empty()) pools.push_back(std::move(in));
    if (!out.empty()) pools.push_back(std::move(out));
  }
  return subset_reps(pools, k);
}

struct ScanOutcome {
  std::optional<Certificate> minimal;  // set iff a hit preceded every undecided pair
  bool any_hit = false;
  bool any_undecided = false;
};

/**
 * Walks (k, pair, A, B) in exact minimality order.  stop_at_first_event ends
 * the walk at the first hit or undecided pair (enough to either name the
 * minimal certificate or give up); otherwise undecided pairs are noted and
 * the walk still hunts for any hit at all.
 */
inline ScanOutcome scan_leanness(const MultiGraph& g, const TreeCutDecomposition& d,
                                 const LeanOptions& opts, bool stop_at_first_event) {
  if (auto v = validate(g, d); !v.ok)
    throw precondition_error("leanness: invalid decomposition: " + v.violation);
  ScanOutcome out;
  if (d.links.empty()) return out;
  AdhesionTable tab(g, d);
  int max_adh = 0;
  for (const auto& adh : tab.by_link) max_adh = std::max(max_adh, static_cast<int>(adh.size()));

  // link pairs with a <= b, ordered by distance then by link ids
  struct PairEnt {
    int dist, ia, ib, min_on_path;
  };
  std::vector<PairEnt> pairs;
  for (int ia = 0; ia < static_cast<int>(d.links.size()); ++ia)
    for (int ib = ia; ib < static_cast<int>(d.links.size()); ++ib) {
      auto path = link_path(d, d.links[ia], d.links[ib]);
      int min_on_path = static_cast<int>(tab.by_link[ia].size());
      for (const Link& l : path)
        min_on_path =
            std::min(min_on_path, static_cast<int>(tab.by_link[d.link_index(l)].size()));
      pairs.push_back({static_cast<int>(path.size()), ia, ib, min_on_path});
    }
  std::sort(pairs.begin(), pairs.end(), [](const PairEnt& x, const PairEnt& y) {
    if (x.dist != y.dist) return x.dist < y.dist;
    if (x.ia != y.ia) return x.ia < y.ia;
    return x.ib < y.ib;
  });

  std::map<std::pair<int, int>, int> full_flow;
  auto whole_adhesion_flow = [&](const PairEnt& p) {
    auto key = std::make_pair(p.ia, p.ib);
    auto it = full_flow.find(key);
    if (it != full_flow.end()) return it->second;
    int f = linking_count(g, tab.by_link[p.ia], tab.by_link[p.ib]);
    full_flow[key] = f;
    return f;
  };

  for (int k = 1; k <= max_adh; ++k) {
    for (const auto& p : pairs) {
      // a link below k on the connecting path satisfies every (A, B) at once
      if (p.min_on_path < k) continue;
      const auto& adh_a = tab.by_link[p.ia];
      const auto& adh_b = tab.by_link[p.ib];
      std::optional<Certificate> hit;
      if (whole_adhesion_flow(p) < k) {
        // every size-k choice fails; the first one is the lexicographic least
        Certificate c;
        c.k = k;
        c.a = d.links[p.ia];
        c.b = d.links[p.ib];
        c.A.assign(adh_a.begin(), adh_a.begin() + k);
        c.B.assign(adh_b.begin(), adh_b.begin() + k);
        hit = std::move(c);
      } else if (static_cast<int>(adh_a.size()) > opts.max_adh_enum ||
                 static_cast<int>(adh_b.size()) > opts.max_adh_enum) {
        out.any_undecided = true;
        if (stop_at_first_event) return out;
        continue;
      } else {
        auto cls_a = parallel_classes(g, adh_a);
        auto cls_b = parallel_classes(g, adh_b);
        for (const auto& A : subset_reps(cls_a, k)) {
          for (const auto& B : subset_reps_against(cls_b, A, k)) {
            if (linking_count(g, A, B) < k) {
              Certificate c;
              c.k = k;
              c.a = d.links[p.ia];
              c.b = d.links[p.ib];
              c.A = A;
              c.B = B;
              hit = std::move(c);
              break;
            }
          }
          if (hit) break;
        }
      }
      if (hit) {
        out.any_hit = true;
        if (!out.any_undecided) out.minimal = std::move(hit);
        return out;
      }
    }
  }
  return out;
}

}  // namespace detail

/** Throws undecided_error when no violation is found but pairs were skipped. */
inline bool is_lean(const MultiGraph& g, const TreeCutDecomposition& d,
                    const LeanOptions& opts = {}) {
  auto out = detail::scan_leanness(g, d, opts, false);
  if (out.any_hit) return false;
  if (out.any_undecided)
    throw undecided_error("leanness: adhesion too large to enumerate; raise max_adh_enum");
  return true;
}

/**
 * The minimal certificate, or nullopt when lean.  Throws undecided_error when
 * a skipped pair precedes every found violation in the minimality order.
 */
inline std::optional<Certificate> find_minimal_certificate(const MultiGraph& g,
                                                           const TreeCutDecomposition& d,
                                                           const LeanOptions& opts = {}) {
  auto out = detail::scan_leanness(g, d, opts, true);
  if (out.minimal) {
    Certificate c = std::move(*out.minimal);
    c.cut = min_cut_lex(g, d, c.a, c.b, c.A, c.B);
    return c;
  }
  if (out.any_undecided)
    throw undecided_error("leanness: adhesion too large to enumerate; raise max_adh_enum");
  return std::nullopt;
}

}  // namespace leancut
