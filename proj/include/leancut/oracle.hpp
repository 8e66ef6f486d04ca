#pragma once

// Brute-force ground truth, kept deliberately independent of the flow-based
// engine: exact minimum width by exhaustive enumeration on tiny graphs,
// quantifier-faithful leanness, and linking-path packing by backtracking.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leancut/multigraph.hpp"
#include "leancut/tcd.hpp"
#include "leancut/tcd_io.hpp"

namespace leancut {

struct OracleConfig {
  int max_vertices = 6;
  int max_tree_nodes = 0;  // 0 means |V| + 2
  bool allow_empty_bags = true;
  std::chrono::milliseconds time_budget{0};  // 0 means unlimited
};

namespace detail {

// Labeled tree on nodes 0..t-1, one representative per isomorphism class.
struct TreeShape {
  int t = 1;
  std::vector<std::pair<int, int>> links;  // t-1 pairs, u < v
};

// Canonical form of a rooted tree: children forms sorted and concatenated.
inline std::string ahu_rooted(int root, int parent,
                              const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> kids;
  for (int c : adj[root])
    if (c != parent) kids.push_back(ahu_rooted(c, root, adj));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

inline std::string ahu_unrooted(int t, const std::vector<std::pair<int, int>>& links) {
  std::vector<std::vector<int>> adj(t);
  for (auto [u, v] : links) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // centers by repeated leaf removal
  std::vector<int> deg(t);
  for (int i = 0; i < t; ++i) deg[i] = static_cast<int>(adj[i].size());
  std::vector<int> layer;
  std::vector<char> gone(t, 0);
  for (int i = 0; i < t; ++i)
    if (deg[i] <= 1) layer.push_back(i);
  int remaining = t;
  while (remaining > 2) {
    std::vector<int> next;
    for (int x : layer) {
      gone[x] = 1;
      --remaining;
      for (int y : adj[x])
        if (!gone[y] && --deg[y] == 1) next.push_back(y);
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    if (gone[c]) continue;
    std::string s = ahu_rooted(c, -1, adj);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

inline TreeShape prufer_decode(int t, const std::vector<int>& seq) {
  TreeShape shape;
  shape.t = t;
  std::vector<int> deg(t, 1);
  for (int x : seq) ++deg[x];
  std::set<int> leaves;
  for (int i = 0; i < t; ++i)
    if (deg[i] == 1) leaves.insert(i);
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    shape.links.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--deg[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  shape.links.push_back({std::min(a, b), std::max(a, b)});
  std::sort(shape.links.begin(), shape.links.end());
  return shape;
}

// All unlabeled trees on t nodes, each as the first labeled tree reached when
// walking Prufer sequences in ascending order.  The order is part of the
// witness determinism promise.
inline const std::vector<TreeShape>& unlabeled_trees(int t) {
  static std::map<int, std::vector<TreeShape>> cache;
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  std::vector<TreeShape> out;
  if (t == 1) {
    out.push_back(TreeShape{1, {}});
  } else if (t == 2) {
    out.push_back(TreeShape{2, {{0, 1}}});
  } else {
    std::set<std::string> seen;
    std::vector<int> seq(t - 2, 0);
    while (true) {
      TreeShape shape = prufer_decode(t, seq);
      std::string key = ahu_unrooted(t, shape.links);
      if (seen.insert(key).second) out.push_back(std::move(shape));
      int i = t - 3;
      while (i >= 0 && seq[i] == t - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
  }
  return cache.emplace(t, std::move(out)).first->second;
}

}  // namespace detail

/**
 * Minimum width over every decomposition whose tree has at most
 * cfg.max_tree_nodes nodes (every unlabeled tree times every assignment of
 * vertices to nodes), plus the first witness in enumeration order.  Trees are
 * visited by node count, then by representative order; assignments as base-t
 * counters with the smallest vertex in the fastest digit.
 */
inline std::pair<int, TreeCutDecomposition> brute_force_tcw(const MultiGraph& g,
                                                            OracleConfig cfg = {}) {
  int n = g.vertex_count();
  if (n > cfg.max_vertices)
    throw precondition_error("brute_force_tcw: graph above the vertex cap");
  if (cfg.max_tree_nodes < 0) throw input_error("brute_force_tcw: bad tree-node bound");
  int max_t = cfg.max_tree_nodes > 0 ? cfg.max_tree_nodes : n + 2;

  const auto& vs = g.vertices();
  auto vidx = [&](int v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::pair<int, int>> edge_vidx;
  edge_vidx.reserve(g.edge_count());
  for (const auto& e : g.edges()) edge_vidx.push_back({vidx(e.u), vidx(e.v)});

  auto start = std::chrono::steady_clock::now();
  long long probes = 0;
  auto check_budget = [&]() {
    if (cfg.time_budget.count() <= 0) return;
    if ((++probes & 0xFFF) != 0) return;
    if (std::chrono::steady_clock::now() - start > cfg.time_budget)
      throw resource_error("brute_force_tcw: time budget exceeded");
  };

  int best_w = -1;
  int best_t = 0, best_shape = 0;
  long long best_assign = 0;

  for (int t = 1; t <= max_t; ++t) {
    if (!cfg.allow_empty_bags && t > std::max(n, 1)) break;
    const auto& shapes = detail::unlabeled_trees(t);
    for (size_t si = 0; si < shapes.size(); ++si) {
      const auto& shape = shapes[si];
      int nl = t - 1;
      // link set of the node-to-node tree path, as a bitmask over link indices
      std::vector<std::vector<uint32_t>> path_mask(t, std::vector<uint32_t>(t, 0));
      {
        std::vector<std::vector<std::pair<int, int>>> adj(t);  // (node, link idx)
        for (int li = 0; li < nl; ++li) {
          adj[shape.links[li].first].push_back({shape.links[li].second, li});
          adj[shape.links[li].second].push_back({shape.links[li].first, li});
        }
        for (int s = 0; s < t; ++s) {
          std::vector<int> stack{s};
          std::vector<char> seen(t, 0);
          seen[s] = 1;
          while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto [y, li] : adj[x])
              if (!seen[y]) {
                seen[y] = 1;
                path_mask[s][y] = path_mask[s][x] | (1u << li);
                stack.push_back(y);
              }
          }
        }
      }
      std::vector<uint32_t> node_links(t, 0);
      for (int li = 0; li < nl; ++li) {
        node_links[shape.links[li].first] |= 1u << li;
        node_links[shape.links[li].second] |= 1u << li;
      }

      long long total = 1;
      for (int i = 0; i < n; ++i) total *= t;
      std::vector<int> node_of(n, 0);
      std::array<int, 32> cnt{};
      std::vector<int> bag_size(t, 0);
      for (long long a = 0; a < total; ++a) {
        check_budget();
        {
          long long x = a;
          for (int i = 0; i < n; ++i) {
            node_of[i] = static_cast<int>(x % t);
            x /= t;
          }
        }
        std::fill(bag_size.begin(), bag_size.end(), 0);
        for (int i = 0; i < n; ++i) ++bag_size[node_of[i]];
        if (!cfg.allow_empty_bags &&
            std::find(bag_size.begin(), bag_size.end(), 0) != bag_size.end())
          continue;
        std::fill(cnt.begin(), cnt.begin() + nl, 0);
        for (auto [iu, iv] : edge_vidx) {
          uint32_t mask = path_mask[node_of[iu]][node_of[iv]];
          while (mask) {
            int li = __builtin_ctz(mask);
            mask &= mask - 1;
            ++cnt[li];
          }
        }
        int w = 0;
        uint32_t bold = 0;
        for (int li = 0; li < nl; ++li) {
          w = std::max(w, cnt[li]);
          if (cnt[li] > 2) bold |= 1u << li;
        }
        for (int u = 0; u < t; ++u)
          w = std::max(w, bag_size[u] + __builtin_popcount(node_links[u] & bold));
        if (best_w < 0 || w < best_w) {
          best_w = w;
          best_t = t;
          best_shape = static_cast<int>(si);
          best_assign = a;
        }
      }
    }
  }

  const auto& shape = detail::unlabeled_trees(best_t)[best_shape];
  std::vector<std::pair<int, std::vector<int>>> node_bags;
  for (int u = 0; u < best_t; ++u) node_bags.push_back({u, {}});
  {
    long long x = best_assign;
    for (int i = 0; i < n; ++i) {
      node_bags[x % best_t].second.push_back(vs[i]);
      x /= best_t;
    }
  }
  std::vector<Link> links;
  for (auto [u, v] : shape.links) links.push_back(Link(u, v));
  return {best_w, TreeCutDecomposition::make(std::move(node_bags), std::move(links))};
}

namespace detail {

// Literal linking-path packer.  A path claims its first edge (from A), its
// last edge (from B), and internal edges outside A and B; every claimed edge
// is globally exclusive, which also enforces that no edge of A or B serves
// two paths in any role.  An edge in both A and B may stand alone as a path.
class NaivePacker {
 public:
  NaivePacker(const MultiGraph& g, std::vector<int> A, std::vector<int> B)
      : g_(g), a_(std::move(A)), b_(std::move(B)) {
    for (const auto& e : g_.edges()) {
      if (!sorted_contains(a_, e.id) && !sorted_contains(b_, e.id)) {
        inner_[e.u].push_back({e.id, e.v});
        inner_[e.v].push_back({e.id, e.u});
      }
      if (sorted_contains(b_, e.id)) {
        b_at_[e.u].push_back(e.id);
        b_at_[e.v].push_back(e.id);
      }
    }
  }

  bool can_pack(int k) {
    used_.clear();
    return pack(k, 0);
  }

 private:
  bool pack(int need, size_t from) {
    if (need == 0) return true;
    for (size_t i = from; i < a_.size(); ++i) {
      int es = a_[i];
      if (used_.count(es)) continue;
      used_.insert(es);
      if (sorted_contains(b_, es) && pack(need - 1, i + 1)) return true;
      const auto& rec = g_.edge(es);
      for (int x : {rec.u, rec.v}) {
        // visited is per path; edge-disjoint paths may share vertices
        std::set<int> visited = {x};
        if (walk(x, es, need, i, visited)) return true;
      }
      used_.erase(es);
    }
    return false;
  }

  // Extends the path standing at vertex x; es is its start edge.  Tries every
  // way to close at x with an unused ending edge, then every unused internal
  // edge out of x.
  bool walk(int x, int es, int need, size_t ai, std::set<int>& visited) {
    auto bt = b_at_.find(x);
    if (bt != b_at_.end())
      for (int et : bt->second) {
        if (et == es || used_.count(et)) continue;
        used_.insert(et);
        if (pack(need - 1, ai + 1)) return true;
        used_.erase(et);
      }
    auto it = inner_.find(x);
    if (it != inner_.end())
      for (auto [eid, y] : it->second) {
        if (used_.count(eid) || visited.count(y)) continue;
        used_.insert(eid);
        visited.insert(y);
        if (walk(y, es, need, ai, visited)) return true;
        visited.erase(y);
        used_.erase(eid);
      }
    return false;
  }

  const MultiGraph& g_;
  std::vector<int> a_, b_;
  std::map<int, std::vector<std::pair<int, int>>> inner_;  // vertex -> (edge, other end)
  std::map<int, std::vector<int>> b_at_;                   // vertex -> B edges there
  std::set<int> used_;
};

}  // namespace detail

/** Maximum number of edge-disjoint linking paths, by exhaustive backtracking. */
inline int naive_max_linking_paths(const MultiGraph& g, const std::vector<int>& A,
                                   const std::vector<int>& B) {
  if (g.edge_count() > 14)
    throw resource_error("naive_max_linking_paths: graph above the edge cap");
  auto a = detail::sorted_unique(A), b = detail::sorted_unique(B);
  for (int id : detail::sorted_union(a, b))
    if (!g.has_edge(id))
      throw input_error("naive_max_linking_paths: unknown edge id");
  detail::NaivePacker packer(g, a, b);
  int hi = static_cast<int>(std::min(a.size(), b.size()));
  int best = 0;
  for (int k = 1; k <= hi; ++k) {
    if (!packer.can_pack(k)) break;
    best = k;
  }
  return best;
}

/**
 * Literal leanness check: every pair of links, every k up to both adhesion
 * sizes, every pair of size-k adhesion subsets; a pair needs k packed paths
 * unless some link between the two has adhesion below k.
 */
inline bool naive_is_lean(const MultiGraph& g, const TreeCutDecomposition& d) {
  auto vr = validate(g, d);
  if (!vr.ok) throw precondition_error("naive_is_lean: " + vr.violation);
  AdhesionTable adh(g, d);
  for (const auto& s : adh.by_link)
    if (s.size() > 8) throw resource_error("naive_is_lean: adhesion above the cap");

  int nl = static_cast<int>(d.links.size());
  for (int i = 0; i < nl; ++i)
    for (int j = i; j < nl; ++j) {
      const auto& sa = adh.by_link[i];
      const auto& sb = adh.by_link[j];
      int kmax = static_cast<int>(std::min(sa.size(), sb.size()));
      if (kmax == 0) continue;
      auto path = link_path(d, d.links[i], d.links[j]);
      int min_on_path = kmax + 1;
      for (const auto& l : path)
        min_on_path =
            std::min(min_on_path, static_cast<int>(adh.of(d, l).size()));
      for (int k = 1; k <= kmax; ++k) {
        if (min_on_path < k) break;  // grows with k, every later k is covered too
        std::vector<int> selA(k), selB(k);
        std::vector<int> ca(k), cb(k);
        for (int x = 0; x < k; ++x) ca[x] = x;
        while (true) {
          for (int x = 0; x < k; ++x) selA[x] = sa[ca[x]];
          for (int x = 0; x < k; ++x) cb[x] = x;
          while (true) {
            for (int x = 0; x < k; ++x) selB[x] = sb[cb[x]];
            detail::NaivePacker packer(g, selA, selB);
            if (!packer.can_pack(k)) return false;
            int p = k - 1;
            while (p >= 0 && cb[p] == static_cast<int>(sb.size()) - k + p) --p;
            if (p < 0) break;
            ++cb[p];
            for (int q = p + 1; q < k; ++q) cb[q] = cb[q - 1] + 1;
          }
          int p = k - 1;
          while (p >= 0 && ca[p] == static_cast<int>(sa.size()) - k + p) --p;
          if (p < 0) break;
          ++ca[p];
          for (int q = p + 1; q < k; ++q) ca[q] = ca[q - 1] + 1;
        }
      }
    }
  return true;
}

namespace detail {

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

/** Golden-file line for a fixture: name, width, witness file hash. */
inline std::string golden_line(const std::string& name, int w,
                               const TreeCutDecomposition& d) {
  std::ostringstream os;
  write_decomposition(os, d);
  uint64_t h = detail::fnv1a64(os.str());
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  return name + "\t" + std::to_string(w) + "\t" + hex;
}

}  // namespace leancut
