#pragma once

// Shared test fixtures: the named graphs and decompositions referenced across
// the suite, seeded random-instance generators, and an exhaustive list of
// small connected simple graphs (one representative per isomorphism class).

#include <leancut/multigraph.hpp>
#include <leancut/tcd.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace fixtures {

using leancut::Link;
using leancut::MultiGraph;
using leancut::TreeCutDecomposition;

// Two vertices joined by three parallel edges.
inline MultiGraph theta3() {
  return MultiGraph::create({0, 1}, {{0, 1}, {0, 1}, {0, 1}});
}

// Cycle 0-1-2-3.  Edge ids follow the listed order.
inline MultiGraph c4() {
  return MultiGraph::create({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Bags {0,1} | {2,3}; the single link's adhesion is {e1, e3}.
inline TreeCutDecomposition c4_two_bag() {
  return TreeCutDecomposition::make({{0, {0, 1}}, {1, {2, 3}}}, {Link(0, 1)});
}

inline MultiGraph k4() {
  return MultiGraph::create({0, 1, 2, 3},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Bags {0,1} | {2,3}; adhesion {e1,e2,e3,e4} of size 4 (bold).
inline TreeCutDecomposition k4_two_bag() {
  return TreeCutDecomposition::make({{0, {0, 1}}, {1, {2, 3}}}, {Link(0, 1)});
}

// Vertices 0,1 and 2,3 joined by triple parallel edges on each side and a
// single bridge 0-2.  Edge ids: 0-2 the 0-1 edges, 3-5 the 2-3 edges, 6 the
// bridge.  Not 3-edge-connected (the bridge is a 1-cut).
inline MultiGraph interleave4() {
  return MultiGraph::create(
      {0, 1, 2, 3},
      {{0, 1}, {0, 1}, {0, 1}, {2, 3}, {2, 3}, {2, 3}, {0, 2}});
}

// Path tree whose bags interleave the two sides: {0},{2},{1},{3}.
// Adhesions along the path: 4, 6, 3.
inline TreeCutDecomposition interleave4_path() {
  return TreeCutDecomposition::make(
      {{0, {0}}, {1, {2}}, {2, {1}}, {3, {3}}},
      {Link(0, 1), Link(1, 2), Link(2, 3)});
}

// Same shape with five parallel edges per side and a triple bridge, so the
// graph is 3-edge-connected.  Edge ids: 0-4 the 0-1 edges, 5-9 the 2-3
// edges, 10-12 the bridge edges 0-2.
inline MultiGraph barbell3ec() {
  return MultiGraph::create({0, 1, 2, 3},
                            {{0, 1},
                             {0, 1},
                             {0, 1},
                             {0, 1},
                             {0, 1},
                             {2, 3},
                             {2, 3},
                             {2, 3},
                             {2, 3},
                             {2, 3},
                             {0, 2},
                             {0, 2},
                             {0, 2}});
}

// Interleaved path decomposition of barbell3ec; adhesions 8, 10, 5, width 10.
inline TreeCutDecomposition barbell_path() {
  return TreeCutDecomposition::make(
      {{0, {0}}, {1, {2}}, {2, {1}}, {3, {3}}},
      {Link(0, 1), Link(1, 2), Link(2, 3)});
}

// Seed for every randomized test; LEANCUT_SEED overrides the default.
inline unsigned base_seed() {
  if (const char* s = std::getenv("LEANCUT_SEED")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end != s && *end == '\0') return static_cast<unsigned>(v);
  }
  return 1318u;
}

// Random loop-free multigraph, possibly disconnected, n in [2, max_n] and
// m in [1, max_m].
inline MultiGraph random_multigraph(std::mt19937& rng, int max_n = 6, int max_m = 12) {
  int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
  int m = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_m));
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<std::pair<int, int>> ends;
  ends.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u == v) v = (v + 1) % n;
    ends.push_back({u, v});
  }
  return MultiGraph::create(vs, ends);
}

// As above but with a random spanning tree laid down first, so the result is
// connected.  m counts the extra edges on top of the n-1 tree edges.
inline MultiGraph random_connected_multigraph(std::mt19937& rng, int max_n = 6,
                                              int max_extra = 8) {
  int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_n - 1));
  int extra = static_cast<int>(rng() % static_cast<unsigned>(max_extra + 1));
  std::vector<int> vs(n);
  std::iota(vs.begin(), vs.end(), 0);
  std::vector<std::pair<int, int>> ends;
  for (int v = 1; v < n; ++v)
    ends.push_back({static_cast<int>(rng() % static_cast<unsigned>(v)), v});
  for (int i = 0; i < extra; ++i) {
    int u = static_cast<int>(rng() % static_cast<unsigned>(n));
    int v = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u == v) v = (v + 1) % n;
    ends.push_back({u, v});
  }
  return MultiGraph::create(vs, ends);
}

// Two fat parallel classes joined by a thin budget of connector edges.  The
// shape yields leanness violations at a useful rate under random
// decompositions, which uniform sampling almost never does.
inline MultiGraph random_bottleneck_multigraph(std::mt19937& rng) {
  int p = 2 + static_cast<int>(rng() % 3u);
  int q = 2 + static_cast<int>(rng() % 3u);
  int c = 1 + static_cast<int>(rng() % 2u);
  std::vector<std::pair<int, int>> ends;
  for (int i = 0; i < p; ++i) ends.push_back({0, 1});
  for (int i = 0; i < q; ++i) ends.push_back({2, 3});
  for (int i = 0; i < c; ++i)
    ends.push_back({static_cast<int>(rng() % 2u), 2 + static_cast<int>(rng() % 2u)});
  return MultiGraph::create({0, 1, 2, 3}, ends);
}

// Random valid decomposition: a random tree on t nodes and a random
// assignment of every vertex to a node.  Empty bags are allowed.
inline TreeCutDecomposition random_decomposition(std::mt19937& rng, const MultiGraph& g,
                                                 int max_nodes = 0) {
  int n = g.vertex_count();
  int cap = max_nodes > 0 ? max_nodes : n + 2;
  int t = 1 + static_cast<int>(rng() % static_cast<unsigned>(cap));
  std::vector<Link> links;
  for (int v = 1; v < t; ++v)
    links.push_back(Link(static_cast<int>(rng() % static_cast<unsigned>(v)), v));
  std::vector<std::pair<int, std::vector<int>>> node_bags(t);
  for (int i = 0; i < t; ++i) node_bags[i].first = i;
  for (int v : g.vertices())
    node_bags[rng() % static_cast<unsigned>(t)].second.push_back(v);
  return TreeCutDecomposition::make(node_bags, links);
}

// Random nonempty edge subset of size at most max_k, sorted and unique.
inline std::vector<int> random_edge_subset(std::mt19937& rng, const MultiGraph& g,
                                           int max_k = 3) {
  int m = g.edge_count();
  int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_k));
  std::set<int> pick;
  const auto& es = g.edges();
  for (int i = 0; i < k; ++i)
    pick.insert(es[rng() % static_cast<unsigned>(m)].id);
  return std::vector<int>(pick.begin(), pick.end());
}

namespace detail {

inline bool mask_connected(int n, unsigned mask,
                           const std::vector<std::pair<int, int>>& pairs) {
  if (n <= 1) return true;
  std::vector<int> comp(n, -1);
  std::vector<int> stack = {0};
  comp[0] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1u)) continue;
      auto [u, v] = pairs[i];
      int y = u == x ? v : v == x ? u : -1;
      if (y >= 0 && comp[y] < 0) {
        comp[y] = 0;
        stack.push_back(y);
      }
    }
  }
  return std::count(comp.begin(), comp.end(), 0) == n;
}

}  // namespace detail

// One representative per isomorphism class of connected simple graphs on
// 1..max_n vertices, in a deterministic order (vertex count, then canonical
// adjacency mask).  max_n is meant to stay at most 6.
inline std::vector<MultiGraph> connected_simple_graphs(int max_n) {
  std::vector<MultiGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::vector<int> pair_index(n * n, -1);
    for (size_t i = 0; i < pairs.size(); ++i) {
      pair_index[pairs[i].first * n + pairs[i].second] = static_cast<int>(i);
      pair_index[pairs[i].second * n + pairs[i].first] = static_cast<int>(i);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<unsigned, unsigned>> reps;  // (canonical, original)
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
      if (!detail::mask_connected(n, mask, pairs)) continue;
      unsigned canon = ~0u;
      std::vector<int> p = perm;
      do {
        unsigned image = 0;
        for (size_t i = 0; i < pairs.size(); ++i)
          if (mask >> i & 1u)
            image |= 1u << pair_index[p[pairs[i].first] * n + p[pairs[i].second]];
        canon = std::min(canon, image);
      } while (std::next_permutation(p.begin(), p.end()));
      if (canon == mask) reps.push_back({canon, mask});
    }
    std::sort(reps.begin(), reps.end());
    for (auto [canon, mask] : reps) {
      std::vector<int> vs(n);
      std::iota(vs.begin(), vs.end(), 0);
      std::vector<std::pair<int, int>> ends;
      for (size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) ends.push_back(pairs[i]);
      out.push_back(MultiGraph::create(vs, ends));
    }
  }
  return out;
}

}  // namespace fixtures
