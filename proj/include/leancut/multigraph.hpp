#pragma once

/**
 * Multigraph with stable integer edge ids.
 *
 * Vertices are non-negative ints; parallel edges are allowed, loops are not.
 * Edge ids survive subgraph operations, so adhesion sets computed on a
 * subgraph remain comparable with the parent graph's sets.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "leancut/detail/sorted.hpp"
#include "leancut/errors.hpp"

namespace leancut {

// Edge ids at or above this value are reserved for virtual edges created by
// split_along_cut; parser-assigned ids always stay below.
inline constexpr int kVirtualEdgeBase = 1'000'000'000;

struct EdgeRec {
  int id;
  int u, v;  // unordered endpoints, stored with u < v

  bool operator==(const EdgeRec& o) const { return id == o.id && u == o.u && v == o.v; }
};

class MultiGraph {
 public:
  MultiGraph() = default;

  /** Vertices plus endpoint pairs; the i-th pair becomes edge id i. */
  static MultiGraph create(std::vector<int> vertices,
                           const std::vector<std::pair<int, int>>& endpoints) {
    std::vector<EdgeRec> edges;
    edges.reserve(endpoints.size());
    for (size_t i = 0; i < endpoints.size(); ++i)
      edges.push_back({static_cast<int>(i), endpoints[i].first, endpoints[i].second});
    return with_edges(std::move(vertices), std::move(edges));
  }

  /** Explicit edge records; used by subgraph operations to keep ids stable. */
  static MultiGraph with_edges(std::vector<int> vertices, std::vector<EdgeRec> edges) {
    MultiGraph g;
    std::sort(vertices.begin(), vertices.end());
    for (int v : vertices)
      if (v < 0) throw input_error("vertex ids must be non-negative");
    if (!detail::is_sorted_unique(vertices) && !vertices.empty())
      throw input_error("duplicate vertex id");
    g.vertices_ = std::move(vertices);
    for (auto& e : edges) {
      if (e.u == e.v) throw input_error("loop edge " + std::to_string(e.id));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!g.has_vertex(e.u) || !g.has_vertex(e.v))
        throw input_error("edge " + std::to_string(e.id) + " references unknown vertex");
    }
    std::sort(edges.begin(), edges.end(),
              [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
    for (size_t i = 1; i < edges.size(); ++i)
      if (edges[i - 1].id == edges[i].id)
        throw input_error("duplicate edge id " + std::to_string(edges[i].id));
    g.edges_ = std::move(edges);
    return g;
  }

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<EdgeRec>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(int v) const { return detail::sorted_contains(vertices_, v); }

  const EdgeRec& edge(int id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const EdgeRec& e, int key) { return e.id < key; });
    if (it == edges_.end() || it->id != id)
      throw input_error("unknown edge id " + std::to_string(id));
    return *it;
  }

  bool has_edge(int id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const EdgeRec& e, int key) { return e.id < key; });
    return it != edges_.end() && it->id == id;
  }

  /** Induced subgraph on `keep` (sorted ids); edge ids are preserved. */
  MultiGraph induced(const std::vector<int>& keep) const {
    for (int v : keep)
      if (!has_vertex(v)) throw input_error("induced: unknown vertex " + std::to_string(v));
    std::vector<EdgeRec> es;
    for (const auto& e : edges_)
      if (detail::sorted_contains(keep, e.u) && detail::sorted_contains(keep, e.v))
        es.push_back(e);
    return with_edges(keep, std::move(es));
  }

  /** Copy without the given edge ids. */
  MultiGraph minus_edges(const std::vector<int>& drop) const {
    std::vector<EdgeRec> es;
    for (const auto& e : edges_)
      if (!detail::sorted_contains(drop, e.id)) es.push_back(e);
    return with_edges(vertices_, std::move(es));
  }

  int max_edge_id() const { return edges_.empty() ? -1 : edges_.back().id; }

 private:
  std::vector<int> vertices_;  // sorted
  std::vector<EdgeRec> edges_;  // sorted by id
};

/** A cut together with the vertex bipartition that induces it. */
struct CutSplit {
  std::vector<int> cut;    // edge ids, sorted
  std::vector<int> side1;  // vertex ids, sorted
  std::vector<int> side2;
};

/** Edge ids with one endpoint in xs and the other in ys (sorted inputs). */
inline std::vector<int> edges_between(const MultiGraph& g, const std::vector<int>& xs,
                                      const std::vector<int>& ys) {
  for (const auto* side : {&xs, &ys})
    for (int v : *side)
      if (!g.has_vertex(v))
        throw input_error("edges_between: unknown vertex " + std::to_string(v));
  std::vector<int> out;
  for (const auto& e : g.edges()) {
    bool ux = detail::sorted_contains(xs, e.u), vx = detail::sorted_contains(xs, e.v);
    bool uy = detail::sorted_contains(ys, e.u), vy = detail::sorted_contains(ys, e.v);
    if ((ux && vy) || (uy && vx)) out.push_back(e.id);
  }
  return out;
}

/**
 * Connected components as sorted vertex lists, ordered by their smallest
 * contained vertex.  Isolated vertices form singleton components.
 */
inline std::vector<std::vector<int>> connected_components(const MultiGraph& g) {
  const auto& vs = g.vertices();
  int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  auto idx = [&](int v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  for (const auto& e : g.edges()) {
    adj[idx(e.u)].push_back(idx(e.v));
    adj[idx(e.v)].push_back(idx(e.u));
  }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> members;
    std::queue<int> q;
    comp[i] = static_cast<int>(out.size());
    q.push(i);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      members.push_back(vs[x]);
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = comp[i];
          q.push(y);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  // BFS starts at increasing vertex index, so components already appear in
  // order of smallest contained vertex.
  return out;
}

namespace detail {

// Cut weight of the bipartition encoded by `mask` over vertex indices
// (bit i set = vertex i on side 1), counting parallel edges.
inline long long cut_weight_of_mask(const std::vector<std::pair<int, int>>& edge_idx,
                                    uint32_t mask) {
  long long w = 0;
  for (auto [a, b] : edge_idx) w += (((mask >> a) ^ (mask >> b)) & 1u);
  return w;
}

// Deterministic Stoer-Wagner on the multiplicity-weighted simple graph.
// Returns the side-1 vertex indices of a minimum cut.
inline std::vector<int> stoer_wagner_side(int n, std::vector<std::vector<long long>> w) {
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[i] = {i};
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  long long best = std::numeric_limits<long long>::max();
  std::vector<int> best_side;
  while (active.size() > 1) {
    std::vector<int> order{active[0]};
    std::vector<long long> conn(n, 0);
    std::vector<char> in(n, 0);
    in[active[0]] = 1;
    for (int v : active)
      if (v != active[0]) conn[v] = w[active[0]][v];
    while (order.size() < active.size()) {
      int pick = -1;
      for (int v : active)
        if (!in[v] && (pick < 0 || conn[v] > conn[pick])) pick = v;
      in[pick] = 1;
      order.push_back(pick);
      for (int v : active)
        if (!in[v]) conn[v] += w[pick][v];
    }
    int t = order.back(), s = order[order.size() - 2];
    long long cut = conn[t];
    if (cut < best) {
      best = cut;
      best_side = groups[t];
    }
    // merge t into s
    for (int v : active)
      if (v != s && v != t) {
        w[s][v] += w[t][v];
        w[v][s] = w[s][v];
      }
    groups[s].insert(groups[s].end(), groups[t].begin(), groups[t].end());
    active.erase(std::find(active.begin(), active.end(), t));
  }
  return best_side;
}

}  // namespace detail

/**
 * Minimum edge cut of a connected graph with at least two vertices, counting
 * parallel edges with multiplicity.  Up to 20 vertices every bipartition is
 * enumerated and ties are broken by the lexicographically smallest side1
 * (which always contains the smallest vertex id); above that a deterministic
 * weighted contraction scheme is used.
 */
inline CutSplit global_min_cut(const MultiGraph& g) {
  int n = g.vertex_count();
  if (n < 2) throw precondition_error("global_min_cut needs at least two vertices");
  if (connected_components(g).size() != 1)
    throw precondition_error("global_min_cut needs a connected graph");
  const auto& vs = g.vertices();
  auto idx = [&](int v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<int> side1_idx;
  if (n <= 20) {
    std::vector<std::pair<int, int>> edge_idx;
    edge_idx.reserve(g.edge_count());
    for (const auto& e : g.edges()) edge_idx.emplace_back(idx(e.u), idx(e.v));
    // Side 1 always holds vertex index 0 (the smallest id), so only odd masks
    // qualify.  For equal weights the lexicographically smaller sorted vertex
    // sequence wins: the set owning the smallest differing index, unless the
    // other set stops right there and is a proper prefix of it.
    auto lex_less = [](uint32_t a, uint32_t b) {
      uint32_t d = a ^ b;
      if (d == 0) return false;
      uint32_t low = d & -d;
      uint32_t above = ~(low | (low - 1));
      if (a & low) return (b & above) != 0;
      return (a & above) == 0;
    };
    long long best = std::numeric_limits<long long>::max();
    uint32_t best_mask = 0;
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (uint32_t mask = 1; mask < full; mask += 2) {
      long long w = detail::cut_weight_of_mask(edge_idx, mask);
      if (w < best || (w == best && lex_less(mask, best_mask))) {
        best = w;
        best_mask = mask;
      }
    }
    for (int i = 0; i < n; ++i)
      if ((best_mask >> i) & 1u) side1_idx.push_back(i);
  } else {
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
    for (const auto& e : g.edges()) {
      w[idx(e.u)][idx(e.v)] += 1;
      w[idx(e.v)][idx(e.u)] += 1;
    }
    side1_idx = detail::stoer_wagner_side(n, std::move(w));
    std::sort(side1_idx.begin(), side1_idx.end());
    if (!std::binary_search(side1_idx.begin(), side1_idx.end(), 0)) {
      // normalize: side 1 holds the smallest vertex
      std::vector<int> flip;
      for (int i = 0; i < n; ++i)
        if (!std::binary_search(side1_idx.begin(), side1_idx.end(), i)) flip.push_back(i);
      side1_idx = std::move(flip);
    }
  }
  CutSplit out;
  for (int i : side1_idx) out.side1.push_back(vs[i]);
  out.side2 = detail::sorted_difference(vs, out.side1);
  out.cut = edges_between(g, out.side1, out.side2);
  return out;
}

/** True when removing any k-1 edges leaves the graph connected. */
inline bool is_k_edge_connected(const MultiGraph& g, int k) {
  if (k <= 0) throw input_error("is_k_edge_connected: k must be positive");
  if (g.vertex_count() < 2) return true;
  if (connected_components(g).size() != 1) return false;
  return static_cast<int>(global_min_cut(g).cut.size()) >= k;
}

/** Result of splitting a graph along a small cut. */
struct SplitResult {
  MultiGraph g1, g2;  // sides of the cut, possibly with one virtual edge each
  int x1 = -1, x2 = -1;  // chosen junction vertex on each side
  std::optional<int> virtual_edge1, virtual_edge2;  // virtual edge ids, if added
};

/**
 * Splits g along a cut of size at most 2.  Each side keeps its induced edges;
 * when the cut has two edges with distinct endpoints on a side, that side gains
 * a fresh virtual edge joining them (id from the reserved range), so that the
 * side inherits the connectivity the cut provided.  x_i is the smallest cut
 * endpoint on side i, or the side's smallest vertex for an empty cut.
 */
inline SplitResult split_along_cut(const MultiGraph& g, const CutSplit& s) {
  if (s.cut.size() > 2) throw precondition_error("split_along_cut: cut larger than 2");
  if (detail::sorted_union(s.side1, s.side2) != g.vertices() ||
      !detail::sorted_intersect(s.side1, s.side2).empty())
    throw input_error("split_along_cut: sides do not partition the vertices");
  if (edges_between(g, s.side1, s.side2) != s.cut)
    throw input_error("split_along_cut: cut does not match the bipartition");

  SplitResult out;
  out.g1 = g.induced(s.side1);
  out.g2 = g.induced(s.side2);

  int next_virtual = std::max(kVirtualEdgeBase, g.max_edge_id() + 1);

  auto endpoints_on = [&](const std::vector<int>& side) {
    std::vector<int> eps;
    for (int id : s.cut) {
      const auto& e = g.edge(id);
      eps.push_back(detail::sorted_contains(side, e.u) ? e.u : e.v);
    }
    return eps;  // one endpoint per cut edge, in cut order
  };

  auto attach = [&](MultiGraph& gi, const std::vector<int>& side,
                    std::optional<int>& virt) -> int {
    if (s.cut.empty())
      return side.empty() ? -1 : side.front();
    auto eps = endpoints_on(side);
    if (s.cut.size() == 2 && eps[0] != eps[1]) {
      auto es = gi.edges();
      std::vector<EdgeRec> edges(es.begin(), es.end());
      edges.push_back({next_virtual, eps[0], eps[1]});
      virt = next_virtual;
      ++next_virtual;
      gi = MultiGraph::with_edges(side, std::move(edges));
    }
    return *std::min_element(eps.begin(), eps.end());
  };

  out.x1 = attach(out.g1, s.side1, out.virtual_edge1);
  out.x2 = attach(out.g2, s.side2, out.virtual_edge2);
  return out;
}

}  // namespace leancut
