#pragma once

/**
 * Tree-cut decompositions: a tree whose nodes carry pairwise-disjoint bags
 * covering the graph's vertices (empty bags allowed), plus the derived
 * quantities the improvement loop is driven by: adhesions, width, fatness.
 */

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "leancut/detail/sorted.hpp"
#include "leancut/errors.hpp"
#include "leancut/multigraph.hpp"

namespace leancut {

/** An unordered tree link, stored with u < v. */
struct Link {
  int u = -1, v = -1;

  Link() = default;
  Link(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) throw input_error("link endpoints must differ");
  }
  bool operator==(const Link& o) const { return u == o.u && v == o.v; }
  bool operator!=(const Link& o) const { return !(*this == o); }
  bool operator<(const Link& o) const { return u != o.u ? u < o.u : v < o.v; }
};

struct TreeCutDecomposition {
  std::vector<int> nodes;              // sorted node ids
  std::vector<std::vector<int>> bags;  // aligned with nodes, each sorted
  std::vector<Link> links;             // sorted

  /** Canonicalizes and checks structure (ids, link endpoints); the
   *  graph-dependent invariants are checked by validate(). */
  static TreeCutDecomposition make(std::vector<std::pair<int, std::vector<int>>> node_bags,
                                   std::vector<Link> links) {
    if (node_bags.empty()) throw input_error("decomposition needs at least one node");
    std::sort(node_bags.begin(), node_bags.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    TreeCutDecomposition d;
    for (auto& [id, bag] : node_bags) {
      if (!d.nodes.empty() && d.nodes.back() == id)
        throw input_error("duplicate node id " + std::to_string(id));
      std::sort(bag.begin(), bag.end());
      if (!bag.empty() && !detail::is_sorted_unique(bag))
        throw input_error("bag of node " + std::to_string(id) + " repeats a vertex");
      d.nodes.push_back(id);
      d.bags.push_back(std::move(bag));
    }
    std::sort(links.begin(), links.end());
    for (size_t i = 0; i < links.size(); ++i) {
      if (i > 0 && links[i - 1] == links[i]) throw input_error("duplicate link");
      if (d.node_index(links[i].u) < 0 || d.node_index(links[i].v) < 0)
        throw input_error("link references unknown node");
    }
    d.links = std::move(links);
    return d;
  }

  int node_index(int id) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), id);
    if (it == nodes.end() || *it != id) return -1;
    return static_cast<int>(it - nodes.begin());
  }

  const std::vector<int>& bag_of(int node_id) const {
    int i = node_index(node_id);
    if (i < 0) throw input_error("unknown node id " + std::to_string(node_id));
    return bags[i];
  }

  int link_index(const Link& l) const {
    auto it = std::lower_bound(links.begin(), links.end(), l);
    if (it == links.end() || *it != l) return -1;
    return static_cast<int>(it - links.begin());
  }

  bool operator==(const TreeCutDecomposition& o) const {
    return nodes == o.nodes && bags == o.bags && links == o.links;
  }
};

namespace detail {

/** Adjacency view of the decomposition tree; assumes structural validity. */
struct TreeIndex {
  const TreeCutDecomposition& d;
  // per node index: (neighbor node index, link index)
  std::vector<std::vector<std::pair<int, int>>> adj;

  explicit TreeIndex(const TreeCutDecomposition& dec) : d(dec), adj(dec.nodes.size()) {
    for (size_t li = 0; li < d.links.size(); ++li) {
      int a = d.node_index(d.links[li].u), b = d.node_index(d.links[li].v);
      adj[a].emplace_back(b, static_cast<int>(li));
      adj[b].emplace_back(a, static_cast<int>(li));
    }
  }

  bool is_tree() const {
    size_t n = d.nodes.size();
    if (d.links.size() + 1 != n) return false;
    return reachable_from(0).size() == n;
  }

  std::vector<int> reachable_from(int start, int forbidden_link = -1) const {
    std::vector<char> seen(d.nodes.size(), 0);
    std::vector<int> order;
    std::queue<int> q;
    seen[start] = 1;
    q.push(start);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      order.push_back(x);
      for (auto [y, li] : adj[x])
        if (li != forbidden_link && !seen[y]) {
          seen[y] = 1;
          q.push(y);
        }
    }
    return order;
  }

  /** Unique node-index path in a tree, endpoints inclusive. */
  std::vector<int> node_path(int from, int to) const {
    std::vector<int> prev(d.nodes.size(), -2);
    std::queue<int> q;
    prev[from] = -1;
    q.push(from);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (x == to) break;
      for (auto [y, li] : adj[x]) {
        (void)li;
        if (prev[y] == -2) {
          prev[y] = x;
          q.push(y);
        }
      }
    }
    if (prev[to] == -2) throw contract_error("node_path: nodes not connected");
    std::vector<int> path;
    for (int x = to; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
  }
};

/** Vertex id -> node index over all bags; duplicates mean an invalid input. */
inline std::map<int, int> vertex_to_node(const TreeCutDecomposition& d) {
  std::map<int, int> m;
  for (size_t i = 0; i < d.bags.size(); ++i)
    for (int v : d.bags[i]) {
      if (!m.emplace(v, static_cast<int>(i)).second)
        throw input_error("vertex " + std::to_string(v) + " appears in two bags");
    }
  return m;
}

}  // namespace detail

struct ValidationResult {
  bool ok = true;
  std::string violation;  // first violated invariant, deterministic
};

/** Checks the decomposition invariants against g; reports the first failure. */
inline ValidationResult validate(const MultiGraph& g, const TreeCutDecomposition& d) {
  auto bad = [](std::string why) { return ValidationResult{false, std::move(why)}; };
  detail::TreeIndex ti(d);
  if (d.links.size() + 1 != d.nodes.size()) {
    // distinguishes the two tree failures deterministically
    if (d.links.size() + 1 > d.nodes.size()) return bad("tree has a cycle");
    return bad("tree not connected");
  }
  if (ti.reachable_from(0).size() != d.nodes.size()) return bad("tree not connected");
  for (size_t i = 0; i < d.bags.size(); ++i)
    for (int v : d.bags[i])
      if (!g.has_vertex(v))
        return bad("bag of node " + std::to_string(d.nodes[i]) + " contains unknown vertex " +
                   std::to_string(v));
  std::map<int, int> owner;
  for (size_t i = 0; i < d.bags.size(); ++i)
    for (int v : d.bags[i]) {
      auto [it, fresh] = owner.emplace(v, static_cast<int>(i));
      if (!fresh)
        return bad("bags not disjoint: vertex " + std::to_string(v) + " in nodes " +
                   std::to_string(d.nodes[it->second]) + " and " + std::to_string(d.nodes[i]));
    }
  for (int v : g.vertices())
    if (!owner.count(v)) return bad("union misses vertex " + std::to_string(v));
  return {};
}

/** One node holding every vertex. */
inline TreeCutDecomposition trivial_decomposition(const MultiGraph& g) {
  return TreeCutDecomposition::make({{0, g.vertices()}}, {});
}

/**
 * Edge ids crossing the link: one endpoint's bag on each side of the tree
 * split the link induces.
 */
inline std::vector<int> adhesion(const MultiGraph& g, const TreeCutDecomposition& d,
                                 const Link& l) {
  int li = d.link_index(l);
  if (li < 0) throw input_error("adhesion: unknown link");
  detail::TreeIndex ti(d);
  auto side_nodes = ti.reachable_from(d.node_index(l.u), li);
  std::vector<int> side_vertices;
  for (int ni : side_nodes)
    side_vertices.insert(side_vertices.end(), d.bags[ni].begin(), d.bags[ni].end());
  std::sort(side_vertices.begin(), side_vertices.end());
  std::vector<int> out;
  for (const auto& e : g.edges())
    if (detail::sorted_contains(side_vertices, e.u) !=
        detail::sorted_contains(side_vertices, e.v))
      out.push_back(e.id);
  return out;
}

/** All adhesions at once; aligned with d.links. */
struct AdhesionTable {
  std::vector<std::vector<int>> by_link;

  AdhesionTable(const MultiGraph& g, const TreeCutDecomposition& d)
      : by_link(d.links.size()) {
    detail::TreeIndex ti(d);
    auto v2n = detail::vertex_to_node(d);
    for (const auto& e : g.edges()) {
      auto iu = v2n.find(e.u), iv = v2n.find(e.v);
      if (iu == v2n.end() || iv == v2n.end())
        throw input_error("adhesion: edge endpoint not in any bag");
      if (iu->second == iv->second) continue;
      auto path = ti.node_path(iu->second, iv->second);
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        Link l(d.nodes[path[i]], d.nodes[path[i + 1]]);
        by_link[d.link_index(l)].push_back(e.id);
      }
    }
  }

  const std::vector<int>& of(const TreeCutDecomposition& d, const Link& l) const {
    int li = d.link_index(l);
    if (li < 0) throw input_error("unknown link");
    return by_link[li];
  }
};

/**
 * Width: the maximum over link adhesion sizes and node terms, a node term
 * being bag size plus the number of incident links with adhesion above 2.
 * Empty maxima contribute 0.
 */
inline int width(const MultiGraph& g, const TreeCutDecomposition& d) {
  AdhesionTable at(g, d);
  int w = 0;
  for (const auto& adh : at.by_link) w = std::max(w, static_cast<int>(adh.size()));
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    int term = static_cast<int>(d.bags[i].size());
    for (size_t li = 0; li < d.links.size(); ++li)
      if ((d.links[li].u == d.nodes[i] || d.links[li].v == d.nodes[i]) &&
          at.by_link[li].size() > 2)
        ++term;
    w = std::max(w, term);
  }
  return w;
}

/**
 * Width via the simplified node term |bag| + degree, valid for
 * 3-edge-connected graphs where every nonempty adhesion has size at least 3.
 */
inline int width_3ec(const MultiGraph& g, const TreeCutDecomposition& d) {
  if (!is_k_edge_connected(g, 3))
    throw precondition_error("width_3ec: graph is not 3-edge-connected");
  AdhesionTable at(g, d);
  int w = 0;
  for (const auto& adh : at.by_link) w = std::max(w, static_cast<int>(adh.size()));
  for (size_t i = 0; i < d.nodes.size(); ++i) {
    int deg = 0;
    for (const auto& l : d.links)
      if (l.u == d.nodes[i] || l.v == d.nodes[i]) ++deg;
    w = std::max(w, static_cast<int>(d.bags[i].size()) + deg);
  }
  return w;
}

/**
 * Lexicographic potential (alpha_m, -beta_m, ..., alpha_1, -beta_1) where
 * alpha_i counts links with adhesion size >= i and beta_i the components of
 * the subgraph those links induce.  Strictly decreases per improvement step.
 */
struct Fatness {
  std::vector<long long> entries;

  bool operator==(const Fatness& o) const { return entries == o.entries; }
};

enum class Ordering { less, equal, greater };

inline Ordering compare_fatness(const Fatness& a, const Fatness& b) {
  if (a.entries.size() != b.entries.size())
    throw input_error("compare_fatness: sequences of different length");
  for (size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i] < b.entries[i]) return Ordering::less;
    if (a.entries[i] > b.entries[i]) return Ordering::greater;
  }
  return Ordering::equal;
}

inline Fatness fatness(const MultiGraph& g, const TreeCutDecomposition& d) {
  AdhesionTable at(g, d);
  int m = g.edge_count();
  Fatness f;
  f.entries.reserve(2 * static_cast<size_t>(m));
  for (int i = m; i >= 1; --i) {
    // links of T^{>=i} and the components they induce
    std::vector<int> included;
    for (size_t li = 0; li < d.links.size(); ++li)
      if (static_cast<int>(at.by_link[li].size()) >= i) included.push_back(static_cast<int>(li));
    long long alpha = static_cast<long long>(included.size());
    // union-find over the endpoints of included links
    std::map<int, int> root;
    std::function<int(int)> find = [&](int x) {
      return root[x] == x ? x : root[x] = find(root[x]);
    };
    long long beta = 0;
    for (int li : included) {
      for (int end : {d.links[li].u, d.links[li].v})
        if (!root.count(end)) {
          root[end] = end;
          ++beta;
        }
      int a = find(d.links[li].u), b = find(d.links[li].v);
      if (a != b) {
        root[a] = b;
        --beta;
      }
    }
    f.entries.push_back(alpha);
    f.entries.push_back(-beta);
  }
  return f;
}

/**
 * The unique link sequence from a to b, both inclusive; [a] when a == b.
 * The number of returned links is the distance used by certificate minimality.
 */
inline std::vector<Link> link_path(const TreeCutDecomposition& d, const Link& a,
                                   const Link& b) {
  if (d.link_index(a) < 0 || d.link_index(b) < 0)
    throw input_error("link_path: unknown link");
  if (a == b) return {a};
  detail::TreeIndex ti(d);
  // endpoint of a facing b: the one that still reaches b with link a removed
  auto facing = [&](const Link& x, const Link& y) {
    auto side = ti.reachable_from(d.node_index(x.u), d.link_index(x));
    bool yu = std::find(side.begin(), side.end(), d.node_index(y.u)) != side.end();
    return yu ? x.u : x.v;
  };
  int p = facing(a, b), q = facing(b, a);
  std::vector<Link> out{a};
  auto mid = ti.node_path(d.node_index(p), d.node_index(q));
  for (size_t i = 0; i + 1 < mid.size(); ++i)
    out.emplace_back(d.nodes[mid[i]], d.nodes[mid[i + 1]]);
  out.push_back(b);
  return out;
}

inline int link_distance(const TreeCutDecomposition& d, const Link& a, const Link& b) {
  return static_cast<int>(link_path(d, a, b).size());
}

/** Node-id path between the bags holding e's endpoints (one node if shared). */
inline std::vector<int> t_path_of_edge(const MultiGraph& g, const TreeCutDecomposition& d,
                                       int edge_id) {
  const auto& e = g.edge(edge_id);
  auto v2n = detail::vertex_to_node(d);
  auto iu = v2n.find(e.u), iv = v2n.find(e.v);
  if (iu == v2n.end() || iv == v2n.end())
    throw input_error("t_path_of_edge: edge endpoint not in any bag");
  detail::TreeIndex ti(d);
  auto path = ti.node_path(iu->second, iv->second);
  std::vector<int> ids;
  for (int ni : path) ids.push_back(d.nodes[ni]);
  return ids;
}

}  // namespace leancut
