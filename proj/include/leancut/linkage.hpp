#pragma once

/**
 * Linking paths between two edge sets A and B: paths whose first edge is in A,
 * whose last edge is in B, and whose internal edges avoid A and B (a single
 * shared edge counts as a path on its own).  Computed by max flow on the
 * graph with every edge of A and B subdivided; subdivision vertices carry unit
 * capacity so that each A/B edge serves at most one path in one role.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>
#include <vector>

#include "leancut/detail/sorted.hpp"
#include "leancut/errors.hpp"
#include "leancut/multigraph.hpp"
#include "leancut/tcd.hpp"

namespace leancut {

namespace detail {

/** Dinic max flow over flat arcs; arc i and i^1 are mutual residuals. */
class FlowNetwork {
 public:
  struct Arc {
    int from, to;
    int64_t cap, orig;
  };

  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  int node_count() const { return static_cast<int>(adj_.size()); }

  int add_arc(int from, int to, int64_t cap, int64_t rev_cap) {
    int idx = static_cast<int>(arcs_.size());
    arcs_.push_back({from, to, cap, cap});
    arcs_.push_back({to, from, rev_cap, rev_cap});
    adj_[from].push_back(idx);
    adj_[to].push_back(idx + 1);
    return idx;
  }

  int64_t max_flow(int s, int t) {
    int64_t total = 0;
    while (bfs(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (int64_t pushed = dfs(s, t, std::numeric_limits<int64_t>::max())) total += pushed;
    }
    return total;
  }

  /** Residual reachability from s; valid after max_flow. */
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int ai : adj_[x])
        if (arcs_[ai].cap > 0 && !seen[arcs_[ai].to]) {
          seen[arcs_[ai].to] = 1;
          q.push(arcs_[ai].to);
        }
    }
    return seen;
  }

  /** Positive when the arc carries flow in its own direction. */
  int64_t flow_on(int arc) const { return arcs_[arc].orig - arcs_[arc].cap; }

  /** Removes one unit from the arc; used by path decomposition. */
  void consume_unit(int arc) {
    arcs_[arc].cap += 1;
    arcs_[arc ^ 1].cap -= 1;
  }

  const Arc& arc(int i) const { return arcs_[i]; }
  const std::vector<int>& out_arcs(int node) const { return adj_[node]; }

 private:
  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int ai : adj_[x])
        if (arcs_[ai].cap > 0 && level_[arcs_[ai].to] < 0) {
          level_[arcs_[ai].to] = level_[x] + 1;
          q.push(arcs_[ai].to);
        }
    }
    return level_[t] >= 0;
  }

  int64_t dfs(int x, int t, int64_t limit) {
    if (x == t) return limit;
    for (int& i = iter_[x]; i < static_cast<int>(adj_[x].size()); ++i) {
      int ai = adj_[x][i];
      const Arc& a = arcs_[ai];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      int64_t got = dfs(a.to, t, std::min(limit, a.cap));
      if (got > 0) {
        arcs_[ai].cap -= got;
        arcs_[ai ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace detail

/** The subdivision of every A/B edge, with maps back to the original graph. */
struct SubdividedGraph {
  MultiGraph graph;
  std::vector<int> v_a, v_b;           // subdivision vertices for A resp. B, sorted
  std::map<int, int> vertex_to_edge;   // subdivision vertex id -> original edge id
  std::map<int, int> half_to_original; // half edge id -> original edge id
};

inline SubdividedGraph subdivide_for_menger(const MultiGraph& g, const std::vector<int>& A,
                                            const std::vector<int>& B) {
  auto a = detail::sorted_unique(A), b = detail::sorted_unique(B);
  for (int id : detail::sorted_union(a, b))
    if (!g.has_edge(id)) throw input_error("subdivide_for_menger: unknown edge id");
  auto both = detail::sorted_union(a, b);
  SubdividedGraph sg;
  int next_vertex = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  int next_edge = g.max_edge_id() + 1;
  std::vector<int> vertices = g.vertices();
  std::vector<EdgeRec> edges;
  for (const auto& e : g.edges()) {
    if (!detail::sorted_contains(both, e.id)) {
      edges.push_back(e);
      continue;
    }
    int mid = next_vertex++;
    vertices.push_back(mid);
    edges.push_back({next_edge, e.u, mid});
    sg.half_to_original[next_edge++] = e.id;
    edges.push_back({next_edge, mid, e.v});
    sg.half_to_original[next_edge++] = e.id;
    sg.vertex_to_edge[mid] = e.id;
    if (detail::sorted_contains(a, e.id)) sg.v_a.push_back(mid);
    if (detail::sorted_contains(b, e.id)) sg.v_b.push_back(mid);
  }
  sg.graph = MultiGraph::with_edges(std::move(vertices), std::move(edges));
  return sg;
}

struct LinkageResult {
  int count = 0;
  std::vector<std::vector<int>> paths;  // edge id sequences
  std::vector<int> cut;                 // minimum (A,B)-cut, sorted edge ids
};

namespace detail {

// Flow model over the implicit subdivision: original vertices are single
// nodes, each A/B edge gets an in/out node pair joined by a "split" arc that
// carries the edge's capacity; halves attach to the endpoints.  weight(e)
// gives the cut cost of edge e; halves are uncuttable in the weighted model.
struct MengerNet {
  FlowNetwork net{0};
  int s = -1, t = -1;
  std::vector<int> arc_edge;            // arc index -> original edge id or -1
  std::map<int, int> split_arc;         // subdivided edge id -> its split arc
  std::vector<int> sub_edges;           // sorted A∪B
  int64_t flow = 0;

  template <typename WeightFn>
  MengerNet(const MultiGraph& g, const std::vector<int>& A, const std::vector<int>& B,
            WeightFn weight, int64_t half_cap) {
    auto both = sorted_union(A, B);
    sub_edges = both;
    const auto& vs = g.vertices();
    auto vidx = [&](int v) {
      return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    int n = g.vertex_count();
    // nodes: original vertices, then (in, out) per subdivided edge, then s, t
    int sub_count = static_cast<int>(both.size());
    net = FlowNetwork(n + 2 * sub_count + 2);
    auto sub_pos = [&](int e) {
      return static_cast<int>(std::lower_bound(both.begin(), both.end(), e) - both.begin());
    };
    auto in_node = [&](int e) { return n + 2 * sub_pos(e); };
    auto out_node = [&](int e) { return n + 2 * sub_pos(e) + 1; };
    s = n + 2 * sub_count;
    t = s + 1;
    const int64_t inf = std::numeric_limits<int64_t>::max() / 8;

    auto record = [&](int arc, int e) {
      if (static_cast<int>(arc_edge.size()) <= arc + 1) arc_edge.resize(arc + 2, -1);
      arc_edge[arc] = e;
      arc_edge[arc + 1] = e;
    };
    for (int e : both) {
      int arc = net.add_arc(in_node(e), out_node(e), weight(e), 0);
      split_arc[e] = arc;
      record(arc, e);
    }
    for (const auto& e : g.edges()) {
      if (sorted_contains(both, e.id)) {
        int a1 = net.add_arc(vidx(e.u), in_node(e.id), half_cap, 0);
        record(a1, e.id);
        int a2 = net.add_arc(out_node(e.id), vidx(e.u), half_cap, 0);
        record(a2, e.id);
        int b1 = net.add_arc(vidx(e.v), in_node(e.id), half_cap, 0);
        record(b1, e.id);
        int b2 = net.add_arc(out_node(e.id), vidx(e.v), half_cap, 0);
        record(b2, e.id);
      } else {
        int64_t w = weight(e.id);
        int arc = net.add_arc(vidx(e.u), vidx(e.v), w, w);
        record(arc, e.id);
      }
    }
    for (int e : A) {
      int arc = net.add_arc(s, in_node(e), inf, 0);
      record(arc, e);
    }
    for (int e : B) {
      int arc = net.add_arc(out_node(e), t, inf, 0);
      record(arc, e);
    }
    flow = net.max_flow(s, t);
  }

  /** Saturated arcs crossing the residual source side, mapped to edge ids. */
  std::vector<int> extract_cut() const {
    auto reach = net.source_side(s);
    std::vector<int> cut;
    for (int x = 0; x < net.node_count(); ++x) {
      if (!reach[x]) continue;
      for (int ai : net.out_arcs(x)) {
        const auto& a = net.arc(ai);
        if (a.from != x || reach[a.to] || a.orig <= 0) continue;
        if (a.cap != 0) throw contract_error("min cut: unsaturated crossing arc");
        cut.push_back(arc_edge[ai]);
      }
    }
    return sorted_unique(cut);
  }
};

// Flow value only.  A and B must be sorted and duplicate-free.
inline int linking_count(const MultiGraph& g, const std::vector<int>& A,
                         const std::vector<int>& B) {
  MengerNet mn(g, A, B, [](int) { return int64_t{1}; }, 1);
  return static_cast<int>(mn.flow);
}

}  // namespace detail

/**
 * Maximum set of pairwise edge-disjoint linking paths plus a matching minimum
 * (A,B)-cut.  Always count == |paths| == |cut|.  Single-edge paths through
 * A ∩ B are listed first; the remaining paths come from flow decomposition in
 * lowest-edge-id order.
 */
inline LinkageResult max_linking_paths(const MultiGraph& g, const std::vector<int>& A,
                                       const std::vector<int>& B) {
  auto a = detail::sorted_unique(A), b = detail::sorted_unique(B);
  if (a.empty() || b.empty()) throw input_error("max_linking_paths: empty side");
  for (int id : detail::sorted_union(a, b))
    if (!g.has_edge(id)) throw input_error("max_linking_paths: unknown edge id");
  detail::MengerNet mn(g, a, b, [](int) { return int64_t{1}; }, 1);

  LinkageResult out;
  out.count = static_cast<int>(mn.flow);
  out.cut = mn.extract_cut();
  if (static_cast<int>(out.cut.size()) != out.count)
    throw contract_error("linking paths: cut size disagrees with flow value");

  // shared edges used as whole paths come out first
  std::map<int, int> s_arc, t_arc;
  for (int ai = 0; ai < static_cast<int>(mn.arc_edge.size()); ai += 2) {
    const auto& arc = mn.net.arc(ai);
    if (arc.from == mn.s) s_arc[mn.arc_edge[ai]] = ai;
    if (arc.to == mn.t) t_arc[mn.arc_edge[ai]] = ai;
  }
  for (int e : detail::sorted_intersect(a, b)) {
    int split = mn.split_arc.at(e);
    if (mn.net.flow_on(split) > 0 && mn.net.flow_on(s_arc.at(e)) > 0 &&
        mn.net.flow_on(t_arc.at(e)) > 0) {
      mn.net.consume_unit(s_arc.at(e));
      mn.net.consume_unit(split);
      mn.net.consume_unit(t_arc.at(e));
      out.paths.push_back({e});
    }
  }

  // walk remaining units from s, preferring the smallest edge id
  auto pick = [&](int node) {
    int best = -1;
    for (int ai : mn.net.out_arcs(node)) {
      if (mn.net.arc(ai).from != node || mn.net.flow_on(ai) <= 0) continue;
      if (best < 0 || mn.arc_edge[ai] < mn.arc_edge[best] ||
          (mn.arc_edge[ai] == mn.arc_edge[best] && ai < best))
        best = ai;
    }
    return best;
  };
  auto in_set = [](const std::vector<int>& xs, int x) { return detail::sorted_contains(xs, x); };
  while (true) {
    int first = pick(mn.s);
    if (first < 0) break;
    struct Step {
      int edge;
      bool pass_a, pass_b;
      int at;  // graph vertex the walk stands on after this edge, -1 at the sink
    };
    std::vector<Step> seq;
    int node = mn.s;
    int orig = g.vertex_count();
    while (node != mn.t) {
      int ai = (node == mn.s) ? first : pick(node);
      if (ai < 0) throw contract_error("flow decomposition: stuck walk");
      mn.net.consume_unit(ai);
      int e = mn.arc_edge[ai];
      if (e >= 0) {
        if (seq.empty() || seq.back().edge != e) seq.push_back({e, false, false, -1});
        if (mn.split_arc.count(e) && mn.split_arc.at(e) == ai) {
          seq.back().pass_a = in_set(a, e);
          seq.back().pass_b = in_set(b, e);
        }
      }
      node = mn.net.arc(ai).to;
      if (!seq.empty() && node < orig) seq.back().at = node;
    }
    // clip to the last A-passage and the first B-passage after it
    int ia = -1;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i)
      if (seq[i].pass_a) ia = i;
    int ib = -1;
    for (int i = ia; i < static_cast<int>(seq.size()); ++i)
      if (seq[i].pass_b) {
        ib = i;
        break;
      }
    if (ia < 0 || ib < 0) throw contract_error("flow decomposition: walk misses A or B");
    // splice out vertex revisits so each path is simple; the dropped edges are
    // a closed trail, so every other unit keeps its edges.  The `at` of the
    // final step lies past the path's end and never counts as internal.
    std::vector<Step> kept(seq.begin() + ia, seq.begin() + ib + 1);
    for (size_t i = 0; i + 1 < kept.size(); ++i)
      for (size_t j = kept.size() - 2; j > i; --j)
        if (kept[j].at == kept[i].at && kept[i].at >= 0) {
          kept.erase(kept.begin() + static_cast<long>(i) + 1,
                     kept.begin() + static_cast<long>(j) + 1);
          break;
        }
    std::vector<int> path;
    path.reserve(kept.size());
    for (const auto& st : kept) path.push_back(st.edge);
    out.paths.push_back(std::move(path));
  }
  if (static_cast<int>(out.paths.size()) != out.count)
    throw contract_error("linking paths: decomposition count disagrees with flow value");
  return out;
}

/**
 * Remoteness of edge e from the tree path between links a and b: 0 when e's
 * tree path shares a link with it, else one plus the node distance between
 * the two paths.
 */
inline int d_ab(const MultiGraph& g, const TreeCutDecomposition& d, const Link& a,
                const Link& b, int edge_id) {
  auto ab = link_path(d, a, b);
  auto tp = t_path_of_edge(g, d, edge_id);
  for (size_t i = 0; i + 1 < tp.size(); ++i) {
    Link l(tp[i], tp[i + 1]);
    if (std::find(ab.begin(), ab.end(), l) != ab.end()) return 0;
  }
  // multi-source BFS over tree nodes, starting from every node on ab
  detail::TreeIndex ti(d);
  std::vector<int> dist(d.nodes.size(), -1);
  std::queue<int> q;
  for (const auto& l : ab)
    for (int end : {l.u, l.v}) {
      int ni = d.node_index(end);
      if (dist[ni] < 0) {
        dist[ni] = 0;
        q.push(ni);
      }
    }
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (auto [y, li] : ti.adj[x]) {
      (void)li;
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  int best = std::numeric_limits<int>::max();
  for (int node_id : tp) best = std::min(best, dist[d.node_index(node_id)]);
  return 1 + best;
}

/**
 * Minimum (A,B)-cut, preferring cuts of smaller total d_ab.  The two criteria
 * are combined into a single weight W + d_ab(e) with W large enough that
 * cardinality dominates; remaining ties resolve to the deterministic residual
 * source-side cut.  Requires that A and B cannot be linked by |A| paths.
 */
inline std::vector<int> min_cut_lex(const MultiGraph& g, const TreeCutDecomposition& d,
                                    const Link& a, const Link& b, const std::vector<int>& A,
                                    const std::vector<int>& B) {
  auto sa = detail::sorted_unique(A), sb = detail::sorted_unique(B);
  if (sa.size() != sb.size()) throw input_error("min_cut_lex: |A| != |B|");
  if (!detail::sorted_is_subset(sa, adhesion(g, d, a)) ||
      !detail::sorted_is_subset(sb, adhesion(g, d, b)))
    throw input_error("min_cut_lex: A or B not inside the link's adhesion");
  int k = static_cast<int>(sa.size());
  int unit_count = max_linking_paths(g, sa, sb).count;
  if (unit_count >= k)
    throw contract_error("min_cut_lex: k disjoint linking paths exist");

  std::map<int, int64_t> dval;
  int64_t maxd = 0;
  for (const auto& e : g.edges()) {
    int64_t v = d_ab(g, d, a, b, e.id);
    dval[e.id] = v;
    maxd = std::max(maxd, v);
  }
  int64_t m = g.edge_count();
  int64_t W = 1 + m * (1 + maxd);
  if (W > std::numeric_limits<int64_t>::max() / (8 * (m + 2)))
    throw contract_error("min_cut_lex: weight scale overflows");
  const int64_t inf = std::numeric_limits<int64_t>::max() / 8;
  detail::MengerNet mn(g, sa, sb, [&](int e) { return W + dval.at(e); }, inf);
  auto cut = mn.extract_cut();

  int64_t weight_sum = 0;
  for (int e : cut) weight_sum += W + dval.at(e);
  if (weight_sum != mn.flow)
    throw contract_error("min_cut_lex: cut weight disagrees with flow value");
  if (static_cast<int>(cut.size()) != unit_count)
    throw contract_error("min_cut_lex: cut size is not the minimum cardinality");
  return cut;
}

}  // namespace leancut
