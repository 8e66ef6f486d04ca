#pragma once

/**
 * Turning a non-lean decomposition into a lean one without increasing width.
 *
 * One improvement step repairs the minimal certificate: the certificate's cut
 * splits the graph into two sides, and the segregation surgery rebuilds the
 * tree from two side-restricted copies joined through two fresh empty nodes.
 * Each step strictly shrinks the fatness potential, so iteration terminates.
 * Graphs that are not 3-edge-connected are first split along a cut of at most
 * two edges and reassembled after recursing on the sides.
 */

#include <algorithm>
#include <optional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leancut/errors.hpp"
#include "leancut/leanness.hpp"
#include "leancut/linkage.hpp"
#include "leancut/multigraph.hpp"
#include "leancut/tcd.hpp"

namespace leancut {

/**
 * Where every piece of the original tree went.  link_copies maps each link to
 * its two counterparts: for a that is (a_1, a_2), for b it is (b_1, b_2); the
 * leftover subdivision halves a_2' and b_1' are listed separately and count
 * as extra copies of a resp. b.
 */
struct SegregationMap {
  std::map<int, std::pair<int, int>> node_copies;
  std::map<Link, std::pair<Link, Link>> link_copies;
  int s1 = -1, s2 = -1;
  Link a2_prime, b1_prime;
  Link s1s2;
};

namespace detail {

/** Endpoint of link x on the side where link y lies; x != y. */
inline int facing_endpoint(const TreeCutDecomposition& d, const TreeIndex& ti, const Link& x,
                           const Link& y) {
  auto side = ti.reachable_from(d.node_index(x.u), d.link_index(x));
  bool yu = std::find(side.begin(), side.end(), d.node_index(y.u)) != side.end();
  return yu ? x.u : x.v;
}

}  // namespace detail

/**
 * Two copies of the tree with bags restricted to V1 resp. V2; the V1 copy
 * subdivides b with node s1, the V2 copy subdivides a with node s2, and the
 * link s1s2 joins them.  Node with index i keeps id i in the first copy and
 * gets N+i in the second; s1 = 2N, s2 = 2N+1.
 *
 * Naming of the subdivision halves: in the V1 copy, b_1 is the half on a's
 * side (for a == b, the half holding the link's smaller endpoint) and b_1'
 * the other; in the V2 copy, a_2 is the half on b's side (for a == b, the
 * larger endpoint, so that a_2' lands on the same side as b_1).
 */
inline std::pair<TreeCutDecomposition, SegregationMap> segregation(
    const MultiGraph& g, const TreeCutDecomposition& d, const Link& a, const Link& b,
    const std::vector<int>& V1, const std::vector<int>& V2) {
  if (d.link_index(a) < 0 || d.link_index(b) < 0)
    throw input_error("segregation: unknown link");
  auto v1 = detail::sorted_unique(V1), v2 = detail::sorted_unique(V2);
  if (!detail::sorted_intersect(v1, v2).empty())
    throw input_error("segregation: sides overlap");
  if (detail::sorted_union(v1, v2) != g.vertices())
    throw input_error("segregation: sides do not cover the vertex set");

  const int n = static_cast<int>(d.nodes.size());
  const int s1 = 2 * n, s2 = 2 * n + 1;
  std::vector<std::pair<int, std::vector<int>>> node_bags;
  for (int i = 0; i < n; ++i) {
    node_bags.emplace_back(i, detail::sorted_intersect(d.bags[i], v1));
    node_bags.emplace_back(n + i, detail::sorted_intersect(d.bags[i], v2));
  }
  node_bags.emplace_back(s1, std::vector<int>{});
  node_bags.emplace_back(s2, std::vector<int>{});

  auto u1 = [&](int node_id) { return d.node_index(node_id); };
  auto u2 = [&](int node_id) { return n + d.node_index(node_id); };

  std::vector<Link> links;
  SegregationMap map;
  for (int i = 0; i < n; ++i) map.node_copies[d.nodes[i]] = {i, n + i};
  map.s1 = s1;
  map.s2 = s2;
  map.s1s2 = Link(s1, s2);
  links.push_back(map.s1s2);
  for (const Link& l : d.links) {
    if (l != b) links.emplace_back(u1(l.u), u1(l.v));
    if (l != a) links.emplace_back(u2(l.u), u2(l.v));
  }
  links.emplace_back(u1(b.u), s1);
  links.emplace_back(u1(b.v), s1);
  links.emplace_back(u2(a.u), s2);
  links.emplace_back(u2(a.v), s2);

  detail::TreeIndex ti(d);
  int b_near, a_far;
  if (a == b) {
    b_near = b.u;
    a_far = a.u;  // a_2' shares its side with b_1
  } else {
    b_near = detail::facing_endpoint(d, ti, b, a);
    int a_near = detail::facing_endpoint(d, ti, a, b);
    a_far = (a_near == a.u) ? a.v : a.u;
  }
  int b_far = (b_near == b.u) ? b.v : b.u;
  Link b_1(u1(b_near), s1);
  map.b1_prime = Link(u1(b_far), s1);
  Link a_2(u2((a_far == a.u) ? a.v : a.u), s2);
  map.a2_prime = Link(u2(a_far), s2);
  for (const Link& l : d.links) {
    Link in_u1 = (l == b) ? b_1 : Link(u1(l.u), u1(l.v));
    Link in_u2 = (l == a) ? a_2 : Link(u2(l.u), u2(l.v));
    map.link_copies[l] = {in_u1, in_u2};
  }

  auto out = TreeCutDecomposition::make(std::move(node_bags), std::move(links));
  if (auto v = validate(g, out); !v.ok)
    throw contract_error("segregation produced an invalid decomposition: " + v.violation);
  return {std::move(out), std::move(map)};
}

/** One executed improvement step, kept around for inspection. */
struct ImproveStep {
  Certificate cert;
  SegregationMap map;
  TreeCutDecomposition before, after;
};

namespace detail {

inline void assert_step_contract(const MultiGraph& g, const ImproveStep& step) {
  AdhesionTable old_tab(g, step.before);
  AdhesionTable new_tab(g, step.after);
  auto size_of = [&](const AdhesionTable& tab, const TreeCutDecomposition& d, const Link& l) {
    return static_cast<int>(tab.by_link[d.link_index(l)].size());
  };
  for (const auto& [orig, copies] : step.map.link_copies) {
    int original = size_of(old_tab, step.before, orig);
    if (size_of(new_tab, step.after, copies.first) > original ||
        size_of(new_tab, step.after, copies.second) > original)
      throw contract_error("improvement step: a link copy grew beyond its original adhesion");
  }
  if (size_of(new_tab, step.after, step.map.a2_prime) >
          size_of(old_tab, step.before, step.cert.a) ||
      size_of(new_tab, step.after, step.map.b1_prime) >
          size_of(old_tab, step.before, step.cert.b))
    throw contract_error("improvement step: a leftover half grew beyond its original adhesion");
  if (width(g, step.after) > width(g, step.before) ||
      width_3ec(g, step.after) > width_3ec(g, step.before))
    throw contract_error("improvement step: width increased");
  if (compare_fatness(fatness(g, step.after), fatness(g, step.before)) != Ordering::less)
    throw contract_error("improvement step: fatness did not decrease");
}

}  // namespace detail

/**
 * Repairs the minimal certificate, or returns nullopt when the decomposition
 * is already lean.  The certificate's cut splits the graph into exactly two
 * components; their vertex sets drive the segregation.
 */
inline std::optional<ImproveStep> improvement_step_full(const MultiGraph& g,
                                                        const TreeCutDecomposition& d,
                                                        const LeanOptions& opts = {}) {
  if (!is_k_edge_connected(g, 3))
    throw precondition_error("improvement step: graph is not 3-edge-connected");
  auto cert = find_minimal_certificate(g, d, opts);
  if (!cert) return std::nullopt;

  auto comps = connected_components(g.minus_edges(cert->cut));
  if (comps.size() != 2)
    throw contract_error("improvement step: cut does not split the graph in two");
  auto side_of = [&](int vertex) {
    return detail::sorted_contains(comps[0], vertex) ? 0 : 1;
  };
  int side_a = -1;
  for (int e : detail::sorted_difference(cert->A, cert->cut)) {
    int s = side_of(g.edge(e).u);
    if (side_a < 0) side_a = s;
    if (s != side_a) throw contract_error("improvement step: A spans both sides of its cut");
  }
  if (side_a < 0) throw contract_error("improvement step: A is swallowed by its cut");
  for (int e : detail::sorted_difference(cert->B, cert->cut))
    if (side_of(g.edge(e).u) == side_a)
      throw contract_error("improvement step: B on the same side as A");

  ImproveStep step;
  step.cert = *cert;
  step.before = d;
  auto [after, map] =
      segregation(g, d, cert->a, cert->b, comps[side_a], comps[1 - side_a]);
  step.after = std::move(after);
  step.map = std::move(map);
  detail::assert_step_contract(g, step);
  return step;
}

inline std::optional<TreeCutDecomposition> improvement_step(const MultiGraph& g,
                                                            const TreeCutDecomposition& d,
                                                            const LeanOptions& opts = {}) {
  auto step = improvement_step_full(g, d, opts);
  if (!step) return std::nullopt;
  return std::move(step->after);
}

/**
 * Whether the link's adhesion reaches p and strictly exceeds both copies in
 * the step's segregation.  Only meaningful against an executed step.
 */
inline bool is_p_excessive(const MultiGraph& g, const ImproveStep& step, const Link& e, int p) {
  if (step.before.nodes.empty() || step.after.nodes.empty())
    throw contract_error("is_p_excessive: no improvement step in effect");
  auto it = step.map.link_copies.find(e);
  if (it == step.map.link_copies.end())
    throw contract_error("is_p_excessive: link is not part of the stepped decomposition");
  int original = static_cast<int>(adhesion(g, step.before, e).size());
  int c1 = static_cast<int>(adhesion(g, step.after, it->second.first).size());
  int c2 = static_cast<int>(adhesion(g, step.after, it->second.second).size());
  return original >= p && original > c1 && original > c2;
}

/** One line of the improvement trace. */
struct StepRecord {
  int iteration = 0;
  int k = 0;
  int link_distance = 0;
  int cut_size = 0;
  int width_after = 0;
  int fatness_divergence = 0;  // first index where the fatness tuple dropped
};

struct LeanifyLog {
  std::vector<StepRecord> steps;
  std::vector<std::string> notes;
};

/** Iteration guard trip: carries the work done so far. */
class iteration_guard_error : public resource_error {
 public:
  iteration_guard_error(std::string what, TreeCutDecomposition partial,
                        std::vector<StepRecord> trace)
      : resource_error(std::move(what)), partial(std::move(partial)), trace(std::move(trace)) {}

  TreeCutDecomposition partial;
  std::vector<StepRecord> trace;
};

/**
 * Improvement steps to the fixpoint.  max_iters <= 0 selects the default
 * guard 10 * 2m * (width + 1); hitting the guard signals a bug, not load.
 */
inline TreeCutDecomposition leanify_3ec(const MultiGraph& g, const TreeCutDecomposition& d,
                                        long long max_iters = 0, const LeanOptions& opts = {},
                                        LeanifyLog* log = nullptr) {
  if (!is_k_edge_connected(g, 3))
    throw precondition_error("leanify: graph is not 3-edge-connected");
  if (auto v = validate(g, d); !v.ok)
    throw precondition_error("leanify: invalid decomposition: " + v.violation);
  if (max_iters <= 0)
    max_iters = 10LL * 2 * g.edge_count() * (width(g, d) + 1);

  TreeCutDecomposition cur = d;
  Fatness prev = fatness(g, cur);
  std::vector<StepRecord> local;
  for (long long it = 1;; ++it) {
    auto step = improvement_step_full(g, cur, opts);
    if (!step) break;
    if (it > max_iters)
      throw iteration_guard_error("leanify: iteration guard exceeded", std::move(cur),
                                  std::move(local));
    Fatness next = fatness(g, step->after);
    StepRecord rec;
    rec.iteration = static_cast<int>(it);
    rec.k = step->cert.k;
    rec.link_distance = link_distance(cur, step->cert.a, step->cert.b);
    rec.cut_size = static_cast<int>(step->cert.cut.size());
    rec.width_after = width(g, step->after);
    rec.fatness_divergence = 0;
    while (rec.fatness_divergence < static_cast<int>(prev.entries.size()) &&
           prev.entries[rec.fatness_divergence] == next.entries[rec.fatness_divergence])
      ++rec.fatness_divergence;
    local.push_back(rec);
    if (log) log->steps.push_back(rec);
    cur = std::move(step->after);
    prev = std::move(next);
  }
  return cur;
}

/**
 * Lean decomposition of any connected graph with width at most width(d).
 * Small graphs collapse to the one-bag decomposition; graphs with a cut of
 * at most two edges split along a minimum cut, recurse on both sides (with
 * the replacement edge standing in for the cut), and rejoin the results with
 * a link between the nodes holding the cut endpoints.
 */
inline TreeCutDecomposition leanify(const MultiGraph& g, const TreeCutDecomposition& d,
                                    const LeanOptions& opts = {}, LeanifyLog* log = nullptr,
                                    long long max_iters = 0) {
  if (connected_components(g).size() != 1)
    throw precondition_error("leanify: graph is not connected");
  if (auto v = validate(g, d); !v.ok)
    throw precondition_error("leanify: invalid decomposition: " + v.violation);
  int w = width(g, d);
  if (g.vertex_count() <= w) return trivial_decomposition(g);

  CutSplit cut = global_min_cut(g);
  if (static_cast<int>(cut.cut.size()) > 2) return leanify_3ec(g, d, max_iters, opts, log);

  if (log)
    log->notes.push_back("split along a cut of " + std::to_string(cut.cut.size()) + " edge(s)");
  SplitResult parts = split_along_cut(g, cut);
  auto project = [&](const MultiGraph& gi, const std::vector<int>& side) {
    std::vector<std::pair<int, std::vector<int>>> node_bags;
    for (size_t i = 0; i < d.nodes.size(); ++i)
      node_bags.emplace_back(d.nodes[i], detail::sorted_intersect(d.bags[i], side));
    auto di = TreeCutDecomposition::make(std::move(node_bags), d.links);
    if (width(gi, di) > w)
      throw contract_error("leanify: projected decomposition grew wider than its parent");
    return di;
  };
  TreeCutDecomposition r1 = leanify(parts.g1, project(parts.g1, cut.side1), opts, log, max_iters);
  TreeCutDecomposition r2 = leanify(parts.g2, project(parts.g2, cut.side2), opts, log, max_iters);

  // rejoin: r2's node ids move above r1's, then one link bridges the nodes
  // whose bags hold the cut endpoints x1 and x2
  int shift = r1.nodes.back() + 1;
  std::vector<std::pair<int, std::vector<int>>> node_bags;
  for (size_t i = 0; i < r1.nodes.size(); ++i) node_bags.emplace_back(r1.nodes[i], r1.bags[i]);
  for (size_t i = 0; i < r2.nodes.size(); ++i)
    node_bags.emplace_back(shift + r2.nodes[i], r2.bags[i]);
  std::vector<Link> links = r1.links;
  for (const Link& l : r2.links) links.emplace_back(shift + l.u, shift + l.v);
  int t1 = -1, t2 = -1;
  for (size_t i = 0; i < r1.nodes.size(); ++i)
    if (detail::sorted_contains(r1.bags[i], parts.x1)) t1 = r1.nodes[i];
  for (size_t i = 0; i < r2.nodes.size(); ++i)
    if (detail::sorted_contains(r2.bags[i], parts.x2)) t2 = shift + r2.nodes[i];
  if (t1 < 0 || t2 < 0) throw contract_error("leanify: cut endpoint missing from both sides");
  links.emplace_back(t1, t2);

  auto merged = TreeCutDecomposition::make(std::move(node_bags), std::move(links));
  if (auto v = validate(g, merged); !v.ok)
    throw contract_error("leanify: merged decomposition invalid: " + v.violation);
  int w1 = width(parts.g1, r1), w2 = width(parts.g2, r2);
  int bound = std::max({w1, w2, static_cast<int>(cut.cut.size())});
  if (width(g, merged) > bound)
    throw contract_error("leanify: merged width exceeds the split bound");
  return merged;
}

}  // namespace leancut
