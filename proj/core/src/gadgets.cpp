#include "exgraph/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

#include "exgraph/expander.hpp"

namespace exg {

VertexSet Hub::vertices() const {
  std::vector<int> ids{center};
  ids.insert(ids.end(), first_layer.begin(), first_layer.end());
  for (const auto& leaves : second_layer) ids.insert(ids.end(), leaves.begin(), leaves.end());
  return VertexSet(std::move(ids));
}

VertexSet Hub::second_layer_union() const {
  std::vector<int> ids;
  for (const auto& leaves : second_layer) ids.insert(ids.end(), leaves.begin(), leaves.end());
  return VertexSet(std::move(ids));
}

Verdict validate_hub(const Graph& g, const Hub& hub, int h1, int h2) {
  if (!g.has_vertex(hub.center)) return Verdict::fail("center id");
  if (static_cast<int>(hub.first_layer.size()) != h1) return Verdict::fail("first-layer size");
  if (hub.second_layer.size() != hub.first_layer.size())
    return Verdict::fail("second-layer arity");

  std::vector<char> seen(g.order(), 0);
  seen[hub.center] = 1;
  for (int z : hub.first_layer) {
    if (!g.has_vertex(z) || seen[z]) return Verdict::fail("first-layer distinctness");
    seen[z] = 1;
    if (!g.adjacent(hub.center, z)) return Verdict::fail("first-layer adjacency");
  }
  for (size_t i = 0; i < hub.first_layer.size(); ++i) {
    int z = hub.first_layer[i];
    const auto& leaves = hub.second_layer[i];
    if (static_cast<int>(leaves.size()) != h2) return Verdict::fail("second-layer size");
    for (int w : leaves) {
      if (!g.has_vertex(w) || seen[w]) return Verdict::fail("disjointness");
      seen[w] = 1;
      if (!g.adjacent(z, w)) return Verdict::fail("second-layer adjacency");
    }
  }
  return Verdict::pass();
}

std::optional<Hub> build_hub(const Graph& g, const VertexSet& w, int h1, int h2) {
  if (h1 <= 0 || h2 < 0) throw std::invalid_argument("build_hub: need h1 > 0, h2 >= 0");
  std::vector<char> banned(g.order(), 0);
  for (int v : w) banned[v] = 1;

  // candidate centers by residual degree, ties by id
  std::vector<std::pair<int, int>> candidates; // (-resdeg, v)
  for (int v = 0; v < g.order(); ++v) {
    if (banned[v]) continue;
    int rd = 0;
    for (int u : g.neighbors(v))
      if (!banned[u]) ++rd;
    if (rd >= h1) candidates.emplace_back(-rd, v);
  }
  std::sort(candidates.begin(), candidates.end());

  std::vector<char> used(g.order(), 0);
  for (auto [neg, center] : candidates) {
    std::fill(used.begin(), used.end(), 0);
    used[center] = 1;
    Hub hub;
    hub.center = center;
    for (int z : g.neighbors(center)) {
      if (banned[z] || used[z]) continue;
      std::vector<int> leaves;
      for (int cand : g.neighbors(z)) {
        if (banned[cand] || used[cand] || cand == z) continue;
        leaves.push_back(cand);
        if (static_cast<int>(leaves.size()) == h2) break;
      }
      if (static_cast<int>(leaves.size()) < h2) continue;
      used[z] = 1;
      for (int leaf : leaves) used[leaf] = 1;
      hub.first_layer.push_back(z);
      hub.second_layer.push_back(std::move(leaves));
      if (static_cast<int>(hub.first_layer.size()) == h1) break;
    }
    if (static_cast<int>(hub.first_layer.size()) == h1) return hub;
  }
  return std::nullopt;
}

VertexSet Unit::vertices() const {
  std::vector<int> ids{core};
  for (const auto& hub : hubs)
    for (int v : hub.vertices()) ids.push_back(v);
  for (const auto& spoke : spokes)
    ids.insert(ids.end(), spoke.vertices.begin(), spoke.vertices.end());
  return VertexSet(std::move(ids));
}

VertexSet Unit::exterior() const {
  VertexSet ext;
  for (const auto& hub : hubs) ext = ext.unite(hub.second_layer_union());
  return ext;
}

VertexSet Unit::interior() const { return vertices().minus(exterior()); }

Verdict validate_unit(const Graph& g, const Unit& unit, int h0, int h1, int h2, int h3) {
  if (!g.has_vertex(unit.core)) return Verdict::fail("core id");
  if (static_cast<int>(unit.hubs.size()) != h0) return Verdict::fail("hub count");
  if (unit.spokes.size() != unit.hubs.size()) return Verdict::fail("spoke count");

  for (const auto& hub : unit.hubs) {
    auto v = validate_hub(g, hub, h1, h2);
    if (!v.ok) return Verdict::fail("hub: " + v.clause);
  }
  std::vector<char> hub_vertex(g.order(), 0);
  for (const auto& hub : unit.hubs)
    for (int v : hub.vertices()) {
      if (hub_vertex[v]) return Verdict::fail("hub disjointness");
      hub_vertex[v] = 1;
    }
  if (hub_vertex[unit.core]) return Verdict::fail("core inside a hub");

  std::vector<char> spoke_used(g.order(), 0); // everything but the shared core
  for (size_t j = 0; j < unit.spokes.size(); ++j) {
    const auto& spoke = unit.spokes[j];
    if (spoke.length() < 1 || spoke.length() > h3) return Verdict::fail("spoke length");
    if (!path_in_graph(g, spoke)) return Verdict::fail("spoke path");
    if (spoke.front() != unit.core || spoke.back() != unit.hubs[j].center)
      return Verdict::fail("spoke endpoints");
    for (size_t i = 1; i < spoke.vertices.size(); ++i) {
      int v = spoke.vertices[i];
      if (spoke_used[v]) return Verdict::fail("spoke disjointness");
      spoke_used[v] = 1;
      bool is_own_center = (v == unit.hubs[j].center);
      if (hub_vertex[v] && !is_own_center) return Verdict::fail("spoke-hub disjointness");
    }
  }

  auto ext = unit.exterior();
  auto all = unit.vertices();
  if (ext.size() + unit.interior().size() != all.size())
    return Verdict::fail("ext-int partition");
  return Verdict::pass();
}

std::optional<Unit> build_unit(const Graph& g, const VertexSet& w, int h0, int h1, int h2,
                               int h3) {
  if (h0 <= 0 || h3 <= 0) throw std::invalid_argument("build_unit: need h0 > 0, h3 > 0");

  // satellite tier: vertex-disjoint hubs, greedily, a few spares beyond h0
  const int cap = 2 * h0 + 4;
  std::vector<Hub> satellites;
  VertexSet consumed = w;
  while (static_cast<int>(satellites.size()) < cap) {
    auto hub = build_hub(g, consumed, h1, h2);
    if (!hub) break;
    consumed = consumed.unite(hub->vertices());
    satellites.push_back(std::move(*hub));
  }
  if (static_cast<int>(satellites.size()) < h0) return std::nullopt;

  VertexSet all_hub_vertices;
  for (const auto& hub : satellites) all_hub_vertices = all_hub_vertices.unite(hub.vertices());

  // candidate cores by residual degree outside everything reserved
  std::vector<std::pair<int, int>> cores;
  for (int v = 0; v < g.order(); ++v) {
    if (w.contains(v) || all_hub_vertices.contains(v)) continue;
    int rd = 0;
    for (int u : g.neighbors(v))
      if (!w.contains(u)) ++rd;
    cores.emplace_back(-rd, v);
  }
  std::sort(cores.begin(), cores.end());

  for (auto [neg, core] : cores) {
    std::vector<Path> spokes;
    std::vector<int> reached; // satellite indices
    VertexSet spoke_interiors;
    for (size_t j = 0; j < satellites.size() && static_cast<int>(reached.size()) < h0; ++j) {
      int target = satellites[j].center;
      VertexSet avoid = w.unite(all_hub_vertices).unite(spoke_interiors);
      avoid.erase(core);
      avoid.erase(target);
      auto p = connect_sets(g, VertexSet{core}, VertexSet{target}, avoid, h3);
      if (!p) continue;
      for (int v : p->interior()) spoke_interiors.insert(v);
      spokes.push_back(std::move(*p));
      reached.push_back(static_cast<int>(j));
    }
    if (static_cast<int>(reached.size()) < h0) continue;

    Unit unit;
    unit.core = core;
    for (size_t i = 0; i < reached.size(); ++i) {
      unit.hubs.push_back(satellites[reached[i]]);
      unit.spokes.push_back(spokes[i]);
    }
    if (validate_unit(g, unit, h0, h1, h2, h3).ok) return unit;
  }
  return std::nullopt;
}

Verdict validate_expansion(const Graph& g, const Expansion& f) {
  if (!g.has_vertex(f.anchor)) return Verdict::fail("anchor id");
  if (!f.body.contains(f.anchor)) return Verdict::fail("anchor outside body");
  std::vector<char> outside(g.order(), 1);
  for (int v : f.body) {
    if (!g.has_vertex(v)) return Verdict::fail("body id");
    outside[v] = 0;
  }
  auto dist = bfs_distances(g, {f.anchor}, outside);
  for (int v : f.body) {
    if (dist[v] < 0) return Verdict::fail("body connectivity");
    if (dist[v] > f.radius) return Verdict::fail("radius");
  }
  return Verdict::pass();
}

Expansion trim_expansion(const Graph& g, const Expansion& f, int d0) {
  if (d0 < 1 || d0 > f.size())
    throw std::invalid_argument("trim_expansion: D0 outside [1, D]");
  std::vector<char> outside(g.order(), 1);
  for (int v : f.body) outside[v] = 0;
  auto dist = bfs_distances(g, {f.anchor}, outside);
  std::vector<std::pair<int, int>> order; // (dist, id)
  for (int v : f.body) {
    if (dist[v] < 0) throw std::invalid_argument("trim_expansion: body not connected");
    order.emplace_back(dist[v], v);
  }
  std::sort(order.begin(), order.end());
  std::vector<int> kept;
  for (int i = 0; i < d0; ++i) kept.push_back(order[i].second);
  return Expansion{f.anchor, VertexSet(std::move(kept)), f.radius};
}

VertexSet Adjuster::vertices() const {
  return end1.body.unite(end2.body).unite(center);
}

namespace {

// Exact realizable (v1,v2)-path lengths by bitmask DP over the induced
// center graph. Quadratic in 2^h; only sensible for small h.
std::set<int> path_lengths_dp(const Graph& h, int s, int t) {
  const int n = h.order();
  std::vector<std::uint32_t> reach(1u << n, 0);
  reach[1u << s] = 1u << s;
  std::set<int> lengths;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    if (ends & (1u << t)) lengths.insert(std::popcount(mask) - 1);
    std::uint32_t rest = ends;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (v == t) continue; // paths stop at t
      for (int u : h.neighbors(v))
        if (!(mask & (1u << u))) reach[mask | (1u << u)] |= (1u << u);
    }
  }
  return lengths;
}

struct DfsBudget {
  std::uint64_t left;
};

void path_lengths_dfs(const Graph& h, int cur, int t, int len, std::vector<char>& used,
                      std::set<int>& lengths, DfsBudget& budget) {
  if (budget.left == 0) throw too_large_error("adjuster_path_lengths: search budget exhausted");
  --budget.left;
  if (cur == t) {
    lengths.insert(len);
    return;
  }
  for (int u : h.neighbors(cur)) {
    if (used[u]) continue;
    used[u] = 1;
    path_lengths_dfs(h, u, t, len + 1, used, lengths, budget);
    used[u] = 0;
  }
}

} // namespace

std::set<int> adjuster_path_lengths(const Graph& g, int v1, int v2, const VertexSet& center) {
  VertexSet keep = center;
  keep.insert(v1);
  keep.insert(v2);
  if (keep.size() > 24)
    throw too_large_error("adjuster_path_lengths: center graph above 24 vertices");
  auto sub = induced_subgraph(g, keep);
  int s = sub.from_original[v1], t = sub.from_original[v2];
  if (sub.graph.order() <= 20) return path_lengths_dp(sub.graph, s, t);
  std::set<int> lengths;
  std::vector<char> used(sub.graph.order(), 0);
  used[s] = 1;
  DfsBudget budget{50'000'000};
  path_lengths_dfs(sub.graph, s, t, 0, used, lengths, budget);
  return lengths;
}

AdjusterReport validate_adjuster(const Graph& g, const Adjuster& adj, int d, int m, int k) {
  AdjusterReport rep;

  // A1: pairwise disjointness of center and the two bodies
  rep.a1 = Verdict::pass();
  if (adj.center.intersects(adj.end1.body) || adj.center.intersects(adj.end2.body))
    rep.a1 = Verdict::fail("center meets an end body");
  else if (adj.end1.body.intersects(adj.end2.body))
    rep.a1 = Verdict::fail("end bodies intersect");

  // A2: each end is a (D,m)-expansion of its core
  rep.a2 = Verdict::pass();
  for (int side = 1; side <= 2 && rep.a2.ok; ++side) {
    const Expansion& f = side == 1 ? adj.end1 : adj.end2;
    int core = side == 1 ? adj.core1 : adj.core2;
    if (f.anchor != core) {
      rep.a2 = Verdict::fail("anchor is not the core");
      break;
    }
    if (f.size() != d) {
      rep.a2 = Verdict::fail("end size");
      break;
    }
    Expansion capped{f.anchor, f.body, m};
    auto v = validate_expansion(g, capped);
    if (!v.ok) rep.a2 = Verdict::fail("end " + std::to_string(side) + ": " + v.clause);
  }

  // A3
  rep.a3 = (adj.center.size() <= 10 * m * k)
               ? Verdict::pass()
               : Verdict::fail("center larger than 10mk");

  // A4: exhaustively verify all k+1 lengths when the center graph is small
  if (adj.center.size() + 2 > 24) {
    rep.a4 = A4Status::unverified;
    rep.a4_detail = "center graph above the exact-search cutoff";
    return rep;
  }
  std::set<int> lengths;
  try {
    lengths = adjuster_path_lengths(g, adj.core1, adj.core2, adj.center);
  } catch (const too_large_error&) {
    rep.a4 = A4Status::unverified;
    rep.a4_detail = "exact search budget exhausted";
    return rep;
  }
  auto run_starts_at = [&](int ell) {
    for (int i = 0; i <= k; ++i)
      if (!lengths.count(ell + 2 * i)) return false;
    return true;
  };
  int smallest = -1;
  for (int ell : lengths) {
    if (run_starts_at(ell)) {
      smallest = ell;
      break;
    }
  }
  if (smallest == -1) {
    rep.a4 = A4Status::failed;
    rep.a4_detail = "no run of k+1 same-parity lengths";
  } else if (smallest != adj.initial_length) {
    rep.a4 = A4Status::failed;
    rep.a4_detail = "initial length should be " + std::to_string(smallest);
    rep.recomputed_initial_length = smallest;
  } else {
    rep.a4 = A4Status::verified;
    rep.recomputed_initial_length = smallest;
  }
  return rep;
}

Path expansion_path_to_anchor(const Graph& g, const Expansion& f, int from) {
  std::vector<char> outside(g.order(), 1);
  for (int v : f.body) outside[v] = 0;
  auto dist = bfs_distances(g, {f.anchor}, outside);
  if (!f.body.contains(from) || dist[from] < 0)
    throw std::invalid_argument("expansion_path_to_anchor: vertex not reachable in body");
  Path p;
  int cur = from;
  p.vertices.push_back(cur);
  while (cur != f.anchor) {
    int next = -1;
    for (int u : g.neighbors(cur))
      if (!outside[u] && dist[u] == dist[cur] - 1) {
        next = u;
        break;
      }
    p.vertices.push_back(next);
    cur = next;
  }
  return p;
}

namespace {

std::optional<Adjuster> finish_adjuster(const Graph& g, Adjuster adj, int d, int m) {
  auto rep = validate_adjuster(g, adj, d, m, adj.slack);
  if (rep.a4 == A4Status::failed && rep.recomputed_initial_length >= 0) {
    adj.initial_length = rep.recomputed_initial_length;
    rep = validate_adjuster(g, adj, d, m, adj.slack);
  }
  if (!rep.accepted()) return std::nullopt;
  return adj;
}

} // namespace

std::optional<Adjuster> build_simple_adjuster(const Graph& g, const VertexSet& w, int d,
                                              int m) {
  if (d < 1 || m < 1) throw std::invalid_argument("build_simple_adjuster: need D, m >= 1");
  std::vector<int> rest;
  for (int v = 0; v < g.order(); ++v)
    if (!w.contains(v)) rest.push_back(v);
  auto sub = induced_subgraph(g, VertexSet(rest));
  auto cyc_local = shortest_even_cycle(sub.graph);
  if (!cyc_local) return std::nullopt;
  std::vector<int> cycle;
  for (int v : *cyc_local) cycle.push_back(sub.to_original[v]);

  const int len = static_cast<int>(cycle.size());
  const int r = len / 2;
  VertexSet cycle_set{std::vector<int>(cycle.begin(), cycle.end())};

  for (int i = 0; i < len; ++i) {
    int v1 = cycle[i];
    int v2 = cycle[(i + r - 1) % len];
    VertexSet avoid1 = w.unite(cycle_set);
    avoid1.erase(v1);
    auto ball1 = bfs_ball(g, VertexSet{v1}, m, avoid1);
    if (ball1.size() < d) continue;
    Expansion f1 = trim_expansion(g, Expansion{v1, ball1, m}, d);

    VertexSet avoid2 = w.unite(cycle_set).unite(f1.body);
    avoid2.erase(v2);
    auto ball2 = bfs_ball(g, VertexSet{v2}, m, avoid2);
    if (ball2.size() < d) continue;
    Expansion f2 = trim_expansion(g, Expansion{v2, ball2, m}, d);

    Adjuster adj;
    adj.core1 = v1;
    adj.core2 = v2;
    adj.end1 = f1;
    adj.end2 = f2;
    adj.center = cycle_set;
    adj.center.erase(v1);
    adj.center.erase(v2);
    adj.slack = 1;
    adj.initial_length = r - 1;
    if (auto done = finish_adjuster(g, std::move(adj), d, m)) return done;
  }
  return std::nullopt;
}

std::optional<Adjuster> merge_adjusters(const Graph& g, const Adjuster& a1, const Adjuster& a2,
                                        const VertexSet& w) {
  if (a1.vertices().intersects(a2.vertices()))
    throw std::invalid_argument("merge_adjusters: adjusters overlap");
  if (a1.vertices().intersects(w) || a2.vertices().intersects(w))
    throw std::invalid_argument("merge_adjusters: adjuster overlaps the avoid set");

  int m = std::max({a1.end1.radius, a1.end2.radius, a2.end1.radius, a2.end2.radius});
  int d = a1.end1.size();
  VertexSet bodies1 = a1.end1.body.unite(a1.end2.body);
  VertexSet bodies2 = a2.end1.body.unite(a2.end2.body);
  VertexSet avoid = w.unite(a1.center).unite(a2.center);
  auto p = connect_sets(g, bodies1, bodies2, avoid, m);
  if (!p) return std::nullopt;

  const Expansion& touched1 = a1.end1.body.contains(p->front()) ? a1.end1 : a1.end2;
  const Expansion& kept1 = a1.end1.body.contains(p->front()) ? a1.end2 : a1.end1;
  const Expansion& touched2 = a2.end1.body.contains(p->back()) ? a2.end1 : a2.end2;
  const Expansion& kept2 = a2.end1.body.contains(p->back()) ? a2.end2 : a2.end1;

  // core-to-core connector through the touched expansions
  Path left = expansion_path_to_anchor(g, touched1, p->front());  // touched core <- ... <- p.front
  std::reverse(left.vertices.begin(), left.vertices.end());
  Path right = expansion_path_to_anchor(g, touched2, p->back());
  Path q;
  q.vertices = left.vertices;
  q.vertices.insert(q.vertices.end(), p->vertices.begin() + 1, p->vertices.end());
  q.vertices.insert(q.vertices.end(), right.vertices.begin() + 1, right.vertices.end());

  Adjuster merged;
  merged.core1 = kept1.anchor;
  merged.core2 = kept2.anchor;
  merged.end1 = kept1;
  merged.end2 = kept2;
  merged.center = a1.center.unite(a2.center).unite(VertexSet(q.vertices));
  merged.slack = a1.slack + a2.slack;
  merged.initial_length = a1.initial_length + a2.initial_length + q.length();
  return finish_adjuster(g, std::move(merged), d, m);
}

std::optional<Adjuster> build_adjuster(const Graph& g, const VertexSet& w, int d, int m,
                                       int r) {
  if (r < 1) throw std::invalid_argument("build_adjuster: need r >= 1");
  auto cur = build_simple_adjuster(g, w, d, m);
  if (!cur) return std::nullopt;
  for (int step = 2; step <= r; ++step) {
    VertexSet blocked = w.unite(cur->vertices());
    auto next = build_simple_adjuster(g, blocked, d, m);
    if (!next) return std::nullopt;
    cur = merge_adjusters(g, *cur, *next, w);
    if (!cur) return std::nullopt;
  }
  return cur;
}

Verdict validate_octopus(const Graph& g, const Octopus& oct, int r1, int r2, int r3, int r4) {
  if (oct.designated_end != 1 && oct.designated_end != 2)
    return Verdict::fail("designated end");
  {
    auto rep = validate_adjuster(g, oct.core, r1, r2, 1);
    if (!rep.accepted()) return Verdict::fail("core adjuster");
  }
  if (static_cast<int>(oct.arms.size()) != r3) return Verdict::fail("arm count");

  VertexSet core_vertices = oct.core.vertices();
  VertexSet taken = core_vertices;
  for (const auto& arm : oct.arms) {
    auto rep = validate_adjuster(g, arm, r1, r2, 1);
    if (!rep.accepted()) return Verdict::fail("arm adjuster");
    if (arm.vertices().intersects(taken)) return Verdict::fail("arm disjointness");
    taken = taken.unite(arm.vertices());
  }

  if (oct.tentacles.size() > oct.arms.size()) return Verdict::fail("tentacle count");
  VertexSet all_centers = oct.core.center;
  for (const auto& arm : oct.arms) all_centers = all_centers.unite(arm.center);
  VertexSet interiors;
  for (const auto& t : oct.tentacles) {
    if (t.length() < 1 || t.length() > r4) return Verdict::fail("tentacle length");
    if (!path_in_graph(g, t)) return Verdict::fail("tentacle path");
    for (int v : t.vertices)
      if (all_centers.contains(v)) return Verdict::fail("tentacle meets a center set");
    for (int v : t.interior()) {
      if (interiors.contains(v)) return Verdict::fail("tentacle internal disjointness");
      interiors.insert(v);
    }
  }

  const VertexSet& reach = oct.reach_end().body;
  for (const auto& arm : oct.arms) {
    bool connected = false;
    for (const auto& t : oct.tentacles) {
      // a subpath of t must run from the designated end to one of the arm's
      // ends
      std::vector<int> reach_idx, arm_idx;
      for (size_t i = 0; i < t.vertices.size(); ++i) {
        int v = t.vertices[i];
        if (reach.contains(v)) reach_idx.push_back(static_cast<int>(i));
        if (arm.end1.body.contains(v) || arm.end2.body.contains(v))
          arm_idx.push_back(static_cast<int>(i));
      }
      if (!reach_idx.empty() && !arm_idx.empty()) connected = true;
      if (connected) break;
    }
    if (!connected) return Verdict::fail("arm reachability");
  }
  return Verdict::pass();
}

} // namespace exg
