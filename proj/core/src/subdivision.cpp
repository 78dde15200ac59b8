#include "exgraph/subdivision.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "exgraph/expander.hpp"

namespace exg {

int SubdivisionCertificate::pair_index(int i, int j, int k) {
  // (0,1),(0,2),...,(0,k-1),(1,2),... with i < j
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

Verdict validate_subdivision(const Graph& g, const SubdivisionCertificate& cert) {
  if (cert.k < 2) return Verdict::fail("branch count");
  if (static_cast<int>(cert.branch.size()) != cert.k) return Verdict::fail("branch count");
  std::vector<char> is_branch(g.order(), 0);
  for (int v : cert.branch) {
    if (!g.has_vertex(v) || is_branch[v]) return Verdict::fail("branch distinctness");
    is_branch[v] = 1;
  }
  int expected = cert.k * (cert.k - 1) / 2;
  if (static_cast<int>(cert.paths.size()) != expected) return Verdict::fail("path count");

  std::vector<char> interior_used(g.order(), 0);
  for (int i = 0; i < cert.k; ++i) {
    for (int j = i + 1; j < cert.k; ++j) {
      const Path& p = cert.paths[SubdivisionCertificate::pair_index(i, j, cert.k)];
      if (p.length() != cert.ell) return Verdict::fail("uniform length");
      if (!path_in_graph(g, p)) return Verdict::fail("path validity");
      if (p.front() != cert.branch[i] || p.back() != cert.branch[j])
        return Verdict::fail("endpoints");
      for (int v : p.interior()) {
        if (is_branch[v]) return Verdict::fail("interior hits branch");
        if (interior_used[v]) return Verdict::fail("internal disjointness");
        interior_used[v] = 1;
      }
    }
  }
  return Verdict::pass();
}

namespace {

std::optional<std::pair<VertexSet, std::vector<int>>> bipartite_colors(const Graph& g) {
  auto parts = bipartition(g);
  if (!parts) return std::nullopt;
  std::vector<int> color(g.order(), 0);
  for (int v : parts->second) color[v] = 1;
  return std::make_pair(parts->first, std::move(color));
}

// Exact path of given length via bitmask DP over the usable vertices.
std::optional<Path> exact_length_path(const Graph& g, const std::vector<char>& usable, int v1,
                                      int v2, int ell) {
  std::vector<int> verts;
  for (int v = 0; v < g.order(); ++v)
    if (usable[v]) verts.push_back(v);
  const int n = static_cast<int>(verts.size());
  if (n > 20 || ell + 1 > n) return std::nullopt;
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < n; ++i) local[verts[i]] = i;
  int s = local[v1], t = local[v2];

  std::vector<std::uint32_t> reach(1u << n, 0);
  reach[1u << s] = 1u << s;
  std::uint32_t found_mask = 0;
  for (std::uint32_t mask = 1; mask < (1u << n) && !found_mask; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    int sz = std::popcount(mask);
    if (sz == ell + 1) {
      if (ends & (1u << t)) found_mask = mask;
      continue;
    }
    if (sz > ell + 1) continue;
    std::uint32_t rest = ends;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (v == t) continue;
      for (int u : g.neighbors(verts[v])) {
        int lu = local[u];
        if (lu < 0 || (mask & (1u << lu))) continue;
        reach[mask | (1u << lu)] |= (1u << lu);
      }
    }
  }
  if (!found_mask) return std::nullopt;

  // walk the winning mask backwards, smallest predecessor first
  Path p;
  std::uint32_t mask = found_mask;
  int cur = t;
  p.vertices.push_back(verts[cur]);
  while (cur != s || std::popcount(mask) > 1) {
    std::uint32_t prev_mask = mask & ~(1u << cur);
    int pick = -1;
    std::uint32_t cands = reach[prev_mask];
    while (cands) {
      int u = std::countr_zero(cands);
      cands &= cands - 1;
      if (g.adjacent(verts[u], verts[cur])) {
        pick = u;
        break;
      }
    }
    cur = pick;
    mask = prev_mask;
    p.vertices.push_back(verts[cur]);
  }
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

// Exact path of given length inside a small induced graph, by plain DFS.
bool dfs_exact_path(const Graph& g, const std::vector<char>& usable, int cur, int goal,
                    int rem, std::vector<char>& used, std::vector<int>& seq) {
  if (rem == 0) return cur == goal;
  for (int u : g.neighbors(cur)) {
    if (!usable[u] || used[u]) continue;
    if (u == goal && rem != 1) continue;
    used[u] = 1;
    seq.push_back(u);
    if (dfs_exact_path(g, usable, u, goal, rem - 1, used, seq)) return true;
    seq.pop_back();
    used[u] = 0;
  }
  return false;
}

// Budgeted goal-directed DFS for an exact-length path; the last rung of the
// ladder, for hosts too big to scan exactly and too unstructured for
// adjusters. Sound, incomplete.
struct GreedyDfs {
  const Graph& g;
  const std::vector<char>& usable;
  const std::vector<int>& dist_goal;
  bool parity_fixed;
  int goal;
  long long nodes;

  bool run(int cur, int rem, std::vector<char>& used, std::vector<int>& seq) {
    if (--nodes <= 0) return false;
    if (rem == 0) return cur == goal;
    std::vector<std::pair<int, int>> order;
    for (int u : g.neighbors(cur)) {
      if (!usable[u] || used[u]) continue;
      if (u == goal && rem != 1) continue;
      if (dist_goal[u] < 0 || dist_goal[u] > rem - 1) continue;
      if (parity_fixed && (rem - 1 - dist_goal[u]) % 2 != 0) continue;
      order.emplace_back(dist_goal[u], u);
    }
    std::sort(order.begin(), order.end());
    for (auto [dg, u] : order) {
      used[u] = 1;
      seq.push_back(u);
      if (run(u, rem - 1, used, seq)) return true;
      seq.pop_back();
      used[u] = 0;
    }
    return false;
  }
};

std::optional<Path> greedy_length_path(const Graph& g, const std::vector<char>& usable,
                                       int v1, int v2, int ell, bool bipartite_host,
                                       long long nodes) {
  if (nodes <= 0) return std::nullopt;
  std::vector<char> blocked(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) blocked[v] = !usable[v];
  auto dist_goal = bfs_distances(g, {v2}, blocked);
  GreedyDfs dfs{g, usable, dist_goal, bipartite_host, v2, nodes};
  std::vector<char> used(g.order(), 0);
  used[v1] = 1;
  std::vector<int> seq{v1};
  if (dfs.run(v1, ell, used, seq)) return Path{seq};
  return std::nullopt;
}

std::optional<Path> adjuster_length_path(const Graph& g, const VertexSet& w, int v1, int v2,
                                         int ell, const AdjusterBudget& budget) {
  VertexSet blocked = w;
  blocked.insert(v1);
  blocked.insert(v2);
  auto adj = build_adjuster(g, blocked, budget.d, budget.m, budget.r);
  if (!adj) return std::nullopt;

  // route each endpoint onto a distinct core, then tune the middle inside
  // the center set
  VertexSet avoid1 = w.unite(adj->center).unite(adj->end2.body);
  avoid1.erase(v1);
  auto p1 = connect_sets(g, VertexSet{v1}, adj->end1.body, avoid1, g.order());
  if (!p1) return std::nullopt;
  Path to_core1 = *p1;
  {
    Path tail = expansion_path_to_anchor(g, adj->end1, p1->back());
    to_core1.vertices.insert(to_core1.vertices.end(), tail.vertices.begin() + 1,
                             tail.vertices.end());
  }
  VertexSet avoid2 = w.unite(adj->center).unite(adj->end1.body).unite(VertexSet(to_core1.vertices));
  avoid2.erase(v2);
  auto p2 = connect_sets(g, VertexSet{v2}, adj->end2.body, avoid2, g.order());
  if (!p2) return std::nullopt;
  Path to_core2 = *p2;
  {
    Path tail = expansion_path_to_anchor(g, adj->end2, p2->back());
    to_core2.vertices.insert(to_core2.vertices.end(), tail.vertices.begin() + 1,
                             tail.vertices.end());
  }

  int rem = ell - to_core1.length() - to_core2.length();
  int lo = adj->initial_length, hi = adj->initial_length + 2 * adj->slack;
  if (rem < lo || rem > hi || (rem - lo) % 2 != 0) return std::nullopt;

  // exact middle piece inside the center graph
  std::vector<char> usable(g.order(), 0);
  for (int v : adj->center) usable[v] = 1;
  usable[adj->core1] = usable[adj->core2] = 1;
  std::vector<char> used(g.order(), 0);
  used[adj->core1] = 1;
  std::vector<int> seq{adj->core1};
  if (!dfs_exact_path(g, usable, adj->core1, adj->core2, rem, used, seq)) return std::nullopt;

  Path full = to_core1;
  full.vertices.insert(full.vertices.end(), seq.begin() + 1, seq.end());
  for (auto it = to_core2.vertices.rbegin() + 1; it != to_core2.vertices.rend(); ++it)
    full.vertices.push_back(*it);
  if (!path_in_graph(g, full) || full.length() != ell) return std::nullopt;
  return full;
}

} // namespace

std::optional<Path> fixed_length_path(const Graph& g, const VertexSet& w, int v1, int v2,
                                      int ell, const AdjusterBudget& budget) {
  if (w.contains(v1) || w.contains(v2))
    throw std::invalid_argument("fixed_length_path: endpoint inside W");
  if (ell < 0) throw std::invalid_argument("fixed_length_path: negative length");
  if (auto colored = bipartite_colors(g)) {
    const auto& color = colored->second;
    std::vector<char> none;
    auto dist = bfs_distances(g, {v1}, none);
    if (dist[v2] >= 0) { // same component: the parity class is forced
      int pi = (v1 == v2) ? 0 : (color[v1] != color[v2] ? 1 : 2);
      if (ell % 2 != pi % 2)
        throw parity_error("fixed_length_path: length " + std::to_string(ell) +
                           " is parity-impossible for these endpoints");
    }
  }
  std::vector<char> usable(g.order(), 1);
  for (int v : w) usable[v] = 0;
  // only vertices with d(v1,v) + d(v,v2) <= ell can sit on a length-ell
  // path, so dropping the rest is lossless and shrinks the search space
  std::vector<char> blocked(g.order(), 0);
  for (int v : w) blocked[v] = 1;
  auto d1 = bfs_distances(g, {v1}, blocked);
  auto d2 = bfs_distances(g, {v2}, blocked);
  if (d1[v2] < 0 || d1[v2] > ell) return std::nullopt;
  int usable_count = 0;
  for (int v = 0; v < g.order(); ++v) {
    usable[v] = usable[v] && d1[v] >= 0 && d2[v] >= 0 && d1[v] + d2[v] <= ell;
    usable_count += usable[v];
  }
  if (usable_count <= 20) return exact_length_path(g, usable, v1, v2, ell);
  if (auto p = adjuster_length_path(g, w, v1, v2, ell, budget)) return p;
  return greedy_length_path(g, usable, v1, v2, ell, bipartite_colors(g).has_value(),
                            budget.greedy_nodes);
}

std::optional<std::pair<Path, Path>> paired_paths(const Graph& g, const VertexSet& w,
                                                  const VertexSet& u1, const VertexSet& u2,
                                                  const Expansion& f3, const Expansion& f4,
                                                  int ell, int slack,
                                                  const AdjusterBudget& budget) {
  if (u1.intersects(u2)) throw std::invalid_argument("paired_paths: U1 meets U2");
  VertexSet bodies = f3.body.unite(f4.body);
  if (bodies.intersects(u1) || bodies.intersects(u2) || bodies.intersects(w))
    throw std::invalid_argument("paired_paths: expansions must avoid U1, U2 and W");

  // first leg: greedy shortest connection from either U to either expansion
  auto p0 = connect_sets(g, u1.unite(u2), bodies, w, g.order());
  if (!p0) return std::nullopt;
  bool from_u1 = u1.contains(p0->front());
  const Expansion& hit = f3.body.contains(p0->back()) ? f3 : f4;
  const Expansion& other = f3.body.contains(p0->back()) ? f4 : f3;
  Path first = *p0;
  {
    Path tail = expansion_path_to_anchor(g, hit, p0->back());
    first.vertices.insert(first.vertices.end(), tail.vertices.begin() + 1, tail.vertices.end());
  }

  const VertexSet& u_other = from_u1 ? u2 : u1;
  VertexSet blocked = w.unite(VertexSet(first.vertices));
  int attempts = 0;
  for (int u : u_other) {
    if (blocked.contains(u)) continue;
    if (++attempts > 24) break;
    for (int len2 = std::max(1, ell - first.length());
         len2 <= ell + slack - first.length(); ++len2) {
      std::optional<Path> second;
      try {
        second = fixed_length_path(g, blocked, u, other.anchor, len2, budget);
      } catch (const parity_error&) {
        continue;
      }
      if (second) {
        Path a = from_u1 ? first : *second;
        Path b = from_u1 ? *second : first;
        return std::make_pair(std::move(a), std::move(b));
      }
    }
  }
  return std::nullopt;
}

namespace {

// ---- balanced-subdivision driver ----

struct PathEnumerator {
  // all simple (u,v)-paths of exact length, lexicographic, capped
  static void collect(const Graph& g, const std::vector<char>& banned, int cur, int goal,
                      int rem, std::vector<int>& seq, std::vector<char>& used,
                      std::vector<Path>& out, int cap, long long& nodes) {
    if (static_cast<int>(out.size()) >= cap || nodes <= 0) return;
    --nodes;
    if (rem == 0) {
      if (cur == goal) out.push_back(Path{seq});
      return;
    }
    for (int u : g.neighbors(cur)) {
      if (banned[u] || used[u]) continue;
      if (u == goal && rem != 1) continue;
      used[u] = 1;
      seq.push_back(u);
      collect(g, banned, u, goal, rem - 1, seq, used, out, cap, nodes);
      seq.pop_back();
      used[u] = 0;
    }
  }
};

std::vector<Path> enumerate_paths(const Graph& g, const std::vector<char>& banned, int u,
                                  int v, int ell, int cap, long long& nodes) {
  std::vector<Path> out;
  std::vector<int> seq{u};
  std::vector<char> used(g.order(), 0);
  used[u] = 1;
  PathEnumerator::collect(g, banned, u, v, ell, seq, used, out, cap, nodes);
  return out;
}

// saturating count of length-ell walks, a cheap most-constrained-first proxy
long long walk_count(const Graph& g, int u, int v, int ell) {
  const long long cap = 1'000'000'000;
  std::vector<long long> cur(g.order(), 0), next(g.order(), 0);
  cur[u] = 1;
  for (int step = 0; step < ell; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (int x = 0; x < g.order(); ++x) {
      if (!cur[x]) continue;
      for (int y : g.neighbors(x)) next[y] = std::min(cap, next[y] + cur[x]);
    }
    std::swap(cur, next);
  }
  return cur[v];
}

struct PairTask {
  int i, j;
  long long proxy;
};

// Reserved-neighbourhood bookkeeping: each branch vertex reserves its
// neighbourhood at selection time, connections consume it, and a vertex
// whose consumed fraction would exceed the limit refuses further paths
// (it has gone bad and gets retired between attempts).
struct BranchBudget {
  std::vector<VertexSet> reserved;
  std::vector<int> consumed;
  double fraction = 0.5;

  void init(const Graph& g, const std::vector<int>& branch, double frac,
            int codegree_threshold) {
    fraction = frac;
    reserved.clear();
    consumed.assign(branch.size(), 0);
    std::vector<char> is_branch(g.order(), 0);
    for (int v : branch) is_branch[v] = 1;
    for (int v : branch) {
      std::vector<int> surface;
      for (int w : g.neighbors(v)) {
        if (codegree_threshold >= 0) {
          int codeg = 0;
          for (int u : g.neighbors(w))
            if (is_branch[u]) ++codeg;
          if (codeg > codegree_threshold) continue;
        }
        surface.push_back(w);
      }
      reserved.push_back(VertexSet(surface));
    }
  }
  bool try_charge(const Path& p) {
    std::vector<int> delta(reserved.size(), 0);
    for (size_t b = 0; b < reserved.size(); ++b)
      for (int v : p.interior())
        if (reserved[b].contains(v)) ++delta[b];
    for (size_t b = 0; b < reserved.size(); ++b)
      if (delta[b] > 0 &&
          consumed[b] + delta[b] > fraction * reserved[b].size())
        return false;
    for (size_t b = 0; b < reserved.size(); ++b) consumed[b] += delta[b];
    return true;
  }
  void decharge(const Path& p) {
    for (size_t b = 0; b < reserved.size(); ++b)
      for (int v : p.interior())
        if (reserved[b].contains(v)) --consumed[b];
  }
  int most_consumed() const {
    int worst = -1;
    double worst_ratio = -1;
    for (size_t b = 0; b < reserved.size(); ++b) {
      if (reserved[b].size() == 0) continue;
      double ratio = static_cast<double>(consumed[b]) / reserved[b].size();
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        worst = static_cast<int>(b);
      }
    }
    return worst;
  }
};

// Pair-by-pair backtracking over exact-length paths. `interior_used` doubles
// as the banned set: branch vertices stay banned, the current pair's
// endpoints are unbanned only for their own enumeration.
std::optional<SubdivisionCertificate> connect_branch_set(const Graph& g,
                                                         const std::vector<int>& branch,
                                                         int ell, long long& nodes, int cap,
                                                         BranchBudget* budget = nullptr) {
  const int k = static_cast<int>(branch.size());
  std::vector<PairTask> order;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      order.push_back({i, j, walk_count(g, branch[i], branch[j], ell)});
  std::stable_sort(order.begin(), order.end(),
                   [](const PairTask& a, const PairTask& b) { return a.proxy < b.proxy; });
  for (const auto& t : order)
    if (t.proxy == 0) return std::nullopt; // some pair cannot be connected at all

  std::vector<char> interior_used(g.order(), 0);
  for (int v : branch) interior_used[v] = 1;
  std::vector<Path> chosen(k * (k - 1) / 2);

  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (idx == order.size()) return true;
    if (nodes <= 0) return false;
    if (ell >= 2) {
      long long need = 0;
      for (size_t q = idx; q < order.size(); ++q) need += (ell - 1);
      long long free = 0;
      for (int v = 0; v < g.order(); ++v)
        if (!interior_used[v]) ++free;
      if (need > free) return false;
    }
    auto [i, j, proxy] = order[idx];
    interior_used[branch[i]] = 0;
    interior_used[branch[j]] = 0;
    auto paths = enumerate_paths(g, interior_used, branch[i], branch[j], ell, cap, nodes);
    interior_used[branch[i]] = 1;
    interior_used[branch[j]] = 1;
    for (const auto& p : paths) {
      bool clash = false;
      for (int v : p.interior())
        if (interior_used[v]) clash = true;
      if (clash) continue;
      if (budget && !budget->try_charge(p)) continue; // some branch vertex went bad
      for (int v : p.interior()) interior_used[v] = 1;
      chosen[SubdivisionCertificate::pair_index(i, j, k)] = p;
      if (rec(idx + 1)) return true;
      for (int v : p.interior()) interior_used[v] = 0;
      if (budget) budget->decharge(p);
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;

  SubdivisionCertificate cert;
  cert.k = k;
  cert.ell = ell;
  cert.branch = branch;
  cert.paths = std::move(chosen);
  return cert;
}

std::optional<SubdivisionCertificate> exhaustive_subdivision(const Graph& g, int k, int ell) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  const int n = g.order();
  if (k > n) return std::nullopt;
  while (true) {
    std::vector<int> branch(idx.begin(), idx.end());
    long long nodes = 2'000'000;
    if (auto cert = connect_branch_set(g, branch, ell, nodes, 1 << 20)) return cert;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<SubdivisionCertificate> highdeg_driver(const Graph& g, int k, int ell,
                                                     const SubdivisionOptions& opts) {
  // branch selection ladder: prefer well-separated high-degree vertices,
  // relax separation when the graph cannot afford it
  std::vector<int> by_degree(g.order());
  for (int v = 0; v < g.order(); ++v) by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });

  std::vector<int> separations;
  if (ell == 1)
    separations = {1};
  else
    separations = {3, 2, 1};

  for (int sep : separations) {
    std::vector<int> branch;
    std::vector<char> none;
    for (int v : by_degree) {
      bool ok = true;
      for (int b : branch) {
        if (ell == 1 && !g.adjacent(v, b)) { // length-1 paths force a clique
          ok = false;
          break;
        }
        if (sep >= 2) {
          auto dist = bfs_distances(g, {b}, none);
          if (dist[v] >= 0 && dist[v] < sep) {
            ok = false;
            break;
          }
        }
      }
      if (ok) branch.push_back(v);
      if (static_cast<int>(branch.size()) == k) break;
    }
    if (static_cast<int>(branch.size()) < k) continue;

    BranchBudget budget;
    budget.init(g, branch, opts.retire_fraction, opts.codegree_threshold);
    std::vector<char> retired(g.order(), 0);
    for (int swap = 0; swap <= opts.branch_swaps; ++swap) {
      long long nodes = opts.backtrack_budget;
      if (auto cert =
              connect_branch_set(g, branch, ell, nodes, opts.paths_per_pair, &budget)) {
        return cert;
      }
      // retire the most-consumed branch vertex and pull in the next candidate
      int worst = budget.most_consumed();
      if (worst < 0) break;
      retired[branch[worst]] = 1;
      int replacement = -1;
      for (int v : by_degree) {
        if (retired[v]) continue;
        if (std::find(branch.begin(), branch.end(), v) != branch.end()) continue;
        replacement = v;
        break;
      }
      if (replacement < 0) break;
      branch[worst] = replacement;
      std::sort(branch.begin(), branch.end(), [&](int a, int b) {
        return g.degree(a) > g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
      });
      budget.init(g, branch, opts.retire_fraction, opts.codegree_threshold);
    }
  }
  return std::nullopt;
}

std::optional<SubdivisionCertificate> unit_driver(const Graph& g, int k, int ell,
                                                  const SubdivisionOptions& opts) {
  const int h0 = k - 1; // one hub per counterpart unit
  if (h0 < 1) return std::nullopt;
  std::vector<Unit> units;
  VertexSet consumed;
  for (int i = 0; i < k; ++i) {
    auto u = build_unit(g, consumed, h0, opts.unit_h1, opts.unit_h2, opts.unit_h3);
    if (!u) return std::nullopt;
    consumed = consumed.unite(u->vertices());
    units.push_back(std::move(*u));
  }

  VertexSet interiors;
  for (const auto& u : units) interiors = interiors.unite(u.interior());

  std::vector<int> branch;
  for (const auto& u : units) branch.push_back(u.core);
  std::vector<int> next_hub(k, 0);
  std::vector<Path> chosen(k * (k - 1) / 2);
  VertexSet used; // everything already consumed by finished connections

  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (next_hub[i] >= h0 || next_hub[j] >= h0) return std::nullopt;
      const Unit& mi = units[i];
      const Unit& mj = units[j];
      const Hub& hi = mi.hubs[next_hub[i]];
      const Hub& hj = mj.hubs[next_hub[j]];

      // extension: core -spoke- hub center -z- x, with x in the second layer
      auto extensions = [&](const Unit& m, const Hub& h, int hub_idx) {
        std::vector<Path> out;
        const Path& spoke = m.spokes[hub_idx];
        for (size_t zi = 0; zi < h.first_layer.size(); ++zi) {
          int z = h.first_layer[zi];
          for (int x : h.second_layer[zi]) {
            if (used.contains(x) || used.contains(z)) continue;
            Path ext = spoke;
            ext.vertices.push_back(z);
            ext.vertices.push_back(x);
            out.push_back(std::move(ext));
          }
        }
        return out;
      };
      bool connected = false;
      for (const auto& ext_i : extensions(mi, hi, next_hub[i])) {
        if (connected) break;
        for (const auto& ext_j : extensions(mj, hj, next_hub[j])) {
          int middle_len = ell - ext_i.length() - ext_j.length();
          if (middle_len < 1) continue;
          VertexSet blocked = interiors.unite(used)
                                  .unite(VertexSet(ext_i.vertices))
                                  .unite(VertexSet(ext_j.vertices));
          blocked.erase(ext_i.back());
          blocked.erase(ext_j.back());
          std::optional<Path> middle;
          try {
            middle = fixed_length_path(g, blocked, ext_i.back(), ext_j.back(), middle_len,
                                       opts.adjuster);
          } catch (const parity_error&) {
            continue;
          }
          if (!middle) continue;
          Path full = ext_i;
          full.vertices.insert(full.vertices.end(), middle->vertices.begin() + 1,
                               middle->vertices.end());
          for (auto it = ext_j.vertices.rbegin() + 1; it != ext_j.vertices.rend(); ++it)
            full.vertices.push_back(*it);
          if (!path_in_graph(g, full) || full.length() != ell) continue;
          chosen[SubdivisionCertificate::pair_index(i, j, k)] = full;
          for (int v : full.interior()) used.insert(v);
          connected = true;
          break;
        }
      }
      if (!connected) return std::nullopt;
      ++next_hub[i];
      ++next_hub[j];
    }
  }

  SubdivisionCertificate cert;
  cert.k = k;
  cert.ell = ell;
  cert.branch = branch;
  cert.paths = std::move(chosen);
  return cert;
}

} // namespace

std::optional<SubdivisionCertificate> find_balanced_subdivision(const Graph& g, int k, int ell,
                                                                const SubdivisionOptions& opts) {
  if (k < 2 || ell < 1)
    throw std::invalid_argument("find_balanced_subdivision: need k >= 2, ell >= 1");

  std::optional<SubdivisionCertificate> cert;
  bool tiny = g.order() <= 10 && k <= 5 && ell <= 3;
  switch (opts.strategy) {
    case SubdivisionStrategy::highdeg_cores:
      cert = tiny ? exhaustive_subdivision(g, k, ell) : highdeg_driver(g, k, ell, opts);
      break;
    case SubdivisionStrategy::unit_cores:
      cert = unit_driver(g, k, ell, opts);
      break;
    case SubdivisionStrategy::auto_mode:
      if (tiny) {
        cert = exhaustive_subdivision(g, k, ell);
      } else {
        cert = highdeg_driver(g, k, ell, opts);
        if (!cert) cert = unit_driver(g, k, ell, opts);
      }
      break;
  }
  if (cert && !validate_subdivision(g, *cert).ok)
    throw std::logic_error("find_balanced_subdivision: produced an invalid certificate");
  return cert;
}

} // namespace exg
