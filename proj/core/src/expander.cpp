#include "exgraph/expander.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

namespace exg {

double epsilon(double x, const ExpanderParams& p) {
  if (x <= 0) throw std::invalid_argument("epsilon: x must be positive");
  if (x < p.k / 5.0) return 0.0;
  double lg = std::log2(15.0 * x / p.k);
  return p.eps1 / (lg * lg);
}

bool check_expansion_witness(const Graph& g, const ExpanderParams& p, const VertexSet& x) {
  double sz = x.size();
  if (sz < p.k / 2.0 || sz > g.order() / 2.0)
    throw std::domain_error("check_expansion_witness: |X| outside [k/2, |G|/2]");
  auto nbhd = external_neighborhood(g, x);
  return nbhd.size() >= epsilon(sz, p) * sz;
}

namespace {

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> masks(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    masks[u] |= (1u << v);
    masks[v] |= (1u << u);
  }
  return masks;
}

VertexSet mask_to_set(std::uint32_t mask) {
  std::vector<int> ids;
  while (mask) {
    int b = std::countr_zero(mask);
    ids.push_back(b);
    mask &= mask - 1;
  }
  return VertexSet(std::move(ids));
}

} // namespace

ExpansionCertificate certify_expander(const Graph& g, const ExpanderParams& p) {
  if (g.order() > 24)
    throw too_large_error("certify_expander: exact mode is limited to 24 vertices");
  ExpansionCertificate cert;
  cert.mode = CertMode::exact;
  cert.eps1 = p.eps1;
  cert.k = p.k;
  const int n = g.order();
  auto nbrs = neighbor_masks(g);
  int lo = static_cast<int>(std::ceil(p.k / 2.0));
  lo = std::max(lo, 1);
  int hi = n / 2; // |X| <= |G|/2
  std::uint32_t best_witness = 0;
  int best_size = -1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int sz = std::popcount(mask);
    if (sz < lo || sz > hi) continue;
    ++cert.sets_checked;
    std::uint32_t nb = 0;
    std::uint32_t rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      nb |= nbrs[v];
      rest &= rest - 1;
    }
    nb &= ~mask;
    int expand = std::popcount(nb);
    if (expand < epsilon(sz, p) * sz) {
      if (best_size == -1 || sz < best_size || (sz == best_size && mask < best_witness)) {
        best_size = sz;
        best_witness = mask;
      }
    }
  }
  if (best_size >= 0) {
    cert.verdict = CertVerdict::counterexample;
    cert.witness = mask_to_set(best_witness);
  } else {
    cert.verdict = CertVerdict::expander;
  }
  return cert;
}

ExpansionCertificate certify_expander_sampled(const Graph& g, const ExpanderParams& p,
                                              const SampleOptions& opts) {
  ExpansionCertificate cert;
  cert.mode = CertMode::sampled;
  cert.eps1 = p.eps1;
  cert.k = p.k;
  const int n = g.order();
  int lo = std::max(1, static_cast<int>(std::ceil(p.k / 2.0)));
  int hi = n / 2;
  if (lo > hi) {
    cert.verdict = CertVerdict::inconclusive;
    return cert;
  }
  std::mt19937_64 rng(opts.seed);
  std::vector<char> in_x(n, 0);
  for (int trial = 0; trial < opts.trials; ++trial) {
    // grow a set from a random seed vertex, always absorbing the neighbour
    // that keeps the external boundary smallest
    std::fill(in_x.begin(), in_x.end(), 0);
    std::vector<int> members;
    int start = static_cast<int>(rng() % n);
    members.push_back(start);
    in_x[start] = 1;
    while (static_cast<int>(members.size()) <= hi) {
      int sz = static_cast<int>(members.size());
      if (sz >= lo) {
        ++cert.sets_checked;
        VertexSet x(members);
        auto nbhd = external_neighborhood(g, x);
        if (nbhd.size() < epsilon(sz, p) * sz) {
          cert.verdict = CertVerdict::counterexample;
          cert.witness = x;
          return cert;
        }
      }
      // candidate absorptions: external neighbours; pick the one minimizing
      // the resulting boundary (ties: smaller id)
      VertexSet x(members);
      auto boundary = external_neighborhood(g, x);
      if (boundary.empty()) break;
      int best = -1;
      int best_score = -1;
      for (int cand : boundary) {
        int score = 0;
        for (int w : g.neighbors(cand))
          if (!in_x[w]) ++score;
        if (best == -1 || score < best_score) {
          best = cand;
          best_score = score;
        }
      }
      members.push_back(best);
      in_x[best] = 1;
    }
  }
  cert.verdict = CertVerdict::inconclusive;
  return cert;
}

namespace {

// Delete minimum-degree vertices while delta < d/2 of the current average.
// Average degree never drops in the process.
VertexSet trim_to_min_degree(const Graph& g, VertexSet keep) {
  while (keep.size() > 0) {
    auto sub = induced_subgraph(g, keep);
    if (sub.graph.size() == 0) break;
    Rat avg = degree_stats(sub.graph).average;
    int worst = -1;
    for (int v = 0; v < sub.graph.order(); ++v)
      if (Rat(2 * sub.graph.degree(v)) < avg &&
          (worst == -1 || sub.graph.degree(v) < sub.graph.degree(worst)))
        worst = v;
    if (worst == -1) break;
    keep.erase(sub.to_original[worst]);
  }
  return keep;
}

} // namespace

ExtractResult extract_expander(const Graph& g, double k, double eps1) {
  if (g.size() < 1) throw std::invalid_argument("extract_expander: graph has no edges");
  ExpanderParams p{eps1, k};
  Rat target = degree_stats(g).average / 2;

  std::vector<int> all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  VertexSet keep = trim_to_min_degree(g, VertexSet(all));

  auto certify = [&](const Graph& h) {
    return h.order() <= 24 ? certify_expander(h, p)
                           : certify_expander_sampled(h, p, SampleOptions{0x9e3779b9, 48});
  };

  auto sub = induced_subgraph(g, keep);
  ExpansionCertificate cert = certify(sub.graph);
  while (cert.verdict == CertVerdict::counterexample) {
    // split on the witness and recurse into the denser side, but only while
    // the average-degree guarantee survives
    VertexSet x_orig;
    for (int v : *cert.witness) x_orig.insert(sub.to_original[v]);
    VertexSet nb_orig;
    for (int v : external_neighborhood(sub.graph, *cert.witness))
      nb_orig.insert(sub.to_original[v]);

    VertexSet side1 = x_orig.unite(nb_orig);
    VertexSet side2 = keep.minus(x_orig);
    auto density = [&](const VertexSet& s) -> Rat {
      if (s.empty()) return Rat(-1);
      auto is = induced_subgraph(g, s);
      return Rat(is.graph.size(), s.size());
    };
    Rat d1 = density(side1), d2 = density(side2);
    VertexSet chosen;
    if (d1 > d2 || (d1 == d2 && side1.size() <= side2.size()))
      chosen = side1;
    else
      chosen = side2;

    VertexSet trimmed = trim_to_min_degree(g, chosen);
    if (trimmed.empty() || trimmed == keep) break;
    auto trial = induced_subgraph(g, trimmed);
    if (trial.graph.size() == 0 || degree_stats(trial.graph).average < target) break;
    keep = trimmed;
    sub = std::move(trial);
    cert = certify(sub.graph);
  }

  // exact post-checks of both degree inequalities
  auto stats = degree_stats(sub.graph);
  if (stats.average < target)
    throw std::logic_error("extract_expander: average-degree invariant violated");
  if (Rat(2 * stats.minimum) < stats.average)
    throw std::logic_error("extract_expander: min-degree invariant violated");
  return ExtractResult{std::move(sub.graph), std::move(keep), std::move(cert)};
}

Graph bipartite_half(const Graph& g) {
  if (g.size() < 1) throw std::invalid_argument("bipartite_half: graph has no edges");
  const int n = g.order();
  std::vector<char> side(n, 0);
  if (auto parts = bipartition(g)) {
    for (int v : parts->second) side[v] = 1;
  } else {
    // deterministic local-search max-cut: sweep in id order, move a vertex
    // while it strictly gains cut edges
    bool moved = true;
    while (moved) {
      moved = false;
      for (int v = 0; v < n; ++v) {
        int cut = 0, same = 0;
        for (int w : g.neighbors(v))
          (side[w] != side[v] ? cut : same)++;
        if (same > cut) {
          side[v] = 1 - side[v];
          moved = true;
        }
      }
    }
  }
  std::vector<std::pair<int, int>> cut_edges;
  for (auto [u, v] : g.edges())
    if (side[u] != side[v]) cut_edges.emplace_back(u, v);
  return Graph::from_edges(n, cut_edges);
}

std::optional<Path> connect_sets(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const VertexSet& avoid, int max_len) {
  if (a.empty() || b.empty()) throw std::invalid_argument("connect_sets: empty endpoint set");
  if (avoid.intersects(a) || avoid.intersects(b))
    throw std::invalid_argument("connect_sets: avoid overlaps an endpoint set");
  std::vector<char> blocked(g.order(), 0);
  for (int v : avoid) blocked[v] = 1;
  auto dist_a = bfs_distances(g, a.ids(), blocked);
  int best = -1;
  for (int v : b)
    if (dist_a[v] >= 0 && (best == -1 || dist_a[v] < best)) best = dist_a[v];
  if (best < 0 || best > max_len) return std::nullopt;
  auto dist_b = bfs_distances(g, b.ids(), blocked);

  // lexicographically smallest shortest path: greedy over vertices on some
  // shortest route, i.e. dist_a(v) + dist_b(v) == best
  int cur = -1;
  for (int v : a)
    if (dist_b[v] == best && (cur == -1 || v < cur)) cur = v;
  Path path;
  path.vertices.push_back(cur);
  for (int step = 1; step <= best; ++step) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (blocked[w]) continue;
      if (dist_a[w] == step && dist_b[w] == best - step) {
        next = w;
        break; // neighbours sorted ascending
      }
    }
    path.vertices.push_back(next);
    cur = next;
  }
  return path;
}

} // namespace exg
