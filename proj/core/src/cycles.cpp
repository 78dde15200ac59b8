#include "exgraph/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "exgraph/subdivision.hpp"

namespace exg {

bool CycleSpectrum::contains(int ell) const {
  return std::binary_search(lengths.begin(), lengths.end(), ell);
}

ParityClass parity_class(const Graph& g, int u, int v) {
  auto parts = bipartition(g);
  if (!parts) throw std::domain_error("parity_class: host is not bipartite");
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::invalid_argument("parity_class: vertex id out of range");
  std::vector<char> none;
  auto dist = bfs_distances(g, {u}, none);
  if (dist[v] < 0) throw std::domain_error("parity_class: vertices in different components");
  if (u == v) return {0};
  bool same = parts->first.contains(u) == parts->first.contains(v);
  return {same ? 2 : 1};
}

namespace {

struct SpectrumScan {
  const Graph& g;
  std::vector<char> used;
  std::vector<int> path;
  CycleSpectrum out;
  int want_all = 0; // early exit once every length 3..n is present

  explicit SpectrumScan(const Graph& graph) : g(graph), used(graph.order(), 0) {}

  bool complete() const {
    return want_all > 0 && static_cast<int>(out.lengths.size()) == want_all;
  }

  void record() {
    int len = static_cast<int>(path.size());
    auto it = std::lower_bound(out.lengths.begin(), out.lengths.end(), len);
    if (it != out.lengths.end() && *it == len) return;
    out.lengths.insert(it, len);
    out.witnesses.emplace(len, path);
  }

  // canonical starts: the root is the cycle minimum, direction fixed by
  // requiring path[1] < path.back() at close time
  void dfs(int root, int cur) {
    if (complete()) return;
    for (int w : g.neighbors(cur)) {
      if (complete()) return;
      if (w == root && path.size() >= 3 && path[1] < path.back()) record();
      if (w <= root || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      dfs(root, w);
      path.pop_back();
      used[w] = 0;
    }
  }
};

} // namespace

CycleSpectrum cycle_spectrum_exact(const Graph& g) {
  if (g.order() > 16)
    throw too_large_error("cycle_spectrum_exact: enumeration is limited to 16 vertices");
  SpectrumScan scan(g);
  // full-range early exit: bipartite hosts only reach even lengths, capped
  // by twice the smaller class; matters a lot on dense bipartite inputs
  if (auto parts = bipartition(g)) {
    int cap = 2 * std::min(parts->first.size(), parts->second.size());
    scan.want_all = std::max(0, (std::min(cap, g.order()) - 2) / 2);
  } else {
    scan.want_all = std::max(0, g.order() - 2);
  }
  for (int root = 0; root < g.order() && !scan.complete(); ++root) {
    scan.path = {root};
    std::fill(scan.used.begin(), scan.used.end(), 0);
    scan.used[root] = 1;
    scan.dfs(root, root);
  }
  scan.out.exact = true;
  return scan.out;
}

CycleSpectrum cycle_spectrum_search(const Graph& g, int lo, int hi, std::uint64_t seed) {
  CycleSpectrum out;
  out.exact = false;
  if (g.size() == 0) return out;
  auto colored = bipartition(g);

  std::vector<int> edge_order(g.edges().size());
  for (size_t i = 0; i < edge_order.size(); ++i) edge_order[i] = static_cast<int>(i);
  std::mt19937_64 rng(seed);
  std::shuffle(edge_order.begin(), edge_order.end(), rng);
  const int attempts_per_target = std::min<int>(8, static_cast<int>(edge_order.size()));

  for (int target = std::max(3, lo); target <= hi; ++target) {
    if (colored && target % 2 == 1) continue;
    for (int a = 0; a < attempts_per_target; ++a) {
      auto [u, v] = g.edges()[edge_order[a]];
      // a cycle of length `target` through the edge uv is a (u,v)-path of
      // length target-1 plus the edge; simple paths of length >= 2 never
      // traverse uv itself
      std::optional<Path> p;
      try {
        p = fixed_length_path(g, {}, u, v, target - 1);
      } catch (const parity_error&) {
        break;
      }
      if (p) {
        out.lengths.push_back(target);
        out.witnesses.emplace(target, p->vertices);
        break;
      }
    }
  }
  std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

DoublingCheck doubling_expansion_check(const Graph& g, int size_bound) {
  if (g.order() > 24)
    throw too_large_error("doubling_expansion_check: exact mode is limited to 24 vertices");
  DoublingCheck res;
  res.exact = true;
  res.holds = true;
  const int n = g.order();
  std::vector<std::uint32_t> nbrs(n, 0);
  for (auto [u, v] : g.edges()) {
    nbrs[u] |= (1u << v);
    nbrs[v] |= (1u << u);
  }
  int bound = std::min(size_bound, n);
  std::uint32_t best = 0;
  int best_size = -1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int sz = std::popcount(mask);
    if (sz > bound) continue;
    ++res.sets_checked;
    std::uint32_t nb = 0, rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      nb |= nbrs[v];
      rest &= rest - 1;
    }
    nb &= ~mask;
    if (std::popcount(nb) <= 2 * sz) {
      if (best_size == -1 || sz < best_size || (sz == best_size && mask < best)) {
        best_size = sz;
        best = mask;
      }
    }
  }
  if (best_size != -1) {
    res.holds = false;
    std::vector<int> ids;
    std::uint32_t m = best;
    while (m) {
      ids.push_back(std::countr_zero(m));
      m &= m - 1;
    }
    res.witness = VertexSet(std::move(ids));
  }
  return res;
}

DoublingCheck doubling_expansion_check_sampled(const Graph& g, int size_bound,
                                               std::uint64_t seed, int trials) {
  DoublingCheck res;
  res.exact = false;
  res.holds = true;
  if (g.order() == 0 || size_bound < 1) return res;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    int sz = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(size_bound));
    sz = std::min(sz, g.order());
    VertexSet x;
    while (x.size() < sz) x.insert(static_cast<int>(rng() % g.order()));
    ++res.sets_checked;
    if (external_neighborhood(g, x).size() <= 2 * x.size()) {
      res.holds = false;
      res.witness = x;
      return res;
    }
  }
  return res;
}

std::optional<std::pair<int, int>> consecutive_even_interval(const CycleSpectrum& s) {
  std::vector<int> evens;
  for (int ell : s.lengths)
    if (ell % 2 == 0) evens.push_back(ell);
  if (evens.empty()) return std::nullopt;
  int best_lo = evens[0], best_hi = evens[0];
  int lo = evens[0], hi = evens[0];
  for (size_t i = 1; i < evens.size(); ++i) {
    if (evens[i] == hi + 2) {
      hi = evens[i];
    } else {
      lo = hi = evens[i];
    }
    if (hi - lo > best_hi - best_lo) {
      best_lo = lo;
      best_hi = hi;
    }
  }
  return std::make_pair(best_lo, best_hi);
}

Rat reciprocal_cycle_sum(const CycleSpectrum& s) {
  Rat sum(0);
  for (int ell : s.lengths) sum += Rat(1, ell);
  return sum;
}

RegimeReport even_cycle_regime_report(const Graph& g, int s, int t, double eps1, double eps2,
                                      double epsilon_coef, std::uint64_t seed) {
  if (!bipartition(g)) throw std::invalid_argument("even_cycle_regime_report: host not bipartite");
  if (s < 2 || t < s) throw std::invalid_argument("even_cycle_regime_report: need 2 <= s <= t");
  RegimeReport rep;
  rep.n = g.order();
  rep.d = boost::rational_cast<double>(degree_stats(g).average);
  rep.eta_sq = std::pow(rep.d, static_cast<double>(s) / (s - 1));
  double log_n = std::log2(rep.n);
  rep.dense_threshold = epsilon_coef * std::pow(rep.n, static_cast<double>(s - 1) / s);
  rep.sparse_threshold = std::pow(log_n, 200.0);

  auto plog = [](double x, double e) { return x > 1 ? std::pow(std::log2(x), e) : std::nan(""); };
  if (rep.d > rep.dense_threshold) {
    rep.regime = 1;
    double arg = 15.0 * rep.n / (eps2 * rep.eta_sq);
    rep.predicted_lo = 4.0 / eps1 * plog(arg, 3.0);
    rep.predicted_hi = rep.eta_sq / std::pow(288.0 * std::pow(t, 1.0 / s),
                                             static_cast<double>(s) / (s - 1));
  } else if (rep.d >= rep.sparse_threshold) {
    rep.regime = 2;
    double ratio = rep.n / rep.eta_sq;
    rep.predicted_lo = 300.0 * plog(ratio, 8.0);
    rep.predicted_hi = rep.eta_sq / 100.0 * plog(ratio, 12.0);
  } else {
    rep.regime = 3;
    rep.predicted_lo = plog(rep.n, 7.0);
    rep.predicted_hi = rep.n / plog(rep.n, 12.0);
  }
  rep.predicted_vacuous = !(rep.predicted_lo >= 3 && rep.predicted_lo <= rep.predicted_hi &&
                            rep.predicted_hi <= rep.n);

  CycleSpectrum spec;
  if (g.order() <= 16) {
    spec = cycle_spectrum_exact(g);
  } else {
    int hi = std::min(g.order(), 64);
    spec = cycle_spectrum_search(g, 4, hi, seed);
  }
  rep.spectrum_exact = spec.exact;
  rep.spectrum_lengths = spec.lengths;
  rep.measured = consecutive_even_interval(spec);
  rep.reciprocal_sum = boost::rational_cast<double>(reciprocal_cycle_sum(spec));
  rep.reciprocal_reference =
      (static_cast<double>(s) / (2.0 * (s - 1))) * std::log2(std::max(rep.d, 1.0));
  return rep;
}

} // namespace exg
