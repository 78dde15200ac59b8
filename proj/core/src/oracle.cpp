#include "exgraph/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace exg::oracle {

namespace {

void cycle_dfs(const Graph& g, int root, int cur, std::vector<char>& used,
               std::vector<int>& path, std::set<int>& lengths,
               std::map<int, std::vector<int>>& witnesses) {
  for (int w : g.neighbors(cur)) {
    if (w == root && path.size() >= 3 && path[1] < path.back()) {
      int len = static_cast<int>(path.size());
      if (lengths.insert(len).second) witnesses.emplace(len, path);
    }
    if (w <= root || used[w]) continue;
    used[w] = 1;
    path.push_back(w);
    cycle_dfs(g, root, w, used, path, lengths, witnesses);
    path.pop_back();
    used[w] = 0;
  }
}

} // namespace

CycleSpectrum brute_spectrum(const Graph& g) {
  if (g.order() > 14) throw too_large_error("brute_spectrum: limited to 14 vertices");
  std::set<int> lengths;
  std::map<int, std::vector<int>> witnesses;
  for (int root = 0; root < g.order(); ++root) {
    std::vector<char> used(g.order(), 0);
    std::vector<int> path{root};
    used[root] = 1;
    cycle_dfs(g, root, root, used, path, lengths, witnesses);
  }
  CycleSpectrum out;
  out.exact = true;
  out.lengths.assign(lengths.begin(), lengths.end());
  out.witnesses = std::move(witnesses);
  return out;
}

ExpansionCertificate brute_expansion(const Graph& g, const ExpanderParams& p) {
  if (g.order() > 12) throw too_large_error("brute_expansion: limited to 12 vertices");
  ExpansionCertificate cert;
  cert.mode = CertMode::exact;
  cert.eps1 = p.eps1;
  cert.k = p.k;
  cert.verdict = CertVerdict::expander;
  const int n = g.order();
  // self-contained re-statement of the expansion demand, sharing nothing
  // with the certified implementation
  auto demand = [&](double x) {
    if (x < p.k / 5.0) return 0.0;
    double lg = std::log2(15.0 * x / p.k);
    return p.eps1 / (lg * lg) * x;
  };
  std::optional<VertexSet> best;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    double sz = static_cast<double>(members.size());
    if (sz < p.k / 2.0 || sz > n / 2.0) continue;
    ++cert.sets_checked;
    int outside_neighbors = 0;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) continue;
      for (int u : g.neighbors(v))
        if (mask & (1u << u)) {
          ++outside_neighbors;
          break;
        }
    }
    if (outside_neighbors < demand(sz)) {
      VertexSet x(members);
      if (!best || x.size() < best->size() ||
          (x.size() == best->size() && x.ids() < best->ids()))
        best = x;
    }
  }
  if (best) {
    cert.verdict = CertVerdict::counterexample;
    cert.witness = *best;
  }
  return cert;
}

namespace {

bool kst_combo(const Graph& g, std::vector<int>& chosen, int next, int s, int t,
               std::uint64_t& checked, KstResult& res) {
  if (static_cast<int>(chosen.size()) == s) {
    ++checked;
    std::vector<int> common;
    for (int v = 0; v < g.order(); ++v) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      bool all = true;
      for (int u : chosen)
        if (!g.adjacent(u, v)) {
          all = false;
          break;
        }
      if (all) common.push_back(v);
    }
    if (static_cast<int>(common.size()) >= t) {
      common.resize(t);
      res.verdict = KstVerdict::witness_found;
      res.witness = KstWitness{VertexSet(chosen), VertexSet(common)};
      return true;
    }
    return false;
  }
  for (int v = next; v < g.order(); ++v) {
    chosen.push_back(v);
    if (kst_combo(g, chosen, v + 1, s, t, checked, res)) return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

KstResult brute_kst(const Graph& g, int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("brute_kst: need 1 <= s <= t");
  double combos = 1;
  for (int i = 0; i < s; ++i) combos = combos * (g.order() - i) / (i + 1);
  if (combos > 2e6) throw too_large_error("brute_kst: too many s-subsets");
  KstResult res;
  res.verdict = KstVerdict::free_of;
  std::vector<int> chosen;
  kst_combo(g, chosen, 0, s, t, res.sets_checked, res);
  return res;
}

namespace {

bool place_paths(const Graph& g, const std::vector<int>& branch, int ell, size_t pair_idx,
                 const std::vector<std::pair<int, int>>& pairs, std::vector<char>& used,
                 std::vector<Path>& out) {
  if (pair_idx == pairs.size()) return true;
  auto [i, j] = pairs[pair_idx];
  int a = branch[i], b = branch[j];
  // enumerate all (a,b)-paths of length ell whose interior avoids used marks
  std::vector<int> seq{a};
  std::vector<char> on_path(g.order(), 0);
  on_path[a] = 1;
  bool found = false;
  std::function<void(int)> walk = [&](int cur) {
    if (found) return;
    int rem = ell - (static_cast<int>(seq.size()) - 1);
    if (rem == 0) {
      if (cur != b) return;
      for (int v : seq)
        if (v != a && v != b && used[v]) return;
      out[pair_idx] = Path{seq};
      for (size_t q = 1; q + 1 < seq.size(); ++q) used[seq[q]] = 1;
      if (place_paths(g, branch, ell, pair_idx + 1, pairs, used, out)) {
        found = true;
        return;
      }
      for (size_t q = 1; q + 1 < seq.size(); ++q) used[seq[q]] = 0;
      return;
    }
    for (int w : g.neighbors(cur)) {
      if (found) return;
      if (on_path[w]) continue;
      if (w == b && rem != 1) continue;
      if (w != b && used[w]) continue;
      on_path[w] = 1;
      seq.push_back(w);
      walk(w);
      seq.pop_back();
      on_path[w] = 0;
    }
  };
  walk(a);
  return found;
}

} // namespace

std::optional<SubdivisionCertificate> brute_subdivision(const Graph& g, int k, int ell) {
  if (g.order() > 8 || k > 4 || ell > 2)
    throw too_large_error("brute_subdivision: limited to n <= 8, k <= 4, ell <= 2");
  if (k < 2 || ell < 1) throw std::invalid_argument("brute_subdivision: bad parameters");
  if (k > g.order()) return std::nullopt;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);

  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> branch(idx.begin(), idx.end());
    std::vector<char> used(g.order(), 0);
    for (int v : branch) used[v] = 1;
    std::vector<Path> out(pairs.size());
    if (place_paths(g, branch, ell, 0, pairs, used, out)) {
      SubdivisionCertificate cert;
      cert.k = k;
      cert.ell = ell;
      cert.branch = branch;
      cert.paths = std::move(out);
      return cert;
    }
    int i = k - 1;
    while (i >= 0 && idx[i] == g.order() - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

void length_dfs(const Graph& g, const std::vector<char>& allowed, int cur, int goal, int len,
                std::vector<char>& used, std::set<int>& lengths) {
  if (cur == goal) {
    lengths.insert(len);
    return;
  }
  for (int w : g.neighbors(cur)) {
    if (!allowed[w] || used[w]) continue;
    used[w] = 1;
    length_dfs(g, allowed, w, goal, len + 1, used, lengths);
    used[w] = 0;
  }
}

} // namespace

std::set<int> brute_adjuster_lengths(const Graph& g, int v1, int v2, const VertexSet& a) {
  if (a.size() > 12) throw too_large_error("brute_adjuster_lengths: |A| limited to 12");
  std::vector<char> allowed(g.order(), 0);
  for (int v : a) allowed[v] = 1;
  allowed[v1] = allowed[v2] = 1;
  std::set<int> lengths;
  std::vector<char> used(g.order(), 0);
  used[v1] = 1;
  length_dfs(g, allowed, v1, v2, 0, used, lengths);
  return lengths;
}

} // namespace exg::oracle
