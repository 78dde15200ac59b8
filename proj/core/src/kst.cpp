#include "exgraph/kst.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace exg {

double KstParams::eta() const {
  return std::pow(d, static_cast<double>(s) / (2.0 * (s - 1)));
}

double KstParams::m(double n, double eps2) const {
  double e2 = eta();
  double arg = 15.0 * n / (eps2 * e2 * e2);
  if (arg <= 1.0) throw std::domain_error("KstParams::m: log argument <= 1");
  return std::log2(arg);
}

namespace {

// Visits every size-k subset of 0..n-1 in lexicographic order until the
// callback returns false. Returns the number of subsets visited.
template <typename F>
std::uint64_t for_each_combination(int n, int k, F&& f) {
  if (k > n || k <= 0) return 0;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!f(idx)) return visited;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return visited;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binom_count(long long n, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / (i + 1);
  return r;
}

// Common neighbourhood of the given vertices, optionally restricted.
std::vector<int> common_neighborhood(const Graph& g, const std::vector<int>& verts,
                                     const std::vector<char>* restrict_to) {
  std::vector<int> common = g.neighbors(verts[0]);
  for (size_t i = 1; i < verts.size() && !common.empty(); ++i) {
    const auto& nb = g.neighbors(verts[i]);
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                          std::back_inserter(next));
    common = std::move(next);
  }
  if (restrict_to) {
    std::vector<int> filtered;
    for (int v : common)
      if ((*restrict_to)[v]) filtered.push_back(v);
    common = std::move(filtered);
  }
  return common;
}

KstResult scan_s_subsets(const Graph& g, const std::vector<int>& pool, int s, int t,
                         const std::vector<char>* t_pool) {
  KstResult res;
  res.verdict = KstVerdict::free_of;
  res.sets_checked = for_each_combination(
      static_cast<int>(pool.size()), s, [&](const std::vector<int>& idx) {
        std::vector<int> verts(s);
        for (int i = 0; i < s; ++i) verts[i] = pool[idx[i]];
        auto common = common_neighborhood(g, verts, t_pool);
        // vertices of the s-side must not double as t-side members
        std::vector<int> usable;
        for (int v : common)
          if (std::find(verts.begin(), verts.end(), v) == verts.end()) usable.push_back(v);
        if (static_cast<int>(usable.size()) >= t) {
          usable.resize(t);
          res.verdict = KstVerdict::witness_found;
          res.witness = KstWitness{VertexSet(verts), VertexSet(usable)};
          return false;
        }
        return true;
      });
  return res;
}

} // namespace

KstResult kst_free(const Graph& g, int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("kst_free: need 1 <= s <= t");
  if (binom_count(g.order(), s) > 1e7)
    throw too_large_error("kst_free: C(n,s) exceeds the exhaustive budget");
  std::vector<int> pool(g.order());
  for (int v = 0; v < g.order(); ++v) pool[v] = v;
  return scan_s_subsets(g, pool, s, t, nullptr);
}

KstResult kst_free_sampled(const Graph& g, int s, int t, std::uint64_t seed, int trials) {
  if (s < 1 || t < s) throw std::invalid_argument("kst_free_sampled: need 1 <= s <= t");
  KstResult res;
  res.verdict = KstVerdict::inconclusive;
  if (g.order() < s) return res;
  std::mt19937_64 rng(seed);
  std::vector<int> verts(s);
  for (int trial = 0; trial < trials; ++trial) {
    // random distinct s vertices
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < s) {
      int v = static_cast<int>(rng() % g.order());
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
    }
    ++res.sets_checked;
    auto common = common_neighborhood(g, chosen, nullptr);
    std::vector<int> usable;
    for (int v : common)
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) usable.push_back(v);
    if (static_cast<int>(usable.size()) >= t) {
      usable.resize(t);
      std::sort(chosen.begin(), chosen.end());
      res.verdict = KstVerdict::witness_found;
      res.witness = KstWitness{VertexSet(chosen), VertexSet(usable)};
      return res;
    }
  }
  return res;
}

KstResult kst_free_oriented(const Graph& g, const VertexSet& side_a, const VertexSet& side_b,
                            int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("kst_free_oriented: bad parameters");
  if (binom_count(side_b.size(), s) > 1e7)
    throw too_large_error("kst_free_oriented: C(|B|,s) exceeds the exhaustive budget");
  std::vector<char> in_a(g.order(), 0);
  for (int v : side_a) in_a[v] = 1;
  // a witness here is s vertices of B with t common neighbours inside A
  KstResult res;
  res.verdict = KstVerdict::free_of;
  res.sets_checked = for_each_combination(
      side_b.size(), s, [&](const std::vector<int>& idx) {
        std::vector<int> verts(s);
        for (int i = 0; i < s; ++i) verts[i] = side_b.ids()[idx[i]];
        auto common = common_neighborhood(g, verts, &in_a);
        if (static_cast<int>(common.size()) >= t) {
          common.resize(t);
          res.verdict = KstVerdict::witness_found;
          res.witness = KstWitness{VertexSet(verts), VertexSet(common)};
          return false;
        }
        return true;
      });
  return res;
}

double kst_extremal_bound(double n, int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("kst_extremal_bound: need 1 <= s <= t");
  return std::pow(t, 1.0 / s) * std::pow(n, 2.0 - 1.0 / s);
}

double zarankiewicz_bound(double m_side, double n_side, int s, int t) {
  if (s < 2 || t < s) throw std::invalid_argument("zarankiewicz_bound: need 2 <= s <= t");
  if (m_side < s || n_side < t)
    throw std::invalid_argument("zarankiewicz_bound: need m >= s and n >= t");
  return std::pow(t - s + 1, 1.0 / s) * m_side * std::pow(n_side, 1.0 - 1.0 / s) +
         (s - 1) * std::pow(n_side, 2.0 - 2.0 / s) + (s - 2) * m_side;
}

double kst_neighborhood_lower(double delta, double a_size, int s, int t) {
  if (a_size < 1 || delta < 0)
    throw std::invalid_argument("kst_neighborhood_lower: bad parameters");
  return delta * std::pow(a_size, 1.0 / s) / (std::exp(1.0) * t);
}

namespace {

// Generalized binomial: the convex extension of x(x-1)...(x-s+1)/s!, zero
// below x = s-1. The raw polynomial flips sign there and would break the
// Jensen step the counting inequality rests on.
double real_binomial(double x, int s) {
  if (x < s - 1) return 0.0;
  double num = 1, den = 1;
  for (int i = 0; i < s; ++i) {
    num *= (x - i);
    den *= (i + 1);
  }
  return num / den;
}

} // namespace

bool kst_counting_check(const Graph& g, const VertexSet& side_a, const VertexSet& side_b,
                        int s, int t) {
  if (side_a.empty()) return true;
  long long deg_sum = 0;
  for (int v : side_a) deg_sum += g.degree(v);
  double dbar = static_cast<double>(deg_sum) / side_a.size();
  double lhs = side_a.size() * real_binomial(dbar, s);
  double rhs = static_cast<double>(t) * real_binomial(side_b.size(), s);
  return lhs <= rhs;
}

RobustDensityResult robust_density(const Graph& g, const VertexSet& w, DensityThreshold thr) {
  if (w.size() >= g.order()) throw std::invalid_argument("robust_density: W must be proper");
  std::vector<int> rest;
  for (int v = 0; v < g.order(); ++v)
    if (!w.contains(v)) rest.push_back(v);
  auto sub = induced_subgraph(g, VertexSet(rest));
  Rat avg = degree_stats(sub.graph).average;
  Rat factor = thr == DensityThreshold::quarter ? Rat(1, 4) : Rat(1, 2);
  Rat target = degree_stats(g).average * factor;
  return {avg, avg >= target};
}

} // namespace exg
