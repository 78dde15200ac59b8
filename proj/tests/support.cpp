#include "support.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "exgraph/generate.hpp"

namespace exg::test {

namespace {

using EdgeMask = std::uint32_t; // up to n=7: 21 edge slots

int edge_slot(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

EdgeMask canonical_mask(EdgeMask mask, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeMask best = ~EdgeMask{0};
  do {
    EdgeMask remapped = 0;
    for (int i = 0; i < n && remapped <= best; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask & (EdgeMask{1} << edge_slot(i, j, n)))
          remapped |= EdgeMask{1} << edge_slot(perm[i], perm[j], n);
    best = std::min(best, remapped);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph mask_to_graph(EdgeMask mask, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mask & (EdgeMask{1} << edge_slot(i, j, n))) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

} // namespace

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("connected_graphs_up_to_iso: supported for 1 <= n <= 7");
  // level-wise: every connected k-graph extends some connected (k-1)-graph
  // by one vertex with a nonempty neighbourhood
  std::set<EdgeMask> level{0}; // n = 1: the single vertex
  for (int k = 2; k <= n; ++k) {
    std::set<EdgeMask> next;
    for (EdgeMask base : level) {
      for (unsigned nb = 1; nb < (1u << (k - 1)); ++nb) {
        EdgeMask mask = 0;
        // re-embed the base graph into the k-vertex slot table
        for (int i = 0; i < k - 1; ++i)
          for (int j = i + 1; j < k - 1; ++j)
            if (base & (EdgeMask{1} << edge_slot(i, j, k - 1)))
              mask |= EdgeMask{1} << edge_slot(i, j, k);
        for (int i = 0; i < k - 1; ++i)
          if (nb & (1u << i)) mask |= EdgeMask{1} << edge_slot(i, k - 1, k);
        next.insert(canonical_mask(mask, k));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (EdgeMask mask : level) out.push_back(mask_to_graph(mask, n));
  return out;
}

std::vector<Graph> random_corpus(int count, int n_lo, int n_hi, std::uint64_t seed) {
  std::vector<Graph> out;
  std::mt19937_64 rng(seed);
  const double densities[] = {0.15, 0.25, 0.35, 0.5};
  for (int i = 0; i < count; ++i) {
    int n = n_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(n_hi - n_lo + 1));
    double p = densities[rng() % 4];
    out.push_back(random_gnp(n, p, rng()));
  }
  return out;
}

GadgetChain gadget_chain(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GadgetChain chain;
  chain.gadgets = 1 + static_cast<int>(rng() % 3);
  chain.bush_len = 1 + static_cast<int>(rng() % 2);
  chain.cycle_len = (rng() % 2 == 0) ? 4 : 6;
  const int bridge_len = 1 + static_cast<int>(rng() % 2);

  std::vector<std::pair<int, int>> edges;
  int next_id = 0;
  auto fresh = [&] { return next_id++; };

  struct Gadget {
    int tip_a = -1, tip_b = -1;
  };
  std::vector<Gadget> built;
  for (int gi = 0; gi < chain.gadgets; ++gi) {
    // cycle with consecutive ids: canonical form starts at its minimum
    std::vector<int> cyc(chain.cycle_len);
    for (int& v : cyc) v = fresh();
    for (size_t i = 0; i < cyc.size(); ++i)
      edges.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    int r = chain.cycle_len / 2;
    // bushes (paths) at the two core positions, supplying the expansions
    auto grow_bush = [&](int root) {
      int prev = root;
      for (int step = 0; step < chain.bush_len; ++step) {
        int v = fresh();
        edges.emplace_back(prev, v);
        prev = v;
      }
      return prev; // the tip
    };
    Gadget gad;
    gad.tip_a = grow_bush(cyc[0]);
    gad.tip_b = grow_bush(cyc[r - 1]);
    built.push_back(gad);
  }
  for (int gi = 0; gi + 1 < chain.gadgets; ++gi) {
    int prev = built[gi].tip_b;
    for (int step = 0; step < bridge_len - 1; ++step) {
      int v = fresh();
      edges.emplace_back(prev, v);
      prev = v;
    }
    edges.emplace_back(prev, built[gi + 1].tip_a);
  }
  chain.graph = Graph::from_edges(next_id, edges);
  return chain;
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

Graph heawood() { return pg_incidence(2); }

} // namespace exg::test
