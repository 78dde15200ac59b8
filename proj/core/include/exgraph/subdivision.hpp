#ifndef EXGRAPH_SUBDIVISION_HPP
#define EXGRAPH_SUBDIVISION_HPP

#include <optional>
#include <utility>
#include <vector>

#include "exgraph/gadgets.hpp"
#include "exgraph/graph.hpp"

namespace exg {

/// Branch vertices plus one path of length exactly ell per branch pair,
/// listed in (i,j), i<j lexicographic order.
struct SubdivisionCertificate {
  int k = 0;
  int ell = 0;
  std::vector<int> branch;
  std::vector<Path> paths;

  static int pair_index(int i, int j, int k);
};

Verdict validate_subdivision(const Graph& g, const SubdivisionCertificate& cert);

/// Knobs for the adjuster-backed length matching used on graphs too large
/// for the exact search. greedy_nodes bounds the fallback goal-directed
/// search; 0 disables it.
struct AdjusterBudget {
  int d = 2;
  int m = 4;
  int r = 3;
  long long greedy_nodes = 2'000'000;
};

/// A (v1,v2)-path of length exactly ell in G - W, or nullopt. Exact bitmask
/// search on small residual graphs; adjuster-based routing above that (sound
/// but incomplete). In bipartite hosts a parity-impossible ell throws
/// parity_error instead of returning nullopt.
std::optional<Path> fixed_length_path(const Graph& g, const VertexSet& w, int v1, int v2,
                                      int ell, const AdjusterBudget& budget = {});

/// Two vertex-disjoint paths, one from each U_i to one of the two expansion
/// anchors, with combined length in [ell, ell + slack].
std::optional<std::pair<Path, Path>> paired_paths(const Graph& g, const VertexSet& w,
                                                  const VertexSet& u1, const VertexSet& u2,
                                                  const Expansion& f3, const Expansion& f4,
                                                  int ell, int slack,
                                                  const AdjusterBudget& budget = {});

enum class SubdivisionStrategy { auto_mode, highdeg_cores, unit_cores };

struct SubdivisionOptions {
  SubdivisionStrategy strategy = SubdivisionStrategy::auto_mode;
  long long backtrack_budget = 200'000; // search nodes across the pair assignment
  int paths_per_pair = 64;              // alternatives kept per branch pair
  double retire_fraction = 0.5;         // reserved-neighbourhood consumption limit
  int branch_swaps = 4;                 // retired-vertex replacements before giving up
  // a neighbour joins a branch vertex's reserved surface only if its
  // co-degree into the branch set stays within this bound; -1 disables the
  // filter (it is vacuous at small scale)
  int codegree_threshold = -1;
  AdjusterBudget adjuster{};
  int unit_h1 = 2, unit_h2 = 1, unit_h3 = 2; // unit shape for unit-cores
};

/// Balanced clique-subdivision driver. Heuristic (greedy selection, exact
/// path matching, bounded backtracking) and sound-but-incomplete in general;
/// on tiny instances it falls back to exhaustive search, which makes it
/// complete at oracle scale. Output is always validated before return.
std::optional<SubdivisionCertificate> find_balanced_subdivision(
    const Graph& g, int k, int ell, const SubdivisionOptions& opts = {});

} // namespace exg

#endif
