#ifndef EXGRAPH_KST_HPP
#define EXGRAPH_KST_HPP

#include <cstdint>
#include <optional>

#include "exgraph/graph.hpp"

namespace exg {

/// Parameter bundle for the K_{s,t} machinery. eta and m are always derived
/// on demand from d, never stored.
struct KstParams {
  int s = 2;
  int t = 2;
  double d = 1.0;

  double eta() const; // d^(s / (2(s-1)))
  /// m = log2(15 n / (eps2 * eta^2)); throws when the log argument is <= 1.
  double m(double n, double eps2) const;
};

enum class KstVerdict { free_of, witness_found, inconclusive };

struct KstWitness {
  VertexSet s_side; // the s vertices with a large common neighbourhood
  VertexSet t_side; // t vertices of that common neighbourhood
};

struct KstResult {
  KstVerdict verdict = KstVerdict::inconclusive;
  std::optional<KstWitness> witness;
  std::uint64_t sets_checked = 0;
};

/// Exhaustive K_{s,t} search over all s-subsets. Refuses instances with
/// C(n,s) > 1e7.
KstResult kst_free(const Graph& g, int s, int t);

/// Random s-subset probing; witness or inconclusive.
KstResult kst_free_sampled(const Graph& g, int s, int t, std::uint64_t seed, int trials);

/// Oriented check on a bipartite graph: no K_{s,t} with t vertices in
/// side_a and s vertices in side_b.
KstResult kst_free_oriented(const Graph& g, const VertexSet& side_a, const VertexSet& side_b,
                            int s, int t);

/// t^(1/s) * n^(2 - 1/s).
double kst_extremal_bound(double n, int s, int t);

/// (t-s+1)^(1/s) * m * n^(1-1/s) + (s-1) * n^(2-2/s) + (s-2) * m.
double zarankiewicz_bound(double m_side, double n_side, int s, int t);

/// delta * |A|^(1/s) / (e * t).
double kst_neighborhood_lower(double delta, double a_size, int s, int t);

/// The counting inequality |A| C(dbar(A), s) <= t C(|B|, s), with
/// generalized (real) binomials. On instances genuinely free of a K_{s,t}
/// with t vertices in A and s in B this must come back true.
bool kst_counting_check(const Graph& g, const VertexSet& side_a, const VertexSet& side_b,
                        int s, int t);

enum class DensityThreshold { quarter, half };

struct RobustDensityResult {
  Rat average;         // d(G - W), exact
  bool meets_threshold;
};

/// d(G - W) compared against d(G)/4 or d(G)/2, all in exact rationals.
RobustDensityResult robust_density(const Graph& g, const VertexSet& w, DensityThreshold thr);

} // namespace exg

#endif
