#ifndef EXGRAPH_CYCLES_HPP
#define EXGRAPH_CYCLES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "exgraph/graph.hpp"

namespace exg {

/// The set of cycle lengths of a graph, with witness cycles on demand.
/// exact=true only when produced by complete enumeration.
struct CycleSpectrum {
  std::vector<int> lengths; // sorted ascending
  bool exact = false;
  std::map<int, std::vector<int>> witnesses; // length -> one cycle

  bool contains(int ell) const;
};

/// Parity class of a vertex pair in a bipartite host: 0 when u = v, 1 when
/// they lie in different classes (odd path lengths only), 2 when they share
/// a class (even path lengths only).
struct ParityClass {
  int value = 0;
};

/// Throws on non-bipartite hosts and on vertices in different components.
ParityClass parity_class(const Graph& g, int u, int v);

/// Complete simple-cycle length enumeration with canonical-start pruning and
/// full-range early exit. Refuses graphs above 16 vertices.
CycleSpectrum cycle_spectrum_exact(const Graph& g);

/// Witness-driven search: for each target length, attempt a cycle through
/// some edge via an exact-length path. Sound (every reported length has a
/// cached witness), incomplete.
CycleSpectrum cycle_spectrum_search(const Graph& g, int lo, int hi, std::uint64_t seed);

struct DoublingCheck {
  bool holds = false; // exact: proven; sampled: no counterexample found
  bool exact = false;
  std::optional<VertexSet> witness; // a violating X
  std::uint64_t sets_checked = 0;
};

/// Does every X with |X| <= size_bound satisfy |N(X)| > 2|X|? Exact mode is
/// limited to 24 vertices.
DoublingCheck doubling_expansion_check(const Graph& g, int size_bound);
DoublingCheck doubling_expansion_check_sampled(const Graph& g, int size_bound,
                                               std::uint64_t seed, int trials);

/// Longest run of consecutive even members (step 2); earliest on ties.
std::optional<std::pair<int, int>> consecutive_even_interval(const CycleSpectrum& s);

/// Sum of 1/ell over the spectrum, as an exact rational.
Rat reciprocal_cycle_sum(const CycleSpectrum& s);

struct RegimeReport {
  int regime = 3; // 1: dense, 2: middle, 3: sparse
  double n = 0, d = 0, eta_sq = 0;
  double dense_threshold = 0;  // epsilon * n^((s-1)/s)
  double sparse_threshold = 0; // log2^200 n
  double predicted_lo = 0, predicted_hi = 0;
  bool predicted_vacuous = true;
  std::optional<std::pair<int, int>> measured;
  bool spectrum_exact = false;
  std::vector<int> spectrum_lengths;
  double reciprocal_sum = 0;
  double reciprocal_reference = 0; // (s/(2(s-1))) * log2 d, context only
};

/// Classifies a bipartite host into the three density regimes, evaluates the
/// predicted even-cycle interval endpoints as formulas, and measures the
/// actual interval. The prediction is reference data, never an assertion.
RegimeReport even_cycle_regime_report(const Graph& g, int s, int t, double eps1, double eps2,
                                      double epsilon_coef = 1.0, std::uint64_t seed = 0);

} // namespace exg

#endif
