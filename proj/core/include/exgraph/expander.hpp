#ifndef EXGRAPH_EXPANDER_HPP
#define EXGRAPH_EXPANDER_HPP

#include <cstdint>
#include <optional>

#include "exgraph/graph.hpp"

namespace exg {

/// Parameters of the sublinear expansion function. Logarithms are base 2
/// throughout; the base only rescales eps1 and fixing it keeps certificates
/// reproducible.
struct ExpanderParams {
  double eps1 = 0.5;
  double k = 2.0;
};

/// eps(x) = 0 for x < k/5, eps1 / log2^2(15x/k) otherwise.
double epsilon(double x, const ExpanderParams& p);

/// True iff |N(X)| >= eps(|X|) * |X|. X must lie in the size window
/// [k/2, |G|/2]; outside it the question is not applicable and throws.
bool check_expansion_witness(const Graph& g, const ExpanderParams& p, const VertexSet& x);

enum class CertMode { exact, sampled };
enum class CertVerdict { expander, counterexample, inconclusive };

struct ExpansionCertificate {
  CertMode mode = CertMode::exact;
  CertVerdict verdict = CertVerdict::inconclusive;
  std::optional<VertexSet> witness; // violating set when verdict is counterexample
  std::uint64_t sets_checked = 0;
  double eps1 = 0;
  double k = 0;
};

struct SampleOptions {
  std::uint64_t seed = 0;
  int trials = 64;
};

/// Exhaustive scan of every subset in the Def-window. Exponential: refuses
/// graphs with more than 24 vertices.
ExpansionCertificate certify_expander(const Graph& g, const ExpanderParams& p);

/// Seeded randomized local search for low-expansion sets. Finds
/// counterexamples or reports inconclusive; never claims "expander".
ExpansionCertificate certify_expander_sampled(const Graph& g, const ExpanderParams& p,
                                              const SampleOptions& opts);

struct ExtractResult {
  Graph subgraph;          // relabelled induced subgraph
  VertexSet vertices;      // original ids of the subgraph
  ExpansionCertificate certificate;
};

/// Constructive analogue of the expander-subgraph theorem: returns an
/// induced subgraph H with d(H) >= d(G)/2 and delta(H) >= d(H)/2, both
/// checked exactly. Expansion is certified exactly below the exhaustive
/// cutoff and by sampling above it; the certificate records which.
ExtractResult extract_expander(const Graph& g, double k, double eps1);

/// Spanning bipartite subgraph with e(H) >= e(G)/2, by deterministic
/// local-search max-cut. Already-bipartite inputs pass through unchanged.
Graph bipartite_half(const Graph& g);

/// Lexicographically smallest shortest path from A to B in G - avoid, if its
/// length is at most max_len. Interior vertices never touch A or B.
std::optional<Path> connect_sets(const Graph& g, const VertexSet& a, const VertexSet& b,
                                 const VertexSet& avoid, int max_len);

} // namespace exg

#endif
