#ifndef EXGRAPH_ORACLE_HPP
#define EXGRAPH_ORACLE_HPP

#include <optional>
#include <set>

#include "exgraph/cycles.hpp"
#include "exgraph/expander.hpp"
#include "exgraph/graph.hpp"
#include "exgraph/kst.hpp"
#include "exgraph/subdivision.hpp"

// Reference implementations, deliberately plain: unpruned backtracking and
// straight set arithmetic, sharing no search machinery with the modules they
// check. They are the trust anchor of the test suite; keep them obvious.
namespace exg::oracle {

/// All simple-cycle lengths by raw DFS enumeration. Limited to 14 vertices.
CycleSpectrum brute_spectrum(const Graph& g);

/// Full power-set scan of the expansion definition window. Limited to 12
/// vertices.
ExpansionCertificate brute_expansion(const Graph& g, const ExpanderParams& p);

/// Every s-subset and its common neighbourhood, no shortcuts.
KstResult brute_kst(const Graph& g, int s, int t);

/// Exhaustive branch sets and disjoint path systems. Limited to n <= 8,
/// k <= 4, ell <= 2.
std::optional<SubdivisionCertificate> brute_subdivision(const Graph& g, int k, int ell);

/// Lengths of all simple (v1,v2)-paths inside G[A + {v1,v2}]. |A| <= 12.
std::set<int> brute_adjuster_lengths(const Graph& g, int v1, int v2, const VertexSet& a);

} // namespace exg::oracle

#endif
