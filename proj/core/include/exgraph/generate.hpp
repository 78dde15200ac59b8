#ifndef EXGRAPH_GENERATE_HPP
#define EXGRAPH_GENERATE_HPP

#include <cstdint>
#include <string>

#include "exgraph/graph.hpp"

namespace exg {

Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_hypercube(int dim);
Graph make_complete_bipartite(int a, int b);

Graph random_gnp(int n, double p, std::uint64_t seed);
Graph random_bipartite(int a, int b, double p, std::uint64_t seed);

/// Point-line incidence graph of the projective plane of order q:
/// bipartite, (q+1)-regular, 2(q^2+q+1) vertices, girth 6. Supported q:
/// 2, 3, 4, 5, 7, 8, 9 (field tables are embedded constants). The three
/// structural properties are verified at generation time.
Graph pg_incidence(int q);

/// G(n,p) made K_{s,t}-free by repeatedly deleting one edge of each witness
/// found (exhaustive search when feasible, sampled otherwise).
Graph kst_free_deletion(int n, double p, std::uint64_t seed, int s, int t);

/// Parses "kind:arg1:arg2..." descriptors, e.g. "pg-incidence:2",
/// "complete:5", "random-gnp:12:0.3". Seed-taking kinds read `seed`.
Graph from_descriptor(const std::string& descriptor, std::uint64_t seed);

} // namespace exg

#endif
