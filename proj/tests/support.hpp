#ifndef EXGRAPH_TEST_SUPPORT_HPP
#define EXGRAPH_TEST_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "exgraph/graph.hpp"

// Shared corpus machinery for unit and acceptance tests.
namespace exg::test {

/// Every connected graph on exactly n vertices, one per isomorphism class.
/// Grown by vertex extension with canonical-form deduplication; n <= 7.
std::vector<Graph> connected_graphs_up_to_iso(int n);

/// Seeded G(n,p) corpus: `count` graphs with n in [n_lo, n_hi] and p drawn
/// from a few fixed densities.
std::vector<Graph> random_corpus(int count, int n_lo, int n_hi, std::uint64_t seed);

/// Chain of even-cycle gadgets with expansion bushes at the two core
/// positions and short bridges between consecutive gadgets; the shape the
/// adjuster builders are designed to consume.
struct GadgetChain {
  Graph graph;
  int gadgets = 0;
  int bush_len = 1;   // expansion body size is bush_len + 1
  int cycle_len = 4;
};

GadgetChain gadget_chain(std::uint64_t seed);

/// Standard fixtures.
Graph petersen();
Graph heawood(); // pg-incidence(2)

} // namespace exg::test

#endif
