#include "doctest.h"

#include <random>

#include "exgraph/gadgets.hpp"
#include "exgraph/oracle.hpp"
#include "exgraph/subdivision.hpp"
#include "support.hpp"

using namespace exg;

// The exact engines implemented twice over (bitmask DP / budgeted DFS on one
// side, the oracle's plain DFS on the other) must agree everywhere, not just
// on builder outputs.

TEST_CASE("path-length engines agree on random instances") {
  std::mt19937_64 rng(0xD1FF);
  int instances = 0;
  for (const auto& g : test::random_corpus(60, 5, 10, 0xD1FF)) {
    if (g.order() < 4) continue;
    int v1 = static_cast<int>(rng() % g.order());
    int v2 = static_cast<int>(rng() % g.order());
    if (v1 == v2) continue;
    std::vector<int> rest;
    for (int v = 0; v < g.order(); ++v)
      if (v != v1 && v != v2 && rng() % 3 != 0) rest.push_back(v);
    VertexSet center(rest);
    CHECK(adjuster_path_lengths(g, v1, v2, center) ==
          oracle::brute_adjuster_lengths(g, v1, v2, center));
    ++instances;
  }
  CHECK(instances > 40);
}

TEST_CASE("exact routing is complete against the oracle length sets") {
  std::mt19937_64 rng(0xFACE);
  for (const auto& g : test::random_corpus(40, 5, 9, 0xFACE)) {
    if (g.order() < 3) continue;
    int v1 = static_cast<int>(rng() % g.order());
    int v2 = static_cast<int>(rng() % g.order());
    if (v1 == v2) continue;
    VertexSet others;
    for (int v = 0; v < g.order(); ++v)
      if (v != v1 && v != v2) others.insert(v);
    auto realizable = oracle::brute_adjuster_lengths(g, v1, v2, others);
    for (int ell = 1; ell < g.order(); ++ell) {
      std::optional<Path> p;
      bool parity_blocked = false;
      try {
        p = fixed_length_path(g, {}, v1, v2, ell);
      } catch (const parity_error&) {
        parity_blocked = true;
      }
      if (parity_blocked) {
        CHECK(!realizable.count(ell));
      } else {
        CHECK(p.has_value() == (realizable.count(ell) == 1));
        if (p) {
          CHECK(p->length() == ell);
          CHECK(path_in_graph(g, *p));
        }
      }
    }
  }
}
