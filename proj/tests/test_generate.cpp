#include "doctest.h"

#include "exgraph/generate.hpp"
#include "exgraph/kst.hpp"
#include "exgraph/oracle.hpp"
#include "support.hpp"

using namespace exg;

TEST_CASE("incidence graphs") {
  Graph hw = pg_incidence(2);
  CHECK(hw.order() == 14);
  CHECK(hw.size() == 21);
  for (int v = 0; v < hw.order(); ++v) CHECK(hw.degree(v) == 3);
  CHECK(shortest_cycle(hw)->size() == 6);
  CHECK(bipartition(hw).has_value());

  Graph pg3 = pg_incidence(3);
  CHECK(pg3.order() == 26);
  CHECK(pg3.size() == 52);
  for (int v = 0; v < pg3.order(); ++v) CHECK(pg3.degree(v) == 4);
  CHECK(shortest_cycle(pg3)->size() == 6);

  for (int q : {4, 5, 7, 8, 9}) {
    Graph g = pg_incidence(q); // generation self-checks regularity and girth
    CHECK(g.order() == 2 * (q * q + q + 1));
  }
  CHECK_THROWS_AS(pg_incidence(6), std::invalid_argument);
}

TEST_CASE("basic generators") {
  CHECK(make_complete(5).size() == 10);
  CHECK(make_cycle(7).size() == 7);
  CHECK(make_path(1).size() == 0);
  CHECK(make_hypercube(3).size() == 12);
  CHECK(make_complete_bipartite(3, 4).size() == 12);
}

TEST_CASE("seeded generators are reproducible") {
  Graph a = random_gnp(20, 0.3, 99);
  Graph b = random_gnp(20, 0.3, 99);
  CHECK(a.edges() == b.edges());
  Graph c = random_gnp(20, 0.3, 100);
  CHECK(a.edges() != c.edges());

  Graph d = random_bipartite(6, 7, 0.5, 4);
  CHECK(bipartition(d).has_value());
}

TEST_CASE("kst-free deletion") {
  Graph g = kst_free_deletion(12, 0.5, 5, 2, 2);
  CHECK(kst_free(g, 2, 2).verdict == KstVerdict::free_of);
  CHECK(oracle::brute_kst(g, 2, 2).verdict == KstVerdict::free_of);

  // free instances always sit under the extremal bound
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    for (auto [s, t] : {std::pair{2, 2}, std::pair{2, 3}}) {
      Graph h = kst_free_deletion(11, 0.45, seed, s, t);
      CHECK(kst_free(h, s, t).verdict == KstVerdict::free_of);
      CHECK(static_cast<double>(h.size()) <= kst_extremal_bound(h.order(), s, t));
    }
  }
}

TEST_CASE("descriptors") {
  CHECK(from_descriptor("complete:5", 0).order() == 5);
  CHECK(from_descriptor("pg-incidence:2", 0).order() == 14);
  CHECK(from_descriptor("random-gnp:12:0.3", 7).order() == 12);
  CHECK(from_descriptor("random-bipartite:4:5:0.5", 7).order() == 9);
  CHECK(from_descriptor("kst-free-deletion:10:0.4:2:2", 3).order() == 10);
  CHECK_THROWS_AS(from_descriptor("bogus:3", 0), std::invalid_argument);
  CHECK_THROWS_AS(from_descriptor("complete", 0), std::invalid_argument);
}

TEST_CASE("corpus support") {
  CHECK(test::connected_graphs_up_to_iso(1).size() == 1);
  CHECK(test::connected_graphs_up_to_iso(2).size() == 1);
  CHECK(test::connected_graphs_up_to_iso(3).size() == 2);
  CHECK(test::connected_graphs_up_to_iso(4).size() == 6);
  CHECK(test::connected_graphs_up_to_iso(5).size() == 21);
  CHECK(test::connected_graphs_up_to_iso(6).size() == 112);
}
