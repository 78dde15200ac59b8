#include "doctest.h"

#include "exgraph/cycles.hpp"
#include "exgraph/generate.hpp"
#include "exgraph/oracle.hpp"
#include "support.hpp"

using namespace exg;

TEST_CASE("parity classes") {
  Graph c6 = make_cycle(6);
  CHECK(parity_class(c6, 2, 2).value == 0);
  CHECK(parity_class(c6, 0, 1).value == 1);
  CHECK(parity_class(c6, 0, 2).value == 2);
  CHECK_THROWS_AS(parity_class(make_complete(3), 0, 1), std::domain_error);

  Graph two_c4 = Graph::parse("8 8\n0 1\n1 2\n2 3\n3 0\n4 5\n5 6\n6 7\n7 4");
  CHECK_THROWS_AS(parity_class(two_c4, 0, 4), std::domain_error);
}

TEST_CASE("exact spectrum") {
  auto k4 = cycle_spectrum_exact(make_complete(4));
  CHECK(k4.lengths == std::vector<int>{3, 4});
  CHECK(k4.exact);

  auto c6 = cycle_spectrum_exact(make_cycle(6));
  CHECK(c6.lengths == std::vector<int>{6});

  auto pet = cycle_spectrum_exact(test::petersen());
  CHECK(pet.lengths == std::vector<int>{5, 6, 8, 9});

  CHECK_THROWS_AS(cycle_spectrum_exact(random_gnp(17, 0.5, 1)), too_large_error);

  // witnesses really are cycles of the claimed length
  for (auto& [len, cyc] : pet.witnesses) {
    CHECK(static_cast<int>(cyc.size()) == len);
    for (size_t i = 0; i < cyc.size(); ++i)
      CHECK(test::petersen().adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
  }
}

TEST_CASE("spectrum search") {
  Graph hw = test::heawood();
  auto found = cycle_spectrum_search(hw, 6, 14, 3);
  auto exact = cycle_spectrum_exact(hw);
  CHECK(found.lengths == exact.lengths); // every even length 6..14 is hit
  CHECK(!found.exact);

  auto tree = cycle_spectrum_search(make_path(9), 3, 9, 0);
  CHECK(tree.lengths.empty());

  auto c8 = cycle_spectrum_search(make_cycle(8), 6, 6, 0);
  CHECK(c8.lengths.empty());

  // soundness: search never reports a length the exact scan lacks
  for (const auto& g : test::random_corpus(10, 6, 12, 77)) {
    auto s = cycle_spectrum_search(g, 3, g.order(), 5);
    auto e = cycle_spectrum_exact(g);
    for (int len : s.lengths) CHECK(e.contains(len));
  }
}

TEST_CASE("doubling expansion") {
  auto k10 = doubling_expansion_check(make_complete(10), 3);
  CHECK(k10.holds);
  CHECK(k10.exact);

  auto c6 = doubling_expansion_check(make_cycle(6), 1);
  REQUIRE(!c6.holds);
  REQUIRE(c6.witness.has_value());
  CHECK(c6.witness->size() == 1);

  auto star = doubling_expansion_check(make_complete_bipartite(1, 9), 1);
  CHECK(!star.holds); // a leaf has one neighbour

  CHECK_THROWS_AS(doubling_expansion_check(random_gnp(25, 0.5, 3), 2), too_large_error);

  // exact agrees with a subset-enumeration oracle
  auto doubling_ref = [](const Graph& g, int bound) {
    for (unsigned mask = 1; mask < (1u << g.order()); ++mask) {
      std::vector<int> mem;
      for (int v = 0; v < g.order(); ++v)
        if (mask & (1u << v)) mem.push_back(v);
      if (static_cast<int>(mem.size()) > bound) continue;
      VertexSet x(mem);
      if (external_neighborhood(g, x).size() <= 2 * x.size()) return false;
    }
    return true;
  };
  for (const auto& g : test::connected_graphs_up_to_iso(5))
    for (int bound = 1; bound <= 2; ++bound)
      CHECK(doubling_expansion_check(g, bound).holds == doubling_ref(g, bound));
  for (const auto& g : test::random_corpus(25, 6, 10, 555))
    for (int bound = 1; bound <= 3; ++bound)
      CHECK(doubling_expansion_check(g, bound).holds == doubling_ref(g, bound));

  auto sampled = doubling_expansion_check_sampled(make_cycle(30), 2, 9, 200);
  CHECK(!sampled.holds);
}

TEST_CASE("doubling expansion predicts even runs on the curated corpus") {
  // where the doubling property holds up to bound f, the measured
  // consecutive-even run reaches min(3f, spectrum width)
  struct Case {
    Graph g;
    int f;
  };
  std::vector<Case> cases;
  cases.push_back({make_complete(10), 3});
  cases.push_back({make_hypercube(3), 1});
  cases.push_back({make_complete_bipartite(4, 4), 1});
  cases.push_back({test::heawood(), 1});
  for (const auto& [g, f] : cases) {
    REQUIRE(doubling_expansion_check(g, f).holds);
    auto spec = cycle_spectrum_exact(g);
    auto run = consecutive_even_interval(spec);
    REQUIRE(run.has_value());
    int run_len = (run->second - run->first) / 2 + 1;
    std::vector<int> evens;
    for (int ell : spec.lengths)
      if (ell % 2 == 0) evens.push_back(ell);
    int width = static_cast<int>(evens.size());
    CHECK(run_len >= std::min(3 * f, width));
  }
}

TEST_CASE("even interval") {
  CycleSpectrum s1;
  s1.lengths = {4, 6, 8, 12};
  auto i1 = consecutive_even_interval(s1);
  REQUIRE(i1.has_value());
  CHECK(*i1 == std::pair{4, 8});

  CycleSpectrum s2;
  s2.lengths = {5, 7};
  CHECK(!consecutive_even_interval(s2).has_value());

  auto hw = consecutive_even_interval(cycle_spectrum_exact(test::heawood()));
  REQUIRE(hw.has_value());
  CHECK(*hw == std::pair{6, 14});

  CycleSpectrum s3;
  s3.lengths = {4, 8, 10, 12, 16};
  auto i3 = consecutive_even_interval(s3);
  CHECK(*i3 == std::pair{8, 12});

  // equal-length runs: the earliest wins
  CycleSpectrum s4;
  s4.lengths = {4, 6, 12, 14};
  CHECK(*consecutive_even_interval(s4) == std::pair{4, 6});
}

TEST_CASE("reciprocal sum") {
  CHECK(reciprocal_cycle_sum(cycle_spectrum_exact(make_complete(4))) == Rat(7, 12));
  CHECK(reciprocal_cycle_sum(cycle_spectrum_exact(make_cycle(6))) == Rat(1, 6));
  CHECK(reciprocal_cycle_sum(oracle::brute_spectrum(test::petersen())) == Rat(217, 360));
}

TEST_CASE("regime report") {
  auto hw = even_cycle_regime_report(test::heawood(), 2, 2, 0.5, 0.1);
  CHECK(hw.regime == 3); // desk scale: d never reaches log^200 n
  REQUIRE(hw.measured.has_value());
  CHECK(*hw.measured == std::pair{6, 14});
  CHECK(hw.predicted_vacuous);
  CHECK(hw.spectrum_exact);

  auto c100 = even_cycle_regime_report(make_cycle(100), 2, 2, 0.5, 0.1);
  CHECK(!c100.measured.has_value());

  auto pg3 = even_cycle_regime_report(pg_incidence(3), 2, 2, 0.5, 0.1);
  REQUIRE(pg3.measured.has_value());
  CHECK(pg3.measured->first >= 6);

  CHECK_THROWS_AS(even_cycle_regime_report(make_complete(5), 2, 2, 0.5, 0.1),
                  std::invalid_argument);
}
