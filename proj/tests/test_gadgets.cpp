#include "doctest.h"

#include "exgraph/gadgets.hpp"
#include "exgraph/generate.hpp"
#include "exgraph/oracle.hpp"
#include "support.hpp"

using namespace exg;

namespace {

// center 0, legs 1 and 2, two pendant leaves behind each leg
Graph spider22() {
  return Graph::parse("7 6\n0 1\n0 2\n1 3\n1 4\n2 5\n2 6");
}

Hub spider_hub() {
  Hub h;
  h.center = 0;
  h.first_layer = {1, 2};
  h.second_layer = {{3, 4}, {5, 6}};
  return h;
}

} // namespace

TEST_CASE("hub validation") {
  Graph g = spider22();
  CHECK(validate_hub(g, spider_hub(), 2, 2).ok);

  // two legs sharing a pendant leaf
  Graph shared = Graph::parse("6 6\n0 1\n0 2\n1 3\n1 4\n2 5\n2 4");
  Hub bad;
  bad.center = 0;
  bad.first_layer = {1, 2};
  bad.second_layer = {{3, 4}, {5, 4}};
  auto v = validate_hub(shared, bad, 2, 2);
  CHECK(!v.ok);
  CHECK(v.clause == "disjointness");

  // degenerate h2 = 0
  Graph k13 = make_complete_bipartite(1, 3);
  Hub deg;
  deg.center = 0;
  deg.first_layer = {1, 2, 3};
  deg.second_layer = {{}, {}, {}};
  CHECK(validate_hub(k13, deg, 3, 0).ok);

  Hub wrong_adj = spider_hub();
  wrong_adj.first_layer = {1, 3}; // 3 is not adjacent to the center
  wrong_adj.second_layer = {{4}, {5}};
  CHECK(!validate_hub(g, wrong_adj, 2, 1).ok);
}

TEST_CASE("hub construction") {
  // full binary tree of depth 2
  Graph tree = Graph::parse("7 6\n0 1\n0 2\n1 3\n1 4\n2 5\n2 6");
  auto hub = build_hub(tree, {}, 2, 2);
  REQUIRE(hub.has_value());
  CHECK(hub->center == 0);
  CHECK(validate_hub(tree, *hub, 2, 2).ok);

  Graph c6 = make_cycle(6);
  auto ring = build_hub(c6, {}, 2, 1);
  REQUIRE(ring.has_value());
  CHECK(validate_hub(c6, *ring, 2, 1).ok);

  CHECK(!build_hub(c6, {}, 2, 2).has_value()); // needs 7 vertices

  // the avoid set really is avoided
  auto dodge = build_hub(tree, VertexSet{0}, 2, 2);
  CHECK(!dodge.has_value());
}

namespace {

// core 8 joined to two disjoint (2,2)-hubs rooted at 0 and 7
Graph two_spiders_with_core() {
  return Graph::parse("16 15\n0 1\n0 2\n1 3\n1 4\n2 5\n2 6\n"
                      "7 9\n7 10\n9 11\n9 12\n10 13\n10 14\n"
                      "8 0\n8 7\n8 15");
}

Unit sample_unit() {
  Unit u;
  u.core = 8;
  Hub h1;
  h1.center = 0;
  h1.first_layer = {1, 2};
  h1.second_layer = {{3, 4}, {5, 6}};
  Hub h2;
  h2.center = 7;
  h2.first_layer = {9, 10};
  h2.second_layer = {{11, 12}, {13, 14}};
  u.hubs = {h1, h2};
  u.spokes = {Path{{8, 0}}, Path{{8, 7}}};
  return u;
}

} // namespace

TEST_CASE("unit validation") {
  Graph g = two_spiders_with_core();
  Unit u = sample_unit();
  CHECK(validate_unit(g, u, 2, 2, 2, 2).ok);
  CHECK(u.exterior() == VertexSet{3, 4, 5, 6, 11, 12, 13, 14});
  CHECK(u.interior().contains(8));
  CHECK(u.interior().contains(0));

  Unit long_spoke = u;
  long_spoke.spokes[0] = Path{{8, 15, 0}}; // no such edge 15-0; also too long for h3=1
  auto v = validate_unit(g, long_spoke, 2, 2, 2, 1);
  CHECK(!v.ok);
  CHECK(v.clause == "spoke length");

  // spoke touching a hub interior
  Graph g2 = Graph::parse("17 17\n0 1\n0 2\n1 3\n1 4\n2 5\n2 6\n"
                          "7 9\n7 10\n9 11\n9 12\n10 13\n10 14\n"
                          "8 0\n8 16\n16 9\n9 7\n8 15");
  Unit bad;
  bad.core = 8;
  bad.hubs = sample_unit().hubs;
  bad.spokes = {Path{{8, 0}}, Path{{8, 16, 9, 7}}};
  auto v2 = validate_unit(g2, bad, 2, 2, 2, 3);
  CHECK(!v2.ok);
  CHECK(v2.clause == "spoke-hub disjointness");
}

TEST_CASE("unit construction") {
  Graph g = two_spiders_with_core();
  auto u = build_unit(g, {}, 2, 2, 2, 2);
  REQUIRE(u.has_value());
  CHECK(validate_unit(g, *u, 2, 2, 2, 2).ok);

  CHECK(!build_unit(make_cycle(6), {}, 3, 1, 1, 1).has_value());

  VertexSet all_but_one;
  for (int v = 1; v < g.order(); ++v) all_but_one.insert(v);
  CHECK(!build_unit(g, all_but_one, 1, 1, 1, 1).has_value());
}

TEST_CASE("expansion trimming") {
  Graph k10 = make_complete(10);
  VertexSet everyone;
  for (int v = 0; v < 10; ++v) everyone.insert(v);
  Expansion full{0, everyone, 3};
  CHECK(validate_expansion(k10, full).ok);

  Expansion same = trim_expansion(k10, full, 10);
  CHECK(same.body == everyone);

  Expansion one = trim_expansion(k10, full, 1);
  CHECK(one.body == VertexSet{0});

  Expansion five = trim_expansion(k10, full, 5);
  CHECK(five.body == VertexSet{0, 1, 2, 3, 4}); // anchor + smallest neighbours
  CHECK(validate_expansion(k10, five).ok);

  CHECK_THROWS_AS(trim_expansion(k10, full, 0), std::invalid_argument);
  CHECK_THROWS_AS(trim_expansion(k10, full, 11), std::invalid_argument);

  // trimming a path-shaped expansion respects BFS layers
  Graph p6 = make_path(6);
  Expansion line{2, VertexSet{0, 1, 2, 3, 4, 5}, 3};
  Expansion t3 = trim_expansion(p6, line, 3);
  CHECK(t3.body == VertexSet{1, 2, 3});
  CHECK(validate_expansion(p6, t3).ok);
}

namespace {

// C6 with the two cores at distance 2 and singleton expansions
Adjuster c6_gadget() {
  Adjuster a;
  a.core1 = 0;
  a.core2 = 2;
  a.end1 = Expansion{0, VertexSet{0}, 1};
  a.end2 = Expansion{2, VertexSet{2}, 1};
  a.center = VertexSet{1, 3, 4, 5};
  a.slack = 1;
  a.initial_length = 2;
  return a;
}

} // namespace

TEST_CASE("adjuster validation") {
  Graph c6 = make_cycle(6);
  Adjuster a = c6_gadget();
  auto rep = validate_adjuster(c6, a, 1, 1, 1);
  CHECK(rep.fully_verified());
  CHECK(rep.recomputed_initial_length == 2);
  CHECK(adjuster_path_lengths(c6, 0, 2, a.center) == std::set<int>{2, 4});
  CHECK(oracle::brute_adjuster_lengths(c6, 0, 2, a.center) == std::set<int>{2, 4});

  Adjuster too_greedy = a;
  too_greedy.slack = 2;
  auto rep2 = validate_adjuster(c6, too_greedy, 1, 1, 2);
  CHECK(rep2.a4 == A4Status::failed);

  Adjuster overlap = a;
  overlap.center.insert(0);
  auto rep3 = validate_adjuster(c6, overlap, 1, 1, 1);
  CHECK(!rep3.a1.ok);
}

TEST_CASE("adjuster validation at the exact-search boundaries") {
  // big plain cycles with pendant singleton bodies: centers of 20 and 26
  // vertices drive the budgeted-DFS window and the unverified outcome
  auto ring_gadget = [](int len) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < len; ++v) edges.emplace_back(v, (v + 1) % len);
    edges.emplace_back(0, len);          // pendant body at core 1
    edges.emplace_back(len / 2 - 1, len + 1); // pendant body at core 2
    Graph g = Graph::from_edges(len + 2, edges);
    Adjuster a;
    a.core1 = 0;
    a.core2 = len / 2 - 1;
    a.end1 = Expansion{0, VertexSet{0, len}, 2};
    a.end2 = Expansion{len / 2 - 1, VertexSet{len / 2 - 1, len + 1}, 2};
    std::vector<int> center;
    for (int v = 0; v < len; ++v)
      if (v != 0 && v != len / 2 - 1) center.push_back(v);
    a.center = VertexSet(center);
    a.slack = 1;
    a.initial_length = len / 2 - 1;
    return std::make_pair(g, a);
  };

  auto [g22, a22] = ring_gadget(22); // center graph: 20 + 2 = 22 vertices
  auto rep22 = validate_adjuster(g22, a22, 2, 22, 1);
  CHECK(rep22.fully_verified());
  CHECK(rep22.recomputed_initial_length == 10);

  auto [g26, a26] = ring_gadget(26); // center graph: 24 + 2 = 26 vertices
  auto rep26 = validate_adjuster(g26, a26, 2, 26, 1);
  CHECK(rep26.structural_ok());
  CHECK(rep26.a4 == A4Status::unverified);
  CHECK(rep26.accepted());
}

TEST_CASE("simple adjuster construction") {
  auto chain = test::gadget_chain(5);
  int d = chain.bush_len + 1;
  auto adj = build_simple_adjuster(chain.graph, {}, d, 4);
  REQUIRE(adj.has_value());
  CHECK(validate_adjuster(chain.graph, *adj, d, 4, 1).accepted());
  CHECK(adj->initial_length == chain.cycle_len / 2 - 1);

  CHECK(!build_simple_adjuster(make_path(10), {}, 1, 2).has_value());
  CHECK(!build_simple_adjuster(make_complete(4), {}, 1, 2).has_value());
}

TEST_CASE("adjuster merging") {
  // a chain with at least two gadgets, joined tip-to-tip
  std::uint64_t seed = 12;
  test::GadgetChain chain = test::gadget_chain(seed);
  while (chain.gadgets < 2) chain = test::gadget_chain(++seed);
  const Graph& g = chain.graph;
  int d = chain.bush_len + 1;

  auto a1 = build_simple_adjuster(g, {}, d, 4);
  REQUIRE(a1.has_value());
  auto a2 = build_simple_adjuster(g, a1->vertices(), d, 4);
  REQUIRE(a2.has_value());
  auto merged = merge_adjusters(g, *a1, *a2, {});
  REQUIRE(merged.has_value());
  CHECK(merged->slack == 2);
  auto rep = validate_adjuster(g, *merged, d, 4, 2);
  CHECK(rep.accepted());
  if (merged->center.size() <= 12) {
    auto brute = oracle::brute_adjuster_lengths(g, merged->core1, merged->core2,
                                                merged->center);
    for (int i = 0; i <= merged->slack; ++i)
      CHECK(brute.count(merged->initial_length + 2 * i));
  }

  // adjusters in different components cannot merge
  auto one = test::gadget_chain(0);
  int n1 = one.graph.order();
  std::vector<std::pair<int, int>> edges = one.graph.edges();
  for (auto [u, v] : one.graph.edges()) edges.emplace_back(u + n1, v + n1);
  Graph split = Graph::from_edges(2 * n1, edges);
  int d1 = one.bush_len + 1;
  VertexSet right_half, left_half;
  for (int v = 0; v < n1; ++v) left_half.insert(v);
  for (int v = n1; v < 2 * n1; ++v) right_half.insert(v);
  auto b1 = build_simple_adjuster(split, right_half, d1, 4);
  auto b2 = build_simple_adjuster(split, left_half, d1, 4);
  REQUIRE(b1.has_value());
  REQUIRE(b2.has_value());
  CHECK(!merge_adjusters(split, *b1, *b2, {}).has_value());

  // W covering the only bridge also blocks the merge: two C4 gadgets with
  // single-vertex bushes, joined tip - 16 - tip
  std::vector<std::pair<int, int>> be;
  for (int v = 0; v < 4; ++v) be.emplace_back(v, (v + 1) % 4);
  be.emplace_back(0, 4); // bushes
  be.emplace_back(1, 5);
  for (int v = 6; v < 10; ++v) be.emplace_back(v, v == 9 ? 6 : v + 1);
  be.emplace_back(6, 10);
  be.emplace_back(7, 11);
  be.emplace_back(5, 16);
  be.emplace_back(16, 10);
  Graph bridged = Graph::from_edges(17, be);
  auto m1 = build_simple_adjuster(bridged, {}, 2, 4);
  REQUIRE(m1.has_value());
  auto m2 = build_simple_adjuster(bridged, m1->vertices(), 2, 4);
  REQUIRE(m2.has_value());
  CHECK(merge_adjusters(bridged, *m1, *m2, {}).has_value());
  CHECK(!merge_adjusters(bridged, *m1, *m2, VertexSet{16}).has_value());
}

TEST_CASE("adjuster induction") {
  for (std::uint64_t seed : {3u, 9u, 27u}) {
    auto chain = test::gadget_chain(seed);
    int d = chain.bush_len + 1;
    auto adj = build_adjuster(chain.graph, {}, d, 4, chain.gadgets);
    REQUIRE(adj.has_value());
    CHECK(adj->slack == chain.gadgets);
    CHECK(validate_adjuster(chain.graph, *adj, d, 4, chain.gadgets).accepted());

    // one more round than the chain supports must fail
    CHECK(!build_adjuster(chain.graph, {}, d, 4, chain.gadgets + 1).has_value());
  }

  auto chain = test::gadget_chain(3);
  int d = chain.bush_len + 1;
  auto base = build_adjuster(chain.graph, {}, d, 4, 1);
  auto simple = build_simple_adjuster(chain.graph, {}, d, 4);
  REQUIRE(base.has_value());
  REQUIRE(simple.has_value());
  CHECK(base->center == simple->center);
}

TEST_CASE("octopus validation") {
  // three disjoint gadget chains: one core, two arms, tentacles by fiat
  test::GadgetChain c1 = test::gadget_chain(101);
  auto core = build_simple_adjuster(c1.graph, {}, c1.bush_len + 1, 4);
  REQUIRE(core.has_value());

  // embed three copies into one graph with connecting tentacle edges
  int n1 = c1.graph.order();
  std::vector<std::pair<int, int>> edges = c1.graph.edges();
  auto shift_in = [&](const Graph& g, int offset) {
    for (auto [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
  };
  shift_in(c1.graph, n1);
  shift_in(c1.graph, 2 * n1);
  // tentacles: an edge from the core's end1 body to each arm's end1 body
  int r_vertex = core->end1.body.ids().front();
  int arm1_entry = n1 + core->end1.body.ids().front();
  int arm2_entry = 2 * n1 + core->end1.body.ids().front();
  edges.emplace_back(r_vertex, arm1_entry);
  edges.emplace_back(r_vertex, arm2_entry);
  Graph host = Graph::from_edges(3 * n1, edges);

  auto shift_adjuster = [&](const Adjuster& a, int offset) {
    Adjuster out = a;
    out.core1 += offset;
    out.core2 += offset;
    auto shift_set = [&](const VertexSet& s) {
      std::vector<int> ids;
      for (int v : s) ids.push_back(v + offset);
      return VertexSet(ids);
    };
    out.end1 = Expansion{a.end1.anchor + offset, shift_set(a.end1.body), a.end1.radius};
    out.end2 = Expansion{a.end2.anchor + offset, shift_set(a.end2.body), a.end2.radius};
    out.center = shift_set(a.center);
    return out;
  };
  Octopus oct;
  oct.core = *core;
  oct.designated_end = 1;
  oct.arms = {shift_adjuster(*core, n1), shift_adjuster(*core, 2 * n1)};
  oct.tentacles = {Path{{r_vertex, arm1_entry}}, Path{{r_vertex, arm2_entry}}};

  int d = c1.bush_len + 1;
  CHECK(validate_octopus(host, oct, d, 4, 2, 1).ok);

  Octopus bad_arm = oct;
  bad_arm.arms[0] = oct.core; // shares vertices with the core
  CHECK(!validate_octopus(host, bad_arm, d, 4, 2, 1).ok);

  Octopus long_tentacle = oct;
  long_tentacle.tentacles[0] = Path{{r_vertex, arm1_entry}};
  CHECK(!validate_octopus(host, long_tentacle, d, 4, 2, 0).ok);
}

TEST_CASE("builders round-trip through validators") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto chain = test::gadget_chain(seed);
    int d = chain.bush_len + 1;
    auto adj = build_adjuster(chain.graph, {}, d, 4, std::max(1, chain.gadgets - 1));
    if (adj)
      CHECK(validate_adjuster(chain.graph, *adj, d, 4, adj->slack).accepted());
    auto hub = build_hub(chain.graph, {}, 2, 1);
    if (hub) CHECK(validate_hub(chain.graph, *hub, 2, 1).ok);
  }
}
