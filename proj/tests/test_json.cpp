#include "doctest.h"

#include "exgraph/generate.hpp"
#include "exgraph/json_io.hpp"
#include "exgraph/oracle.hpp"
#include "support.hpp"

using namespace exg;

TEST_CASE("graph json round trip") {
  Graph g = random_gnp(9, 0.4, 17);
  Graph back = graph_from_json(graph_to_json(g));
  CHECK(back.order() == g.order());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("certificates revalidate after serialization") {
  // expansion certificate
  Graph k6 = make_complete(6);
  auto cert = certify_expander(k6, {0.2, 2.0});
  auto cert2 = expansion_certificate_from_json(expansion_certificate_to_json(cert));
  CHECK(cert2.verdict == cert.verdict);
  CHECK(cert2.sets_checked == cert.sets_checked);

  // adjuster
  auto chain = test::gadget_chain(1);
  int d = chain.bush_len + 1;
  auto adj = build_simple_adjuster(chain.graph, {}, d, 4);
  REQUIRE(adj.has_value());
  Adjuster adj2 = adjuster_from_json(adjuster_to_json(*adj));
  CHECK(validate_adjuster(chain.graph, adj2, d, 4, 1).accepted());
  CHECK(adj2.center == adj->center);

  // subdivision
  Graph k5 = make_complete(5);
  auto sub = find_balanced_subdivision(k5, 4, 1);
  REQUIRE(sub.has_value());
  auto sub2 = subdivision_from_json(subdivision_to_json(*sub));
  CHECK(validate_subdivision(k5, sub2).ok);

  // spectrum
  auto spec = cycle_spectrum_exact(test::petersen());
  auto spec2 = spectrum_from_json(spectrum_to_json(spec));
  CHECK(spec2.lengths == spec.lengths);
  CHECK(spec2.witnesses == spec.witnesses);

  // hub and unit
  Graph tree = Graph::parse("7 6\n0 1\n0 2\n1 3\n1 4\n2 5\n2 6");
  auto hub = build_hub(tree, {}, 2, 2);
  REQUIRE(hub.has_value());
  Hub hub2 = hub_from_json(hub_to_json(*hub));
  CHECK(validate_hub(tree, hub2, 2, 2).ok);

  // kst witness
  auto kst = kst_free(make_complete_bipartite(2, 3), 2, 2);
  auto kst2 = kst_result_from_json(kst_result_to_json(kst));
  CHECK(kst2.verdict == kst.verdict);
  REQUIRE(kst2.witness.has_value());
  CHECK(kst2.witness->s_side == kst.witness->s_side);

  // octopus structure round-trips field by field
  Octopus oct;
  oct.core = *adj;
  oct.designated_end = 2;
  oct.arms = {*adj};
  oct.tentacles = {Path{{0, 1, 2}}};
  Octopus oct2 = octopus_from_json(octopus_to_json(oct));
  CHECK(oct2.designated_end == 2);
  CHECK(oct2.core.center == oct.core.center);
  CHECK(oct2.arms.size() == 1);
  CHECK(oct2.tentacles.front().vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("serialization is byte-stable") {
  Graph g = test::heawood();
  auto a = spectrum_to_json(cycle_spectrum_exact(g)).dump();
  auto b = spectrum_to_json(cycle_spectrum_exact(g)).dump();
  CHECK(a == b);
}
