#include "doctest.h"

#include <cmath>

#include "exgraph/kst.hpp"
#include "exgraph/presets.hpp"

using namespace exg;

namespace {

double row_value(const std::vector<PresetRow>& rows, const std::string& name) {
  for (const auto& r : rows)
    if (r.name == name) return r.value;
  FAIL("missing preset row ", name);
  return 0;
}

bool row_vacuous(const std::vector<PresetRow>& rows, const std::string& name) {
  for (const auto& r : rows)
    if (r.name == name) return r.vacuous;
  FAIL("missing preset row ", name);
  return false;
}

} // namespace

TEST_CASE("derived parameters") {
  KstParams p{2, 2, 3.0};
  CHECK(p.eta() == doctest::Approx(3.0)); // s = 2 collapses the exponent to 1
  CHECK(p.m(14, 0.1) == doctest::Approx(std::log2(15.0 * 14 / 0.9)).epsilon(1e-12));

  KstParams p3{3, 4, 8.0};
  CHECK(p3.eta() == doctest::Approx(std::pow(8.0, 3.0 / 4.0)).epsilon(1e-12));

  CHECK_THROWS_AS((KstParams{2, 2, 1000.0}.m(1, 1000.0)), std::domain_error);
}

TEST_CASE("preset table") {
  auto rows = preset_eval(14, 3, 2, 2, 0.5, 0.1);
  CHECK(row_value(rows, "eta") == doctest::Approx(3.0));
  CHECK(row_value(rows, "m") == doctest::Approx(7.8664).epsilon(1e-3));
  CHECK(row_vacuous(rows, "D_subdivision"));
  CHECK(row_vacuous(rows, "D_adjuster"));
  CHECK(row_vacuous(rows, "sparse_threshold"));

  // s = 2 makes eta equal d for any d
  auto rows2 = preset_eval(1000, 17, 2, 3, 0.5, 0.1);
  CHECK(row_value(rows2, "eta") == doctest::Approx(17.0));

  // log-argument boundary
  CHECK_THROWS_AS(preset_eval(1, 1000, 2, 2, 0.5, 15.0), std::domain_error);
  CHECK_THROWS_AS(preset_eval(10, -1, 2, 2, 0.5, 0.1), std::domain_error);
}
