#include <algorithm>

#include "doctest.h"
#include "knotforge/diagram.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/tangles.hpp"

using namespace knotforge;

namespace {

Diagram trefoil() { return realize_unsigned_gauss({1, 2, 3, 1, 2, 3}).at(0); }

}  // namespace

TEST_CASE("groups of the seed diagrams") {
  auto g8 = find_groups(figure_eight());
  REQUIRE(g8.size() == 2);
  for (const auto& g : g8) {
    CHECK(g.size() == 2);
    CHECK(g.sign == Sign::negative);
  }
  auto g3 = find_groups(trefoil());
  REQUIRE(g3.size() == 1);
  CHECK(g3[0].size() == 3);
  CHECK(g3[0].sign == Sign::positive);
  CHECK(g3[0].cyclic);
}

TEST_CASE("figure-eight orbit and core") {
  Diagram d = figure_eight();
  auto groups = find_groups(d);
  for (const auto& g : groups) {
    Orbit o = compute_orbit(d, groups, g, 0);
    REQUIRE(o.min_tangles.size() == 1);
    CHECK(o.positions.size() == 1);
    const auto& other = groups[groups[0].crossings == g.crossings ? 1 : 0];
    auto expect = other.crossings;
    std::sort(expect.begin(), expect.end());
    CHECK(o.min_tangles[0].crossings == expect);
    CHECK(compute_core(d, g).crossings == expect);
  }
  CHECK(to_full_group(d) == d);
}

TEST_CASE("figure-eight group ends meet distinct crossings of one min-tangle") {
  // Each end of a 2-group reaches both crossings of the other group, so the
  // only tangle on an end is the whole remainder and no split exists.
  Diagram d = figure_eight();
  CHECK(enumerate_flype_scenarios(d).empty());
}

TEST_CASE("trefoil orbit is the group itself") {
  Diagram d = trefoil();
  auto g = find_groups(d)[0];
  Orbit o = compute_orbit(d, g, 0);
  CHECK(o.torus());
  CHECK(o.positions.size() == 1);
  CHECK(enumerate_flype_scenarios(d).empty());
  auto cs = enumerate_crossing_flype_scenarios(d, 0);
  CHECK(!cs.empty());
  for (const auto& s : cs) {
    CHECK(s.t1.size() == 1);
    CHECK(s.t2.size() == 1);
    Diagram f = flype_crossing(d, s.crossing, s.slot, s.t1);
    CHECK(validate(f).empty());
    CHECK(canonical_code(f) == canonical_code(d));
  }
}

TEST_CASE("figure-eight flypes stay valid") {
  Diagram d = figure_eight();
  for (int c = 0; c < 4; ++c) {
    for (const auto& s : enumerate_crossing_flype_scenarios(d, c)) {
      Diagram f = flype_crossing(d, s.crossing, s.slot, s.t1);
      CHECK(validate(f).empty());
    }
  }
}
