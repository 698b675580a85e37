#include <algorithm>

#include "doctest.h"
#include "knotforge/diagram.hpp"
#include "knotforge/tangles.hpp"
#include "oracle.hpp"

using namespace knotforge;

TEST_CASE("crossing flypes preserve the knot on all shadows up to 8 crossings") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      auto inv = oracle::knot_invariant(d);
      for (int c = 0; c < n; ++c) {
        auto scen = enumerate_crossing_flype_scenarios(d, c);
        for (const auto& s : scen) {
          CHECK(s.t1.incident_edges.size() == 4);
          CHECK(s.t2.incident_edges.size() == 4);
          Diagram f = flype_crossing(d, s.crossing, s.slot, s.t1);
          REQUIRE(validate(f).empty());
          CHECK(is_prime(f));
          CHECK(is_reduced(f));
          CHECK(oracle::knot_invariant(f) == inv);
        }
        // No scenarios on two adjacent slot pairs of one crossing.
        for (const auto& a : scen) {
          for (const auto& b : scen) CHECK(b.slot != ((a.slot + 1) & 3));
        }
      }
    }
  }
}

TEST_CASE("group flypes preserve the knot on all shadows up to 8 crossings") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      auto inv = oracle::knot_invariant(d);
      for (const auto& s : enumerate_flype_scenarios(d)) {
        for (int k = 1; k <= s.group.size(); ++k) {
          Diagram f = apply_flype(d, s, k);
          REQUIRE(validate(f).empty());
          CHECK(is_prime(f));
          CHECK(f.crossing_count() == n);
          CHECK(oracle::knot_invariant(f) == inv);
        }
      }
    }
  }
}

TEST_CASE("orbit and core properties on all shadows up to 8 crossings") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      auto groups = find_groups(d);
      for (const auto& g : groups) {
        for (int side = 0; side < 2; ++side) {
          Orbit o = compute_orbit(d, groups, g, side);
          Orbit r = compute_orbit(d, groups, g, 1 - side);
          REQUIRE(o.min_tangles.size() == r.min_tangles.size());
          for (std::size_t i = 0; i < o.min_tangles.size(); ++i) {
            CHECK(o.min_tangles[i].crossings ==
                  r.min_tangles[o.min_tangles.size() - 1 - i].crossings);
            CHECK(o.min_tangles[i].incident_edges.size() == 4);
          }
        }
        if (g.sign == Sign::negative) {
          for (int side = 0; side < 2; ++side) {
            for (int arc = 0; arc < 2; ++arc) CHECK(core_candidates(d, g, side, arc).size() == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("crossing flype tangles do not cut across orbit min-tangles") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      auto groups = find_groups(d);
      for (const auto& g : groups) {
        Orbit o = compute_orbit(d, groups, g, default_side(g));
        for (const auto& t1 : o.min_tangles) {
          std::vector<int> outside;
          for (int c = 0; c < n; ++c) {
            if (!t1.contains(c)) outside.push_back(c);
          }
          for (int c : t1.crossings) {
            for (const auto& s : enumerate_crossing_flype_scenarios(d, c)) {
              for (const Tangle* t : {&s.t1, &s.t2}) {
                bool inside = std::all_of(t->crossings.begin(), t->crossings.end(),
                                          [&](int x) { return t1.contains(x); });
                bool covers = std::all_of(outside.begin(), outside.end(),
                                          [&](int x) { return t->contains(x); });
                CHECK((inside || covers));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("groups meeting a min-tangle of another orbit lie inside it") {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      auto groups = find_groups(d);
      for (const auto& g : groups) {
        Orbit o = compute_orbit(d, groups, g, default_side(g));
        for (const auto& t1 : o.min_tangles) {
          for (const auto& h : groups) {
            if (h.crossings == g.crossings) continue;
            int in = static_cast<int>(std::count_if(h.crossings.begin(), h.crossings.end(),
                                                    [&](int x) { return t1.contains(x); }));
            CHECK((in == 0 || in == h.size()));
          }
        }
      }
    }
  }
}

TEST_CASE("split groups merge back within the group-count bound") {
  int split_cases = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      std::vector<Diagram> inputs{d};
      for (const auto& s : enumerate_flype_scenarios(d)) {
        for (int k = 1; k < s.group.size(); ++k) inputs.push_back(apply_flype(d, s, k));
      }
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        const Diagram& in = inputs[i];
        auto before = find_groups(in).size();
        auto res = to_full_group_counted(in);
        auto after = find_groups(res.diagram);
        CHECK(res.merges <= static_cast<int>(before) - 1);
        CHECK(after.size() == before - res.merges);
        CHECK(oracle::knot_invariant(res.diagram) == oracle::knot_invariant(in));
        auto again = to_full_group_counted(res.diagram);
        CHECK(again.merges == 0);
        CHECK(again.diagram == res.diagram);
        for (std::size_t gi = 0; gi < after.size(); ++gi) {
          CHECK(full_group_members(res.diagram, after, after[gi]) ==
                std::vector<int>{static_cast<int>(gi)});
        }
        if (i > 0) {
          ++split_cases;
          CHECK(res.merges >= 1);
        }
      }
    }
  }
  CHECK(split_cases > 0);
}
