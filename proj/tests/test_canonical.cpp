#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "knotforge/canonical.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/tangles.hpp"
#include "oracle.hpp"

using namespace knotforge;

namespace {

Diagram trefoil() { return realize_unsigned_gauss({1, 2, 3, 1, 2, 3}).at(0); }
Diagram torus5() { return realize_unsigned_gauss({1, 2, 3, 4, 5, 1, 2, 3, 4, 5}).at(0); }

}  // namespace

TEST_CASE("closures of the seeds") {
  auto t = flype_closure(trefoil());
  CHECK(t.size() == 1);
  CHECK(t[0] == canonical_code(trefoil()));
  auto f = flype_closure_diagrams(figure_eight());
  CHECK(!f.empty());
  for (const auto& m : f) CHECK(m.crossing_count() == 4);
}

TEST_CASE("cap is enforced") {
  // Find a diagram whose closure has more than one member and cap it at one.
  bool tested = false;
  for (const auto& d : oracle::prime_shadows(7)) {
    if (flype_closure(d).size() > 1) {
      CHECK_THROWS_AS(flype_closure(d, 1), CapExceeded);
      tested = true;
      break;
    }
  }
  CHECK(tested);
  if (flype_closure(figure_eight()).size() > 1) {
    CHECK_THROWS_AS(flype_closure(figure_eight(), 1), CapExceeded);
  }
}

TEST_CASE("keys distinguish the two five-crossing knots") {
  auto shadows = oracle::prime_shadows(5);
  REQUIRE(shadows.size() == 2);
  CHECK(canonical_key(shadows[0]) != canonical_key(shadows[1]));
  CHECK(std::count_if(shadows.begin(), shadows.end(), [](const Diagram& d) {
          return canonical_key(d) == canonical_key(torus5());
        }) == 1);
}

TEST_CASE("key classes match the invariant classes up to 8 crossings") {
  for (int n = 3; n <= 8; ++n) {
    std::map<Code, std::set<std::vector<long long>>> by_key;
    std::map<std::vector<long long>, std::set<Code>> by_inv;
    for (const auto& d : oracle::prime_shadows(n)) {
      auto key = canonical_key(d).bytes;
      auto inv = oracle::knot_invariant(d);
      std::vector<long long> sig{inv.low};
      sig.insert(sig.end(), inv.coef.begin(), inv.coef.end());
      by_key[key].insert(sig);
      by_inv[sig].insert(key);
      // Members of the closure stay prime and reduced.
      for (const auto& m : flype_closure_diagrams(d)) {
        CHECK(is_prime(m));
        CHECK(is_reduced(m));
      }
    }
    for (const auto& [k, invs] : by_key) CHECK(invs.size() == 1);
    for (const auto& [i, keys] : by_inv) CHECK(keys.size() == 1);
    CHECK(static_cast<int>(by_key.size()) == oracle::knot_count(n));
  }
}

TEST_CASE("keys are invariant under mirror, relabelling and flypes") {
  for (int n = 4; n <= 8; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      auto key = canonical_key(d);
      CHECK(canonical_key(mirror(d)) == key);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::reverse(perm.begin(), perm.end());
      CHECK(canonical_key(relabel(d, perm)) == key);
      for (const auto& s : enumerate_flype_scenarios(d)) {
        CHECK(canonical_key(apply_flype(d, s, 1)) == key);
      }
      for (int c = 0; c < n; ++c) {
        for (const auto& s : enumerate_crossing_flype_scenarios(d, c)) {
          CHECK(canonical_key(flype_crossing(d, s.crossing, s.slot, s.t1)) == key);
        }
      }
      CHECK(canonical_code(representative(key)) == key.bytes);
    }
  }
}

TEST_CASE("cache returns the same keys") {
  KeyCache cache;
  for (const auto& d : oracle::prime_shadows(7)) {
    CHECK(canonical_key(d, cache) == canonical_key(d));
    CHECK(canonical_key(d, cache) == canonical_key(d));
  }
  CHECK(cache.size() > 0);
}
