#include <set>

#include "doctest.h"
#include "knotforge/canonical.hpp"
#include "knotforge/classify.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/operators.hpp"
#include "knotforge/tangles.hpp"
#include "oracle.hpp"

using namespace knotforge;

namespace {

Diagram trefoil() { return realize_unsigned_gauss({1, 2, 3, 1, 2, 3}).at(0); }
Diagram torus5() { return realize_unsigned_gauss({1, 2, 3, 4, 5, 1, 2, 3, 4, 5}).at(0); }

std::set<Code> level_keys(int n) {
  std::set<Code> out;
  for (const auto& d : oracle::prime_shadows(n)) out.insert(canonical_key(d).bytes);
  return out;
}

// Independent interleaving check: record the traversal order of every edge
// and test whether the arcs of the two subgroups alternate.
bool interleaved_by_walk(const Diagram& d, std::array<int, 2> s, std::array<int, 2> t) {
  std::vector<int> order;
  int h = 0;
  do {
    int from = Diagram::crossing_of(d.pair(h));
    int to = Diagram::crossing_of(h);
    auto joins = [&](std::array<int, 2> p) {
      return (from == p[0] && to == p[1]) || (from == p[1] && to == p[0]);
    };
    if (joins(s)) order.push_back(0);
    if (joins(t)) order.push_back(1);
    h = d.pair(Diagram::opposite(h));
  } while (h != 0);
  if (order.size() != 4) return false;
  for (int i = 0; i < 4; ++i) {
    if (order[i] == order[(i + 1) % 4]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("seed labels") {
  auto fig8 = classify(figure_eight());
  CHECK(fig8.value == KnotClass::KA);
  CHECK(fig8.to_string() == "K_A (negative 2-group)");
  CHECK(!is_KA(trefoil()));
  CHECK(find_interleaved_2_sequences(figure_eight()).empty());
}

TEST_CASE("torus 5 shadow is K_B") {
  Diagram d = torus5();
  CHECK(!is_KA(d));
  CHECK(!find_interleaved_2_sequences(d).empty());
  CHECK(is_KB_structural(d));
  CHECK(is_KB_operational(d));
  auto label = classify(d);
  CHECK(label.value == KnotClass::KB);
  CHECK(label.to_string() == "K_B (positive 5-group)");
}

TEST_CASE("the K_A five crossing knot is not operationally K_B") {
  for (const auto& d : oracle::prime_shadows(5)) {
    if (is_KA(d)) CHECK(!is_KB_operational(d));
  }
}

TEST_CASE("interleaving agrees with a direct walk") {
  for (int n = 5; n <= 9; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      auto subs = positive_2_subgroups(d);
      auto found = find_interleaved_2_sequences(d);
      std::set<std::pair<std::array<int, 2>, std::array<int, 2>>> got;
      for (const auto& p : found) got.insert({p[0], p[1]});
      for (std::size_t i = 0; i < subs.size(); ++i) {
        for (std::size_t j = i + 1; j < subs.size(); ++j) {
          std::set<int> all{subs[i][0], subs[i][1], subs[j][0], subs[j][1]};
          bool expect = all.size() == 4 && interleaved_by_walk(d, subs[i], subs[j]);
          CHECK(got.count({subs[i], subs[j]}) == (expect ? 1u : 0u));
        }
      }
    }
  }
}

TEST_CASE("classification partitions the corpus up to 9 crossings") {
  for (int n = 3; n <= 9; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      bool a = is_KA(d);
      bool b = is_KB_structural(d);
      CHECK(!(a && b));
      auto label = classify(d);
      KnotClass expect = a ? KnotClass::KA : b ? KnotClass::KB : KnotClass::KC;
      CHECK(label.value == expect);
      if (label.value != KnotClass::KC) CHECK(!label.witnesses.empty());
    }
  }
}

TEST_CASE("structural and operational K_B agree from 4 crossings on") {
  for (int n = 4; n <= 9; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      CAPTURE(n);
      CHECK(is_KB_structural(d) == is_KB_operational(d));
    }
  }
  // The trefoil has a positive 3-group but nothing smaller to come from.
  CHECK(is_KB_structural(trefoil()));
  CHECK(!is_KB_operational(trefoil()));
}

TEST_CASE("every K_A diagram reduces to the level below") {
  for (int n = 4; n <= 9; ++n) {
    auto below = level_keys(n - 1);
    for (const auto& d : oracle::prime_shadows(n)) {
      if (!is_KA(d)) continue;
      bool found = false;
      for (const auto& g : find_groups(d)) {
        if (g.sign != Sign::negative || g.size() < 2) continue;
        Diagram r = apply_D_inverse(d, g.crossings[0], g.crossings[1]);
        found = found || below.count(canonical_key(r).bytes) > 0;
      }
      for (const auto& t : find_rots_tangles(d)) {
        Diagram r = apply_ROTS_inverse(d, t);
        found = found || below.count(canonical_key(r).bytes) > 0;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("no single OTS or T2 takes a K_C diagram to K_A") {
  int kc = 0;
  for (int n = 4; n <= 9; ++n) {
    for (const auto& d : oracle::prime_shadows(n)) {
      if (classify(d).value != KnotClass::KC) continue;
      ++kc;
      for (auto kind : {SiteKind::OTS, SiteKind::T2}) {
        for (const auto& site : enumerate_sites(d, kind)) CHECK(!is_KA(apply_site(d, site)));
      }
    }
  }
  CHECK(kc > 0);
}

TEST_CASE("classify rejects invalid input") {
  Diagram bad(1, {0, 1, 2, 3});
  CHECK_THROWS_AS(classify(bad), InvalidDiagram);
}
