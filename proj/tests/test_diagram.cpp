#include <algorithm>

#include "doctest.h"
#include "knotforge/diagram.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/tangles.hpp"

using namespace knotforge;

namespace {

std::vector<int> face_degrees(const Diagram& d) {
  std::vector<int> deg;
  for (const auto& c : faces(d).cycles) deg.push_back(static_cast<int>(c.size()));
  std::sort(deg.begin(), deg.end());
  return deg;
}

Diagram trefoil() { return realize_unsigned_gauss({1, 2, 3, 1, 2, 3}).at(0); }

}  // namespace

TEST_CASE("figure-eight shadow") {
  Diagram d = figure_eight();
  CHECK(d.crossing_count() == 4);
  CHECK(validate(d).empty());
  CHECK(face_degrees(d) == std::vector<int>{2, 2, 3, 3, 3, 3});
  CHECK(format_group_code(to_group_code(d, 0)) == "2_1, 2_2, -2_1, -2_2");
  CHECK(format_dt_code(to_dt_code(d)) == "4, 6, 8, 2");
}

TEST_CASE("trefoil shadow") {
  Diagram d = trefoil();
  CHECK(face_degrees(d) == std::vector<int>{2, 2, 2, 3, 3});
  CHECK(format_dt_code(to_dt_code(d)) == "4, 6, 2");
  CHECK(format_group_code(to_group_code(d, 0)) == "3_1, 3_1");
}
