#pragma once

#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge {

enum class SiteKind { D, ROTS, OTS, T2 };

const char* site_kind_name(SiteKind k);

// Where an operator applies. crossings holds the crossing for D, the ordered
// 2-subgroup for ROTS and T2, and the triangle's crossings in face order for
// OTS; face is the triangle's face id for OTS and -1 otherwise.
struct Site {
  SiteKind kind = SiteKind::D;
  std::vector<int> crossings;
  int face = -1;
  friend bool operator==(const Site&, const Site&) = default;
};

// x and z share a bigon and nothing else; y meets each of them once; a
// triangular face touches all three.
struct RotsTangle {
  int x = -1;
  int y = -1;
  int z = -1;
  friend bool operator==(const RotsTangle&, const RotsTangle&) = default;
};

std::vector<Site> enumerate_sites(const Diagram& d, SiteKind kind);

// Replaces a crossing by a clasp of two crossings. The original crossing keeps
// its id, the second crossing is appended.
Diagram apply_D(const Diagram& d, int crossing);
Diagram apply_D(const Diagram& d, const Site& site);
// Collapses a bigon-adjacent pair of a negative group into one crossing.
Diagram apply_D_inverse(const Diagram& d, int c1, int c2);

// Wraps the clasp (p, q) into a rots tangle; the third crossing is appended.
Diagram apply_ROTS(const Diagram& d, int p, int q);
Diagram apply_ROTS(const Diagram& d, const Site& site);
Diagram apply_ROTS_inverse(const Diagram& d, const RotsTangle& r);
std::vector<RotsTangle> find_rots_tangles(const Diagram& d);

// Triangle flip at an OTS site. strand (0, 1 or 2) picks which of the three
// strands is carried across; the shadow produced is the same for all three.
Diagram apply_OTS(const Diagram& d, const Site& site, int strand = 0);

// Quarter turn of a subgroup given as bigon-adjacent crossings in chain order.
Diagram apply_T(const Diagram& d, const std::vector<int>& subgroup);
Diagram apply_T(const Diagram& d, const Site& site);

Diagram apply_site(const Diagram& d, const Site& site);

}  // namespace knotforge
