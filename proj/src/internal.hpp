#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge::detail {

// canonical_code without validating the input. Hot path of the flype closure.
Code canonical_code_unchecked(const Diagram& d);

// Bitmask over crossings (diagrams stay far below 64 crossings in practice,
// but masks are kept as byte vectors so nothing silently overflows).
using CrossingSet = std::vector<char>;

CrossingSet to_mask(int n, const std::vector<int>& crossings);
std::vector<int> from_mask(const CrossingSet& mask);

// True when every strand visit alternates entry/exit consistently, i.e. the
// diagram traced from half-edge 0 closes after 2n visits.
bool single_strand(const Diagram& d);

// Two faces share at most one edge and no edge has the same face on both
// sides: the face-dual test for the absence of 2-edge cuts.
bool prime_by_faces(const Diagram& d, const FaceSet& f);

bool has_loop(const Diagram& d);

// Inner half-edges on the boundary of a crossing set, in the order met when
// walking around the region with the region on the left, starting at start.
std::vector<int> boundary_walk(const Diagram& d, const CrossingSet& in, int start);

// Slot s of c1 such that slots s, s + 1 bound a bigon shared with c2, or -1.
int bigon_slot(const Diagram& d, const FaceSet& f, int c1, int c2);

// Calls emit with the result of every single-crossing flype of d.
void for_each_crossing_flype(const Diagram& d, const std::function<void(const Diagram&)>& emit);

// Drops a detached crossing r, moving the last crossing into its id.
std::vector<int> remove_crossing(const std::vector<int>& pairing, int r);

}  // namespace knotforge::detail
