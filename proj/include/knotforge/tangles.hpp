#pragma once

#include <array>
#include <optional>
#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge {

enum class Sign { positive, negative };

// One end of a group: the two adjacent slots (slot, slot + 1) of an end
// crossing whose edges leave the group.
struct GroupEnd {
  int crossing = -1;
  int slot = 0;
  std::array<int, 2> half_edges() const {
    return {Diagram::half_edge(crossing, slot), Diagram::half_edge(crossing, slot + 1)};
  }
};

struct Group {
  std::vector<int> crossings;  // chain order, consecutive ones share a bigon
  Sign sign = Sign::positive;
  bool cyclic = false;  // the whole diagram is one twist region
  std::array<GroupEnd, 2> ends{};
  int size() const { return static_cast<int>(crossings.size()); }
};

struct Tangle {
  std::vector<int> crossings;       // sorted
  std::vector<int> incident_edges;  // half-edges inside the tangle on boundary edges
  int size() const { return static_cast<int>(crossings.size()); }
  bool contains(int c) const;
};

struct OrbitPosition {
  bool is_group = false;
  int group = -1;                // index into the group list when is_group
  // Half-edges through which the orbit arrives: at a group, the two inside the
  // group; at an edge pair, the two inside the following min-tangle. The first
  // position holds the starting end of the orbit's group.
  std::array<int, 2> edges{};
};

struct Orbit {
  std::vector<OrbitPosition> positions;
  std::vector<Tangle> min_tangles;
  // For each min-tangle: {entry pair, exit pair} as half-edges inside it.
  std::vector<std::array<std::array<int, 2>, 2>> position_pairs;
  bool torus() const { return min_tangles.empty(); }
};

struct FlypeScenario {
  Group group;    // crossings ordered starting at the end attached to t1
  Tangle t1;
  Tangle t2;
};

struct CrossingFlypeScenario {
  int crossing = -1;
  int slot = 0;  // e = slot, f = slot + 1 lead into t1
  Tangle t1;
  Tangle t2;
};

std::vector<Group> find_groups(const Diagram& d);
int group_of(const std::vector<Group>& groups, int crossing);

// A single crossing viewed as a group with a chosen end pairing. The positive
// pairing puts both inbound slots at one end; the negative pairing puts an
// inbound slot and the adjacent outbound slot at each end.
Group loner_group(const Diagram& d, int crossing, Sign pairing);

// Per half-edge: true when a traversal from half-edge 0 enters through it.
std::vector<char> entry_flags(const Diagram& d);

Tangle make_tangle(const Diagram& d, std::vector<int> crossings);
std::vector<std::vector<int>> find_2_tangles(const Diagram& d);
bool is_prime(const Diagram& d);
bool is_reduced(const Diagram& d);

// Smallest 4-tangle containing a and b that has e and f (given by any of
// their half-edges) as incident edges.
std::optional<Tangle> min_tangle(const Diagram& d, int e, int f, int a, int b);

// side selects which end of g starts the orbit.
Orbit compute_orbit(const Diagram& d, const Group& g, int side);
Orbit compute_orbit(const Diagram& d, const std::vector<Group>& groups, const Group& g,
                    int side);
int default_side(const Group& g);

// Indices of the orbit's min-tangles whose first two traversed incident arcs
// form one of their position pairs, for a traversal leaving g's side end along
// arc (0 or 1). side = -1 selects the default side.
std::vector<int> core_candidates(const Diagram& d, const Group& g, int side, int arc);

// The unique min-tangle selected by core_candidates. Throws PositiveGroup for a
// positive g and Error when the selection is not unique.
Tangle compute_core(const Diagram& d, const Group& g, int side = -1);

std::vector<FlypeScenario> enumerate_flype_scenarios(const Diagram& d);
std::vector<FlypeScenario> flype_scenarios_for(const Diagram& d, const Group& g);
std::vector<CrossingFlypeScenario> enumerate_crossing_flype_scenarios(const Diagram& d,
                                                                      int crossing);

// Moves crossing c across the tangle attached at slots (slot, slot + 1).
Diagram flype_crossing(const Diagram& d, int crossing, int slot, const Tangle& t1);
Diagram apply_flype(const Diagram& d, const FlypeScenario& s, int k);

struct FullGroupResult {
  Diagram diagram;
  int merges = 0;
};
FullGroupResult to_full_group_counted(const Diagram& d);
Diagram to_full_group(const Diagram& d);

// Groups of the diagram that appear as positions in the orbit of g (G_F).
std::vector<int> full_group_members(const Diagram& d, const std::vector<Group>& groups,
                                    const Group& g);

}  // namespace knotforge
