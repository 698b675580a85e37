#include <algorithm>

#include "internal.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/tangles.hpp"

namespace knotforge {

namespace {

int other_end(const Diagram& d, int h, int a) {
  if (Diagram::crossing_of(h) == a) return Diagram::crossing_of(d.pair(h));
  if (Diagram::crossing_of(d.pair(h)) == a) return Diagram::crossing_of(h);
  throw InvalidArgument("crossing " + std::to_string(a) + " is not an endpoint of the edge");
}

}  // namespace

std::optional<Tangle> min_tangle(const Diagram& d, int e, int f, int a, int b) {
  int m = d.half_edge_count();
  if (e < 0 || e >= m || f < 0 || f >= m) throw InvalidArgument("half-edge out of range");
  int ee = d.edge_of(e), fe = d.edge_of(f);
  if (ee == fe) throw InvalidArgument("e and f must be distinct edges");
  int p = other_end(d, e, a);
  int q = other_end(d, f, b);
  if (p == a || p == b || q == a || q == b) return std::nullopt;

  int n = d.crossing_count();
  // Unit-capacity flow on the undirected edges, stored per half-edge as the
  // flow leaving crossing_of(h) along h.
  std::vector<int> flow(m, 0);
  auto removed = [&](int h) {
    int id = d.edge_of(h);
    return id == ee || id == fe;
  };
  auto is_source = [&](int c) { return c == a || c == b; };
  auto is_sink = [&](int c) { return c == p || c == q; };
  std::vector<int> via(n);
  std::vector<char> seen(n);
  int total = 0;
  while (total <= 2) {
    std::fill(seen.begin(), seen.end(), 0);
    std::fill(via.begin(), via.end(), -1);
    std::vector<int> queue;
    for (int c : {a, b}) {
      if (!seen[c]) {
        seen[c] = 1;
        queue.push_back(c);
      }
    }
    int reached = -1;
    for (std::size_t i = 0; i < queue.size() && reached < 0; ++i) {
      int c = queue[i];
      for (int s = 0; s < 4; ++s) {
        int h = Diagram::half_edge(c, s);
        if (removed(h) || flow[h] >= 1) continue;
        int o = Diagram::crossing_of(d.pair(h));
        if (o == c || seen[o]) continue;
        seen[o] = 1;
        via[o] = h;
        if (is_sink(o)) {
          reached = o;
          break;
        }
        queue.push_back(o);
      }
    }
    if (reached < 0) break;
    for (int c = reached; !is_source(c);) {
      int h = via[c];
      flow[h] += 1;
      flow[d.pair(h)] -= 1;
      c = Diagram::crossing_of(h);
    }
    ++total;
  }
  if (total != 2) return std::nullopt;
  // seen now holds the residual-reachable set of the last (failed) search.
  std::vector<int> side;
  for (int c = 0; c < n; ++c) {
    if (seen[c]) side.push_back(c);
  }
  return make_tangle(d, std::move(side));
}

namespace {

struct Walker {
  const Diagram& d;
  const std::vector<Group>& groups;
  std::vector<char> used;

  void claim(const std::vector<int>& crossings) {
    for (int c : crossings) {
      if (used[c]) throw Error("orbit positions overlap at crossing " + std::to_string(c));
      used[c] = 1;
    }
  }
};

// The end of the group through which the half-edges arrive, and the opposite
// end through which the orbit continues.
std::array<int, 2> far_end_half_edges(const Diagram& d, const Group& g, int crossing,
                                      std::array<int, 2> arrive) {
  (void)d;
  int s0 = Diagram::slot_of(arrive[0]);
  int s1 = Diagram::slot_of(arrive[1]);
  int lo;
  if (((s0 + 1) & 3) == s1) {
    lo = s0;
  } else if (((s1 + 1) & 3) == s0) {
    lo = s1;
  } else {
    throw Error("orbit reaches a group through non-adjacent slots");
  }
  if (g.size() == 1) {
    return {Diagram::half_edge(crossing, lo + 2), Diagram::half_edge(crossing, lo + 3)};
  }
  for (int i = 0; i < 2; ++i) {
    if (g.ends[i].crossing == crossing && g.ends[i].slot == lo) return g.ends[1 - i].half_edges();
  }
  throw Error("orbit reaches a group away from its ends");
}

}  // namespace

Orbit compute_orbit(const Diagram& d, const std::vector<Group>& groups, const Group& g,
                    int side) {
  if (side < 0) side = default_side(g);
  if (side > 1) throw InvalidArgument("side must be 0 or 1");
  Orbit orbit;
  OrbitPosition first;
  first.is_group = true;
  first.group = -1;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].crossings == g.crossings) first.group = static_cast<int>(i);
  }
  first.edges = g.ends[side].half_edges();
  orbit.positions.push_back(first);
  if (g.cyclic) return orbit;

  int n = d.crossing_count();
  Walker w{d, groups, std::vector<char>(n, 0)};
  w.claim(g.crossings);
  std::vector<char> in_g = detail::to_mask(n, g.crossings);

  std::array<int, 2> out = g.ends[side].half_edges();
  for (int step = 0; step <= n; ++step) {
    int a = Diagram::crossing_of(d.pair(out[0]));
    int b = Diagram::crossing_of(d.pair(out[1]));
    auto t = min_tangle(d, out[0], out[1], a, b);
    if (!t) throw Error("orbit step has no min-tangle");
    w.claim(t->crossings);
    std::array<int, 2> in{d.pair(out[0]), d.pair(out[1])};
    std::array<int, 2> exits{-1, -1};
    int k = 0;
    for (int h : t->incident_edges) {
      if (h == in[0] || h == in[1]) continue;
      if (k == 2) throw Error("min-tangle has more than four incident edges");
      exits[k++] = h;
    }
    if (k != 2) throw Error("min-tangle lacks two exit edges");
    orbit.position_pairs.push_back({in, exits});
    orbit.min_tangles.push_back(std::move(*t));

    std::array<int, 2> arrive{d.pair(exits[0]), d.pair(exits[1])};
    int a1 = Diagram::crossing_of(arrive[0]);
    int b1 = Diagram::crossing_of(arrive[1]);
    if (in_g[a1] || in_g[b1]) {
      if (!(in_g[a1] && in_g[b1])) throw Error("orbit returns to the group on one arc only");
      return orbit;
    }
    OrbitPosition pos;
    pos.edges = arrive;
    if (a1 == b1) {
      int gi = group_of(groups, a1);
      if (gi < 0) throw Error("crossing outside every group");
      pos.is_group = true;
      pos.group = gi;
      w.claim(groups[gi].crossings);
      out = far_end_half_edges(d, groups[gi], a1, arrive);
    } else {
      out = exits;
    }
    orbit.positions.push_back(pos);
  }
  throw Error("orbit did not close");
}

Orbit compute_orbit(const Diagram& d, const Group& g, int side) {
  return compute_orbit(d, find_groups(d), g, side);
}

std::vector<int> full_group_members(const Diagram& d, const std::vector<Group>& groups,
                                    const Group& g) {
  Orbit o = compute_orbit(d, groups, g, default_side(g));
  std::vector<int> members;
  for (const auto& p : o.positions) {
    if (p.is_group && p.group >= 0) members.push_back(p.group);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> core_candidates(const Diagram& d, const Group& g, int side, int arc) {
  if (side < 0) side = default_side(g);
  if (arc < 0 || arc > 1) throw InvalidArgument("arc must be 0 or 1");
  auto groups = find_groups(d);
  Orbit o = compute_orbit(d, groups, g, side);
  // Position of every edge along the traversal that leaves g on the chosen arc.
  std::vector<int> order(d.half_edge_count(), -1);
  int start = d.pair(g.ends[side].half_edges()[arc]);
  int h = start, pos = 0;
  do {
    order[d.edge_of(h)] = pos++;
    h = d.pair(Diagram::opposite(h));
  } while (h != start);

  std::vector<int> out;
  for (std::size_t i = 0; i < o.min_tangles.size(); ++i) {
    std::vector<std::pair<int, int>> arcs;  // (traversal position, pair index)
    for (int p = 0; p < 2; ++p) {
      for (int he : o.position_pairs[i][p]) arcs.emplace_back(order[d.edge_of(he)], p);
    }
    std::sort(arcs.begin(), arcs.end());
    if (arcs[0].second == arcs[1].second) out.push_back(static_cast<int>(i));
  }
  return out;
}

Tangle compute_core(const Diagram& d, const Group& g, int side) {
  if (g.sign != Sign::negative) throw PositiveGroup("core is defined for negative groups only");
  auto cand = core_candidates(d, g, side, 0);
  if (cand.size() != 1) {
    throw Error("expected one core candidate, found " + std::to_string(cand.size()));
  }
  if (side < 0) side = default_side(g);
  return compute_orbit(d, g, side).min_tangles[cand[0]];
}

}  // namespace knotforge
