#include <algorithm>
#include <functional>

#include "internal.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/tangles.hpp"

namespace knotforge {

namespace {

// For every face, its neighbouring faces with one half-edge of the shared edge.
struct FaceAdjacency {
  std::vector<std::vector<std::pair<int, int>>> nb;

  FaceAdjacency(const Diagram& d, const FaceSet& f) : nb(f.count()) {
    for (int h = 0; h < d.half_edge_count(); ++h) {
      if (h > d.pair(h)) continue;
      int l = f.left_of(h), r = f.right_of(h);
      nb[l].emplace_back(r, h);
      nb[r].emplace_back(l, h);
    }
  }

  int edge_between(int a, int b) const {
    for (auto [o, h] : nb[a]) {
      if (o == b) return h;
    }
    return -1;
  }
};

// Crossings reachable from start without entering blocked crossings or
// crossing the two cut edges.
std::vector<int> reach(const Diagram& d, int start, const std::vector<char>& blocked, int x,
                       int y) {
  int n = d.crossing_count();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start}, out;
  seen[start] = 1;
  int xe = d.edge_of(x), ye = d.edge_of(y);
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    out.push_back(c);
    for (int s = 0; s < 4; ++s) {
      int h = Diagram::half_edge(c, s);
      int id = d.edge_of(h);
      if (id == xe || id == ye) continue;
      int o = Diagram::crossing_of(d.pair(h));
      if (blocked[o] || seen[o]) continue;
      seen[o] = 1;
      stack.push_back(o);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> complement(int n, const std::vector<char>& blocked, const std::vector<int>& t1) {
  auto mask = detail::to_mask(n, t1);
  std::vector<int> out;
  for (int c = 0; c < n; ++c) {
    if (!blocked[c] && !mask[c]) out.push_back(c);
  }
  return out;
}

// Splits of the remainder beside a region bounded on the t1 side by corner
// face q, flanked by faces side_a and side_b. excluded faces may not serve as
// the splitting face. Returns (t1, t2) crossing sets.
std::vector<std::pair<std::vector<int>, std::vector<int>>> splits(
    const Diagram& d, const FaceAdjacency& adj, const std::vector<char>& blocked, int entry,
    int side_a, int side_b, const std::vector<int>& excluded) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  if (blocked[entry]) return out;
  for (auto [r, x] : adj.nb[side_a]) {
    if (std::find(excluded.begin(), excluded.end(), r) != excluded.end()) continue;
    int y = adj.edge_between(r, side_b);
    if (y < 0) continue;
    auto t1 = reach(d, entry, blocked, x, y);
    auto t2 = complement(d.crossing_count(), blocked, t1);
    if (t1.empty() || t2.empty()) continue;
    if (std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == t1; }) !=
        out.end()) {
      continue;
    }
    out.emplace_back(std::move(t1), std::move(t2));
  }
  return out;
}

}  // namespace

std::vector<CrossingFlypeScenario> enumerate_crossing_flype_scenarios(const Diagram& d,
                                                                      int crossing) {
  require_valid(d);
  int n = d.crossing_count();
  if (crossing < 0 || crossing >= n) throw InvalidArgument("crossing out of range");
  FaceSet f = compute_faces(d);
  FaceAdjacency adj(d, f);
  std::vector<char> blocked(n, 0);
  blocked[crossing] = 1;
  std::vector<CrossingFlypeScenario> out;
  for (int i = 0; i < 4; ++i) {
    int q = f.face_of_corner[Diagram::half_edge(crossing, i)];
    int side_a = f.face_of_corner[Diagram::half_edge(crossing, i + 1)];
    int q_far = f.face_of_corner[Diagram::half_edge(crossing, i + 2)];
    int side_b = f.face_of_corner[Diagram::half_edge(crossing, i + 3)];
    int entry = Diagram::crossing_of(d.pair(Diagram::half_edge(crossing, i)));
    for (auto& [t1, t2] : splits(d, adj, blocked, entry, side_a, side_b,
                                 {q, q_far, side_a, side_b})) {
      // The slot pair (i, i + 1) must lead into t1 and the other pair into t2.
      auto in1 = detail::to_mask(n, t1);
      int e2 = Diagram::crossing_of(d.pair(Diagram::half_edge(crossing, i + 1)));
      int g2 = Diagram::crossing_of(d.pair(Diagram::half_edge(crossing, i + 2)));
      int h2 = Diagram::crossing_of(d.pair(Diagram::half_edge(crossing, i + 3)));
      if (!in1[e2] || in1[g2] || in1[h2]) continue;
      out.push_back({crossing, i, make_tangle(d, std::move(t1)), make_tangle(d, std::move(t2))});
    }
  }
  return out;
}

std::vector<FlypeScenario> flype_scenarios_for(const Diagram& d, const Group& g) {
  require_valid(d);
  std::vector<FlypeScenario> out;
  if (g.cyclic) return out;
  int n = d.crossing_count();
  FaceSet f = compute_faces(d);
  FaceAdjacency adj(d, f);
  auto blocked = detail::to_mask(n, g.crossings);

  const GroupEnd& e0 = g.ends[0];
  const GroupEnd& e1 = g.ends[1];
  int q0 = f.face_of_corner[Diagram::half_edge(e0.crossing, e0.slot)];
  int q1 = f.face_of_corner[Diagram::half_edge(e1.crossing, e1.slot)];
  int side_a = f.face_of_corner[Diagram::half_edge(e0.crossing, e0.slot + 1)];
  int side_b = f.face_of_corner[Diagram::half_edge(e0.crossing, e0.slot + 3)];
  std::vector<int> excluded{q0, q1, side_a, side_b};
  // Bigons inside the group touch both side faces but do not split the rest.
  for (int c : g.crossings) {
    for (int s = 0; s < 4; ++s) {
      int h = Diagram::half_edge(c, s);
      int o = Diagram::crossing_of(d.pair(h));
      if (o != c && blocked[o]) excluded.push_back(f.face_of_corner[h]);
    }
  }

  auto end_distinct = [&](const GroupEnd& e) {
    auto he = e.half_edges();
    return Diagram::crossing_of(d.pair(he[0])) != Diagram::crossing_of(d.pair(he[1]));
  };
  int entry = Diagram::crossing_of(d.pair(e0.half_edges()[0]));
  for (auto& [t1, t2] : splits(d, adj, blocked, entry, side_a, side_b, excluded)) {
    auto in1 = detail::to_mask(n, t1);
    auto he0 = e0.half_edges();
    auto he1 = e1.half_edges();
    if (!in1[Diagram::crossing_of(d.pair(he0[1]))]) continue;
    if (in1[Diagram::crossing_of(d.pair(he1[0]))] || in1[Diagram::crossing_of(d.pair(he1[1]))]) {
      continue;
    }
    if (!end_distinct(e0) || !end_distinct(e1)) continue;
    out.push_back({g, make_tangle(d, std::move(t1)), make_tangle(d, std::move(t2))});
  }
  return out;
}

std::vector<FlypeScenario> enumerate_flype_scenarios(const Diagram& d) {
  std::vector<FlypeScenario> out;
  for (const auto& g : find_groups(d)) {
    auto s = flype_scenarios_for(d, g);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

namespace {

Diagram flype_with_faces(const Diagram& d, const FaceSet& f, int crossing, int slot,
                         const std::vector<char>& in1) {
  int n = d.crossing_count();
  if (in1[crossing]) throw InvalidArgument("flyped crossing lies inside the tangle");
  auto he = [&](int s) { return Diagram::half_edge(crossing, slot + s); };
  int e1 = d.pair(he(0)), f1 = d.pair(he(1));
  int g1 = d.pair(he(2)), h1 = d.pair(he(3));
  if (!in1[Diagram::crossing_of(e1)] || !in1[Diagram::crossing_of(f1)] ||
      in1[Diagram::crossing_of(g1)] || in1[Diagram::crossing_of(h1)]) {
    throw InvalidArgument("slots do not separate the tangle from the rest");
  }
  // The tangle's two other boundary edges; x borders the face between slots
  // slot + 1 and slot + 2, y the face between slot + 3 and slot.
  int rest[2];
  int found = 0;
  for (int c = 0; c < n; ++c) {
    if (!in1[c]) continue;
    for (int s = 0; s < 4; ++s) {
      int h = Diagram::half_edge(c, s);
      if (!in1[Diagram::crossing_of(d.pair(h))] && h != e1 && h != f1) {
        if (found == 2) throw InvalidArgument("tangle is not a 4-tangle at these slots");
        rest[found++] = h;
      }
    }
  }
  if (found != 2) throw InvalidArgument("tangle is not a 4-tangle at these slots");
  int face_x = f.face_of_corner[he(1)];
  auto on = [&](int h, int face) { return f.left_of(h) == face || f.right_of(h) == face; };
  int x1, y1;
  if (on(rest[0], face_x) && !on(rest[1], face_x)) {
    x1 = rest[0];
    y1 = rest[1];
  } else if (on(rest[1], face_x) && !on(rest[0], face_x)) {
    x1 = rest[1];
    y1 = rest[0];
  } else {
    throw InvalidArgument("cannot orient the tangle's far edges");
  }
  int x2 = d.pair(x1), y2 = d.pair(y1);
  // Reflect the tangle: slot s becomes -s.
  auto phi = [&](int h) {
    return in1[Diagram::crossing_of(h)] ? (h & ~3) | ((4 - (h & 3)) & 3) : h;
  };
  std::vector<int> p = d.pairing();
  auto link = [&](int a, int b) {
    p[a] = b;
    p[b] = a;
  };
  for (int c = 0; c < n; ++c) {
    if (!in1[c]) continue;
    for (int s = 0; s < 4; ++s) {
      int h = Diagram::half_edge(c, s);
      int o = d.pair(h);
      if (in1[Diagram::crossing_of(o)]) p[phi(h)] = phi(o);
    }
  }
  link(phi(e1), g1);
  link(phi(f1), h1);
  link(he(0), y2);
  link(he(1), x2);
  link(he(2), phi(y1));
  link(he(3), phi(x1));
  return Diagram(n, std::move(p));
}

}  // namespace

Diagram flype_crossing(const Diagram& d, int crossing, int slot, const Tangle& t1) {
  FaceSet f = compute_faces(d);
  return flype_with_faces(d, f, crossing, slot, detail::to_mask(d.crossing_count(), t1.crossings));
}

namespace detail {

void for_each_crossing_flype(const Diagram& d, const std::function<void(const Diagram&)>& emit) {
  int n = d.crossing_count();
  FaceSet f = compute_faces(d);
  FaceAdjacency adj(d, f);
  std::vector<char> blocked(n, 0);
  for (int c = 0; c < n; ++c) {
    blocked[c] = 1;
    for (int i = 0; i < 4; ++i) {
      int q = f.face_of_corner[Diagram::half_edge(c, i)];
      int side_a = f.face_of_corner[Diagram::half_edge(c, i + 1)];
      int q_far = f.face_of_corner[Diagram::half_edge(c, i + 2)];
      int side_b = f.face_of_corner[Diagram::half_edge(c, i + 3)];
      int entry = Diagram::crossing_of(d.pair(Diagram::half_edge(c, i)));
      if (blocked[entry]) continue;
      for (auto [r, x] : adj.nb[side_a]) {
        if (r == q || r == q_far || r == side_a || r == side_b) continue;
        int y = adj.edge_between(r, side_b);
        if (y < 0) continue;
        auto t1 = reach(d, entry, blocked, x, y);
        if (static_cast<int>(t1.size()) >= n - 1) continue;
        auto in1 = to_mask(n, t1);
        if (!in1[Diagram::crossing_of(d.pair(Diagram::half_edge(c, i + 1)))] ||
            in1[Diagram::crossing_of(d.pair(Diagram::half_edge(c, i + 2)))] ||
            in1[Diagram::crossing_of(d.pair(Diagram::half_edge(c, i + 3)))]) {
          continue;
        }
        emit(flype_with_faces(d, f, c, i, in1));
      }
    }
    blocked[c] = 0;
  }
}

}  // namespace detail

Diagram apply_flype(const Diagram& d, const FlypeScenario& s, int k) {
  int size = s.group.size();
  if (k < 1 || k > size) throw InvalidArgument("flype count must be between 1 and the group size");
  Diagram cur = d;
  const auto& cs = s.group.crossings;
  for (int j = 0; j < k; ++j) {
    int c = cs[j];
    int slot = -1;
    if (j == 0) {
      slot = s.group.ends[0].slot;
    } else {
      // Slots of c that faced the previous crossing in the original diagram.
      for (int t = 0; t < 4; ++t) {
        bool a = Diagram::crossing_of(d.pair(Diagram::half_edge(c, t))) == cs[j - 1];
        bool b = Diagram::crossing_of(d.pair(Diagram::half_edge(c, t + 1))) == cs[j - 1];
        if (a && b) slot = t;
      }
      if (slot < 0) throw InvalidArgument("group crossings are not bigon-adjacent");
    }
    cur = flype_crossing(cur, c, slot, s.t1);
  }
  return cur;
}

namespace {

// The group g re-oriented so that its end 0 is the one at the given
// crossing and slot pair.
Group oriented(const Group& g, int crossing, int lo) {
  Group out = g;
  if (g.size() == 1) {
    out.ends = {GroupEnd{crossing, lo}, GroupEnd{crossing, lo + 2}};
    return out;
  }
  if (g.ends[1].crossing == crossing && g.ends[1].slot == lo) {
    std::reverse(out.crossings.begin(), out.crossings.end());
    std::swap(out.ends[0], out.ends[1]);
  }
  return out;
}

int low_slot(std::array<int, 2> hs) {
  int s0 = Diagram::slot_of(hs[0]), s1 = Diagram::slot_of(hs[1]);
  return ((s0 + 1) & 3) == s1 ? s0 : s1;
}

// Finds a group whose orbit reaches another group and merges the two.
bool merge_once(Diagram& d) {
  auto groups = find_groups(d);
  for (const auto& base : groups) {
    if (base.cyclic) continue;
    std::vector<Group> views{base};
    if (base.size() == 1) views.push_back(loner_group(d, base.crossings[0], Sign::negative));
    for (const auto& g : views) {
      for (int side = 0; side < 2; ++side) {
        Orbit o = compute_orbit(d, groups, g, side);
        for (std::size_t i = 1; i < o.positions.size(); ++i) {
          const auto& pos = o.positions[i];
          if (!pos.is_group) continue;
          // Everything between g and this group moves to the far side.
          std::vector<int> between;
          for (std::size_t t = 0; t < i; ++t) {
            const auto& mt = o.min_tangles[t];
            between.insert(between.end(), mt.crossings.begin(), mt.crossings.end());
            if (t > 0 && o.positions[t].is_group) {
              const auto& gc = groups[o.positions[t].group].crossings;
              between.insert(between.end(), gc.begin(), gc.end());
            }
          }
          int c = Diagram::crossing_of(pos.edges[0]);
          FlypeScenario s;
          s.group = oriented(groups[pos.group], c, low_slot(pos.edges));
          s.t1 = make_tangle(d, between);
          d = apply_flype(d, s, s.group.size());
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

FullGroupResult to_full_group_counted(const Diagram& d) {
  require_valid(d);
  FullGroupResult res{d, 0};
  int before = static_cast<int>(find_groups(d).size());
  while (merge_once(res.diagram)) {
    ++res.merges;
    int now = static_cast<int>(find_groups(res.diagram).size());
    if (now != before - 1) throw Error("group merge did not reduce the group count");
    before = now;
  }
  return res;
}

Diagram to_full_group(const Diagram& d) { return to_full_group_counted(d).diagram; }

}  // namespace knotforge
