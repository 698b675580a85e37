#include "knotforge/operators.hpp"

#include <algorithm>
#include <array>

#include "internal.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/tangles.hpp"

namespace knotforge {

const char* site_kind_name(SiteKind k) {
  switch (k) {
    case SiteKind::D:
      return "D";
    case SiteKind::ROTS:
      return "ROTS";
    case SiteKind::OTS:
      return "OTS";
    case SiteKind::T2:
      return "T2";
  }
  return "?";
}

namespace detail {

std::vector<int> boundary_walk(const Diagram& d, const CrossingSet& in, int start) {
  std::vector<int> out;
  int h = start;
  do {
    out.push_back(h);
    if (out.size() > static_cast<std::size_t>(d.half_edge_count())) {
      throw Error("region boundary walk did not close");
    }
    int g = Diagram::rot_next(h);
    while (in[Diagram::crossing_of(d.pair(g))]) g = Diagram::rot_next(d.pair(g));
    h = g;
  } while (h != start);
  return out;
}

int bigon_slot(const Diagram& d, const FaceSet& f, int c1, int c2) {
  for (int s = 0; s < 4; ++s) {
    const auto& cyc = f.cycles[f.face_of_corner[Diagram::half_edge(c1, s)]];
    if (cyc.size() != 2) continue;
    for (int h : cyc) {
      if (Diagram::crossing_of(h) == c2) return s;
    }
  }
  (void)d;
  return -1;
}

std::vector<int> remove_crossing(const std::vector<int>& p, int r) {
  int n = static_cast<int>(p.size()) / 4;
  int last = n - 1;
  auto map = [&](int h) {
    int c = Diagram::crossing_of(h);
    if (c == r) throw Error("removed crossing is still attached");
    return c == last ? Diagram::half_edge(r, Diagram::slot_of(h)) : h;
  };
  std::vector<int> out(4 * last);
  for (int h = 0; h < 4 * n; ++h) {
    if (Diagram::crossing_of(h) == r) continue;
    out[map(h)] = map(p[h]);
  }
  return out;
}

}  // namespace detail

namespace {

using detail::boundary_walk;

struct Wiring {
  std::vector<int> p;
  void link(int a, int b) {
    p[a] = b;
    p[b] = a;
  }
};

void require_no_loops(const Diagram& d) {
  if (detail::has_loop(d)) throw NotApplicable("diagram has a loop edge");
}

Diagram finish(std::vector<int> p, int n, const char* op) {
  Diagram out(n, std::move(p));
  auto report = validate(out);
  if (!report.empty()) throw NotApplicable(std::string(op) + " result invalid: " + report.front());
  return out;
}

// Clasp on a boundary listed in walk order: L takes b[3], b[0]; R takes b[1],
// b[2]; strands join b[0]-b[1] and b[3]-b[2].
void build_clasp(Wiring& w, int l, int r, const std::array<int, 4>& b) {
  auto L = [&](int s) { return Diagram::half_edge(l, s); };
  auto R = [&](int s) { return Diagram::half_edge(r, s); };
  w.link(L(0), b[0]);
  w.link(L(3), b[3]);
  w.link(R(1), b[1]);
  w.link(R(2), b[2]);
  w.link(L(1), R(0));
  w.link(L(2), R(3));
}

// Outer boundary of the clasp {p, q}, listed so that p holds entries 3 and 0.
std::array<int, 4> clasp_boundary(const Diagram& d, int p, int q) {
  FaceSet f = compute_faces(d);
  int s = detail::bigon_slot(d, f, p, q);
  if (s < 0) throw NotApplicable("crossings do not share a bigon");
  auto in = detail::to_mask(d.crossing_count(), {p, q});
  auto walk = boundary_walk(d, in, Diagram::half_edge(p, s + 3));
  if (walk.size() != 4 || Diagram::crossing_of(walk[1]) != q ||
      Diagram::crossing_of(walk[2]) != q || Diagram::crossing_of(walk[3]) != p) {
    throw NotApplicable("bigon pair is not a clasp with four boundary edges");
  }
  return {d.pair(walk[0]), d.pair(walk[1]), d.pair(walk[2]), d.pair(walk[3])};
}

const Group* group_containing(const std::vector<Group>& groups, int c) {
  int i = group_of(groups, c);
  return i < 0 ? nullptr : &groups[i];
}

bool adjacent_in(const Group& g, int a, int b) {
  const auto& cs = g.crossings;
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    if ((cs[i] == a && cs[i + 1] == b) || (cs[i] == b && cs[i + 1] == a)) return true;
  }
  if (g.cyclic && cs.size() > 2) {
    if ((cs.front() == a && cs.back() == b) || (cs.front() == b && cs.back() == a)) return true;
  }
  return false;
}

}  // namespace

Diagram apply_D(const Diagram& d, int x) {
  require_valid(d);
  require_no_loops(d);
  int n = d.crossing_count();
  if (x < 0 || x >= n) throw NotApplicable("crossing out of range");
  int a = -1, c = -1;
  int h = 0;
  for (int k = 0; k < 2 * n; ++k) {
    if (Diagram::crossing_of(h) == x) (a < 0 ? a : c) = Diagram::slot_of(h);
    h = d.pair(Diagram::opposite(h));
  }
  // The clasp must join the two inbound arcs a and c, and the two outbound ones.
  int s0 = c == ((a + 1) & 3) ? a : ((a + 1) & 3);
  std::array<int, 4> b{};
  for (int k = 0; k < 4; ++k) b[k] = d.pair(Diagram::half_edge(x, s0 + k));
  Wiring w{d.pairing()};
  w.p.resize(4 * (n + 1));
  build_clasp(w, x, n, b);
  return finish(std::move(w.p), n + 1, "D");
}

Diagram apply_D(const Diagram& d, const Site& site) {
  if (site.kind != SiteKind::D || site.crossings.size() != 1) throw NotApplicable("not a D site");
  return apply_D(d, site.crossings[0]);
}

Diagram apply_D_inverse(const Diagram& d, int c1, int c2) {
  require_valid(d);
  auto groups = find_groups(d);
  const Group* g = group_containing(groups, c1);
  if (!g || g->sign != Sign::negative || !adjacent_in(*g, c1, c2)) {
    throw NotApplicable("D inverse needs a 2-subgroup of a negative group");
  }
  auto b = clasp_boundary(d, c1, c2);
  Wiring w{d.pairing()};
  for (int k = 0; k < 4; ++k) w.link(Diagram::half_edge(c1, k), b[k]);
  for (int k = 0; k < 4; ++k) w.p[Diagram::half_edge(c2, k)] = -1;
  auto p = detail::remove_crossing(w.p, c2);
  return finish(std::move(p), d.crossing_count() - 1, "D inverse");
}

Diagram apply_ROTS(const Diagram& d, int p, int q) {
  require_valid(d);
  require_no_loops(d);
  int n = d.crossing_count();
  auto b = clasp_boundary(d, p, q);
  Wiring w{d.pairing()};
  w.p.resize(4 * (n + 1));
  auto X = [&](int s) { return Diagram::half_edge(p, s); };
  auto Z = [&](int s) { return Diagram::half_edge(q, s); };
  auto Y = [&](int s) { return Diagram::half_edge(n, s); };
  w.link(X(0), b[0]);
  w.link(X(1), Z(0));
  w.link(X(2), Z(3));
  w.link(X(3), Y(2));
  w.link(Z(1), b[1]);
  w.link(Z(2), Y(3));
  w.link(Y(0), b[2]);
  w.link(Y(1), b[3]);
  return finish(std::move(w.p), n + 1, "ROTS");
}

Diagram apply_ROTS(const Diagram& d, const Site& site) {
  if (site.kind != SiteKind::ROTS || site.crossings.size() != 2) {
    throw NotApplicable("not a ROTS site");
  }
  return apply_ROTS(d, site.crossings[0], site.crossings[1]);
}

std::vector<RotsTangle> find_rots_tangles(const Diagram& d) {
  require_valid(d);
  int n = d.crossing_count();
  FaceSet f = compute_faces(d);
  auto edges_between = [&](int a, int b) {
    int k = 0;
    for (int s = 0; s < 4; ++s) k += Diagram::crossing_of(d.pair(Diagram::half_edge(a, s))) == b;
    return k;
  };
  std::vector<RotsTangle> out;
  for (int x = 0; x < n; ++x) {
    for (int z = x + 1; z < n; ++z) {
      if (edges_between(x, z) != 2 || detail::bigon_slot(d, f, x, z) < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        if (edges_between(y, x) != 1 || edges_between(y, z) != 1) continue;
        bool triangle = false;
        for (int s = 0; s < 4 && !triangle; ++s) {
          const auto& cyc = f.cycles[f.face_of_corner[Diagram::half_edge(y, s)]];
          if (cyc.size() != 3) continue;
          std::vector<int> cs;
          for (int h : cyc) cs.push_back(Diagram::crossing_of(h));
          std::sort(cs.begin(), cs.end());
          std::vector<int> want{x, y, z};
          std::sort(want.begin(), want.end());
          triangle = cs == want;
        }
        if (triangle) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

Diagram apply_ROTS_inverse(const Diagram& d, const RotsTangle& r) {
  auto all = find_rots_tangles(d);
  RotsTangle norm{std::min(r.x, r.z), r.y, std::max(r.x, r.z)};
  if (std::find(all.begin(), all.end(), norm) == all.end()) {
    throw NotApplicable("crossings do not form a rots tangle");
  }
  int n = d.crossing_count();
  auto in = detail::to_mask(n, {r.x, r.y, r.z});
  int start = -1;
  for (int s = 0; s < 4; ++s) {
    int h = Diagram::half_edge(r.x, s);
    if (!in[Diagram::crossing_of(d.pair(h))]) start = h;
  }
  auto walk = boundary_walk(d, in, start);
  if (walk.size() != 4) throw NotApplicable("rots tangle does not have four boundary edges");
  // Rotate so the two boundary edges at y come last.
  int shift = 0;
  while (!(Diagram::crossing_of(walk[(shift + 2) % 4]) == r.y &&
           Diagram::crossing_of(walk[(shift + 3) % 4]) == r.y)) {
    if (++shift == 4) throw NotApplicable("rots tangle boundary out of order");
  }
  std::array<int, 4> b{};
  for (int k = 0; k < 4; ++k) b[k] = d.pair(walk[(shift + k) % 4]);
  int l = Diagram::crossing_of(walk[shift]);
  int rr = Diagram::crossing_of(walk[(shift + 1) % 4]);
  Wiring w{d.pairing()};
  build_clasp(w, l, rr, b);
  for (int k = 0; k < 4; ++k) w.p[Diagram::half_edge(r.y, k)] = -1;
  auto p = detail::remove_crossing(w.p, r.y);
  return finish(std::move(p), n - 1, "ROTS inverse");
}

namespace {

// The three crossings of a triangular face that meet only along its sides.
bool ots_triangle(const Diagram& d, const FaceSet& f, int face, std::vector<int>& crossings) {
  const auto& cyc = f.cycles[face];
  if (cyc.size() != 3) return false;
  crossings.clear();
  for (int h : cyc) crossings.push_back(Diagram::crossing_of(h));
  if (crossings[0] == crossings[1] || crossings[1] == crossings[2] ||
      crossings[0] == crossings[2]) {
    return false;
  }
  auto in = detail::to_mask(d.crossing_count(), crossings);
  int internal = 0;
  for (int c : crossings) {
    for (int s = 0; s < 4; ++s) internal += in[Diagram::crossing_of(d.pair(Diagram::half_edge(c, s)))];
  }
  return internal == 6;  // each internal edge is seen from both ends
}

}  // namespace

Diagram apply_OTS(const Diagram& d, const Site& site, int strand) {
  require_valid(d);
  if (site.kind != SiteKind::OTS) throw NotApplicable("not an OTS site");
  if (strand < 0 || strand > 2) throw InvalidArgument("strand must be 0, 1 or 2");
  FaceSet f = compute_faces(d);
  std::vector<int> cs;
  if (site.face < 0 || site.face >= f.count() || !ots_triangle(d, f, site.face, cs)) {
    throw NotApplicable("face is not an OTS triangle");
  }
  int n = d.crossing_count();
  auto in = detail::to_mask(n, cs);
  int start = -1;
  for (int s = 0; s < 4 && start < 0; ++s) {
    int h = Diagram::half_edge(cs[0], s);
    if (!in[Diagram::crossing_of(d.pair(h))]) start = h;
  }
  auto walk = boundary_walk(d, in, start);
  if (walk.size() != 6) throw NotApplicable("OTS triangle does not have six boundary edges");
  auto cr = [&](int i) { return Diagram::crossing_of(walk[i % 6]); };
  int first = 0;
  while (!(cr(first) == cr(first + 1) && cr(first + 1) != cr(first + 2))) {
    if (++first == 6) throw NotApplicable("OTS boundary out of order");
  }
  std::array<int, 6> q{};
  int rot = first + 1 + 2 * strand;
  for (int k = 0; k < 6; ++k) q[k] = d.pair(walk[(rot + k) % 6]);
  int u = cr(first), v = cr(first + 2), x = cr(first + 4);
  auto U = [&](int s) { return Diagram::half_edge(u, s); };
  auto V = [&](int s) { return Diagram::half_edge(v, s); };
  auto W = [&](int s) { return Diagram::half_edge(x, s); };
  Wiring w{d.pairing()};
  w.link(U(0), V(1));
  w.link(U(1), W(0));
  w.link(V(0), W(1));
  w.link(U(2), q[0]);
  w.link(U(3), q[1]);
  w.link(V(2), q[2]);
  w.link(V(3), q[3]);
  w.link(W(2), q[4]);
  w.link(W(3), q[5]);
  return finish(std::move(w.p), n, "OTS");
}

Diagram apply_T(const Diagram& d, const std::vector<int>& sub) {
  require_valid(d);
  int k = static_cast<int>(sub.size());
  if (k < 2) throw NotApplicable("T needs a subgroup of at least two crossings");
  auto groups = find_groups(d);
  const Group* g = group_containing(groups, sub[0]);
  if (!g) throw NotApplicable("crossing outside every group");
  for (int i = 0; i + 1 < k; ++i) {
    if (!adjacent_in(*g, sub[i], sub[i + 1])) throw NotApplicable("not a subgroup in chain order");
  }
  if (g->sign == Sign::negative && k % 2 == 0) {
    throw NotApplicable("turning an even subgroup of a negative group gives a link");
  }
  int n = d.crossing_count();
  FaceSet f = compute_faces(d);
  int s = detail::bigon_slot(d, f, sub[0], sub[1]);
  auto in = detail::to_mask(n, sub);
  auto walk = boundary_walk(d, in, Diagram::half_edge(sub[0], s + 2));
  if (walk.size() != 4) throw NotApplicable("subgroup does not have four boundary edges");
  std::array<int, 4> outer{};
  for (int i = 0; i < 4; ++i) outer[i] = d.pair(walk[i]);
  for (int o : outer) {
    if (in[Diagram::crossing_of(o)]) throw NotApplicable("subgroup boundary edge stays inside");
  }
  Wiring w{d.pairing()};
  for (int i = 0; i < 4; ++i) w.link(outer[i], walk[(i + 1) % 4]);
  return finish(std::move(w.p), n, "T");
}

Diagram apply_T(const Diagram& d, const Site& site) {
  if (site.kind != SiteKind::T2) throw NotApplicable("not a T2 site");
  return apply_T(d, site.crossings);
}

std::vector<Site> enumerate_sites(const Diagram& d, SiteKind kind) {
  require_valid(d);
  std::vector<Site> out;
  if (kind == SiteKind::OTS) {
    FaceSet f = compute_faces(d);
    std::vector<int> cs;
    for (int face = 0; face < f.count(); ++face) {
      if (ots_triangle(d, f, face, cs)) out.push_back({SiteKind::OTS, cs, face});
    }
    return out;
  }
  auto groups = find_groups(d);
  for (const auto& g : groups) {
    int k = g.size();
    bool neg = g.sign == Sign::negative;
    switch (kind) {
      case SiteKind::D:
        if (neg || k == 1 || (k == 2 && !neg)) {
          for (int c : g.crossings) out.push_back({SiteKind::D, {c}, -1});
        }
        break;
      case SiteKind::ROTS:
        if (neg && (k == 2 || k == 3)) {
          for (int i = 0; i + 1 < k; ++i) {
            int a = g.crossings[i], b = g.crossings[i + 1];
            out.push_back({SiteKind::ROTS, {a, b}, -1});
            out.push_back({SiteKind::ROTS, {b, a}, -1});
          }
        }
        break;
      case SiteKind::T2:
        if (!neg && k == 2 && !g.cyclic) out.push_back({SiteKind::T2, g.crossings, -1});
        break;
      case SiteKind::OTS:
        break;
    }
  }
  return out;
}

Diagram apply_site(const Diagram& d, const Site& site) {
  switch (site.kind) {
    case SiteKind::D:
      return apply_D(d, site);
    case SiteKind::ROTS:
      return apply_ROTS(d, site);
    case SiteKind::OTS:
      return apply_OTS(d, site);
    case SiteKind::T2:
      return apply_T(d, site);
  }
  throw NotApplicable("unknown site kind");
}

}  // namespace knotforge
