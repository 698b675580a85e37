#include "knotforge/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "knotforge/errors.hpp"

namespace knotforge {

Diagram::Diagram(int crossings, std::vector<int> pairing)
    : n_(crossings), pair_(std::move(pairing)) {}

namespace {

bool pairing_ok(const Diagram& d) {
  const auto& p = d.pairing();
  if (d.crossing_count() < 0 ||
      static_cast<int>(p.size()) != d.half_edge_count()) {
    return false;
  }
  for (int h = 0; h < d.half_edge_count(); ++h) {
    int g = p[h];
    if (g < 0 || g >= d.half_edge_count() || g == h || p[g] != h) return false;
  }
  return true;
}

bool connected(const Diagram& d) {
  int n = d.crossing_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      int o = Diagram::crossing_of(d.pair(Diagram::half_edge(c, s)));
      if (!seen[o]) {
        seen[o] = 1;
        ++reached;
        stack.push_back(o);
      }
    }
  }
  return reached == n;
}

int strand_length(const Diagram& d, int start) {
  int len = 0;
  int h = start;
  do {
    ++len;
    h = d.pair(Diagram::opposite(h));
  } while (h != start);
  return len;
}

}  // namespace

bool is_single_component(const Diagram& d) {
  if (d.crossing_count() == 0) return false;
  return strand_length(d, 0) == 2 * d.crossing_count();
}

FaceSet compute_faces(const Diagram& d) {
  FaceSet f;
  int m = d.half_edge_count();
  f.face_of_corner.assign(m, -1);
  for (int h = 0; h < m; ++h) {
    if (f.face_of_corner[h] >= 0) continue;
    int id = static_cast<int>(f.cycles.size());
    f.cycles.emplace_back();
    int c = h;
    while (f.face_of_corner[c] < 0) {
      f.face_of_corner[c] = id;
      f.cycles.back().push_back(c);
      c = d.pair(Diagram::rot_next(c));
    }
  }
  return f;
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> report;
  if (d.crossing_count() <= 0) {
    report.emplace_back("diagram has no crossings");
    return report;
  }
  if (!pairing_ok(d)) {
    report.emplace_back("pairing not an involution without fixed points");
    return report;
  }
  bool conn = connected(d);
  if (!conn) report.emplace_back("not connected");
  int v = d.crossing_count();
  int e = 2 * v;
  int f = compute_faces(d).count();
  if (conn && v - e + f != 2) report.emplace_back("not genus 0");
  if (!is_single_component(d)) report.emplace_back("not a single component");
  return report;
}

void require_valid(const Diagram& d) {
  auto report = validate(d);
  if (!report.empty()) throw InvalidDiagram("invalid diagram: " + report.front());
}

FaceSet faces(const Diagram& d) {
  require_valid(d);
  return compute_faces(d);
}

std::vector<Visit> traverse(const Diagram& d, int start) {
  require_valid(d);
  if (start < 0 || start >= d.half_edge_count()) {
    throw InvalidArgument("start half-edge out of range");
  }
  std::vector<Visit> visits;
  visits.reserve(2 * d.crossing_count());
  int h = start;
  do {
    visits.push_back({Diagram::crossing_of(h), Diagram::slot_of(h)});
    h = d.pair(Diagram::opposite(h));
  } while (h != start);
  return visits;
}

std::vector<int> unsigned_gauss(const Diagram& d, int start) {
  auto visits = traverse(d, start);
  std::vector<int> label(d.crossing_count(), 0);
  int next = 0;
  std::vector<int> seq;
  seq.reserve(visits.size());
  for (const auto& v : visits) {
    if (label[v.crossing] == 0) label[v.crossing] = ++next;
    seq.push_back(label[v.crossing]);
  }
  return seq;
}

Diagram mirror(const Diagram& d) {
  auto flip = [](int h) { return (h & ~3) | ((4 - (h & 3)) & 3); };
  std::vector<int> p(d.half_edge_count());
  for (int h = 0; h < d.half_edge_count(); ++h) p[flip(h)] = flip(d.pair(h));
  return Diagram(d.crossing_count(), std::move(p));
}

Diagram relabel(const Diagram& d, const std::vector<int>& new_index) {
  int n = d.crossing_count();
  if (static_cast<int>(new_index.size()) != n) {
    throw InvalidArgument("relabel permutation has wrong size");
  }
  auto map = [&](int h) { return 4 * new_index[h >> 2] + (h & 3); };
  std::vector<int> p(d.half_edge_count());
  for (int h = 0; h < d.half_edge_count(); ++h) p[map(h)] = map(d.pair(h));
  return Diagram(n, std::move(p));
}

Diagram figure_eight() {
  static const Diagram shape = [] {
    const std::vector<int> seq{1, 2, 3, 4, 2, 1, 4, 3};
    for (int bits = 0; bits < 16; ++bits) {
      SignedGaussCode code;
      std::vector<int> seen(5, 0);
      for (int label : seq) {
        int bit = seen[label]++ ? (bits >> (label - 1)) & 1 : 0;
        code.entries.push_back({label, bit});
      }
      try {
        return from_signed_gauss(code);
      } catch (const NonPlanar&) {
      }
    }
    throw Error("figure-eight sequence has no planar realization");
  }();
  return shape;
}

}  // namespace knotforge
