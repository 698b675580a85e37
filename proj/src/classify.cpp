#include "knotforge/classify.hpp"

#include <algorithm>

#include "internal.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/operators.hpp"
#include "knotforge/tangles.hpp"

namespace knotforge {

const char* knot_class_name(KnotClass c) {
  switch (c) {
    case KnotClass::KA: return "K_A";
    case KnotClass::KB: return "K_B";
    case KnotClass::KC: return "K_C";
  }
  return "?";
}

std::string ClassLabel::to_string() const {
  std::string out = knot_class_name(value);
  if (!witnesses.empty()) out += " (" + witnesses.front().description + ")";
  return out;
}

std::vector<Witness> ka_witnesses(const Diagram& d) {
  require_valid(d);
  std::vector<Witness> out;
  for (const auto& g : find_groups(d)) {
    if (g.sign == Sign::negative && g.size() >= 2) {
      out.push_back({"negative " + std::to_string(g.size()) + "-group", g.crossings});
    }
  }
  for (const auto& r : find_rots_tangles(d)) out.push_back({"rots tangle", {r.x, r.y, r.z}});
  return out;
}

bool is_KA(const Diagram& d) { return !ka_witnesses(d).empty(); }

std::vector<std::array<int, 2>> positive_2_subgroups(const Diagram& d) {
  require_valid(d);
  std::vector<std::array<int, 2>> out;
  for (const auto& g : find_groups(d)) {
    if (g.sign != Sign::positive || g.size() < 2) continue;
    for (int i = 0; i + 1 < g.size(); ++i) out.push_back({g.crossings[i], g.crossings[i + 1]});
    if (g.cyclic && g.size() >= 3) out.push_back({g.crossings.back(), g.crossings.front()});
  }
  return out;
}

std::vector<TwoSubgroupPair> find_interleaved_2_sequences(const Diagram& d) {
  auto subs = positive_2_subgroups(d);
  if (subs.size() < 2) return {};
  FaceSet f = compute_faces(d);
  // Traversal step at which each edge is walked, indexed by edge id.
  std::vector<int> when(d.half_edge_count(), -1);
  int h = 0, step = 0;
  do {
    when[d.edge_of(h)] = step++;
    h = d.pair(Diagram::opposite(h));
  } while (h != 0);
  auto arcs = [&](const std::array<int, 2>& s) {
    int slot = detail::bigon_slot(d, f, s[0], s[1]);
    if (slot < 0) throw InvalidDiagram("2-subgroup crossings do not share a bigon");
    int a = when[d.edge_of(Diagram::half_edge(s[0], slot))];
    int b = when[d.edge_of(Diagram::half_edge(s[0], slot + 1))];
    return std::pair{std::min(a, b), std::max(a, b)};
  };
  std::vector<TwoSubgroupPair> out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      const auto& s = subs[i];
      const auto& t = subs[j];
      if (s[0] == t[0] || s[0] == t[1] || s[1] == t[0] || s[1] == t[1]) continue;
      auto [p1, p2] = arcs(s);
      auto [q1, q2] = arcs(t);
      bool q1_inside = p1 < q1 && q1 < p2;
      bool q2_inside = p1 < q2 && q2 < p2;
      if (q1_inside != q2_inside) out.push_back({s, t});
    }
  }
  return out;
}

std::vector<Witness> kb_witnesses(const Diagram& d) {
  require_valid(d);
  std::vector<Witness> out;
  for (const auto& g : find_groups(d)) {
    if (g.sign == Sign::positive && g.size() >= 3) {
      out.push_back({"positive " + std::to_string(g.size()) + "-group", g.crossings});
    }
  }
  for (const auto& p : find_interleaved_2_sequences(d)) {
    out.push_back({"interleaved 2-sequence", {p[0][0], p[0][1], p[1][0], p[1][1]}});
  }
  for (const auto& site : enumerate_sites(d, SiteKind::OTS)) {
    Diagram img = apply_OTS(d, site);
    if (!find_rots_tangles(img).empty()) out.push_back({"ots-rots tangle", site.crossings});
    for (const auto& g : find_groups(img)) {
      if (g.sign == Sign::negative && g.size() >= 2) {
        out.push_back({"negative ots-2-group", site.crossings});
        break;
      }
    }
  }
  return out;
}

bool is_KB_structural(const Diagram& d) { return !is_KA(d) && !kb_witnesses(d).empty(); }

bool is_KB_operational(const Diagram& d) {
  if (is_KA(d)) return false;
  for (const auto& site : enumerate_sites(d, SiteKind::OTS)) {
    if (is_KA(apply_OTS(d, site))) return true;
  }
  for (const auto& s : positive_2_subgroups(d)) {
    if (is_KA(apply_T(d, std::vector<int>{s[0], s[1]}))) return true;
  }
  return false;
}

ClassLabel classify(const Diagram& d) {
  ClassLabel label;
  label.witnesses = ka_witnesses(d);
  if (!label.witnesses.empty()) {
    label.value = KnotClass::KA;
    return label;
  }
  label.witnesses = kb_witnesses(d);
  label.value = label.witnesses.empty() ? KnotClass::KC : KnotClass::KB;
  return label;
}

ClassLabel classify_knot(const Diagram& d, std::size_t flype_cap) {
  ClassLabel best = classify(d);
  for (const auto& m : flype_closure_diagrams(d, flype_cap)) {
    if (best.value == KnotClass::KA) break;
    ClassLabel l = classify(m);
    if (l.value < best.value) best = std::move(l);
  }
  return best;
}

}  // namespace knotforge
