#include <algorithm>
#include <map>

#include "internal.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/tangles.hpp"

namespace knotforge {

std::vector<char> entry_flags(const Diagram& d) {
  std::vector<char> entry(d.half_edge_count(), 0);
  if (d.crossing_count() == 0) return entry;
  int h = 0;
  do {
    entry[h] = 1;
    h = d.pair(Diagram::opposite(h));
  } while (h != 0);
  return entry;
}

namespace {

// Bigon slot pairs per crossing: slot s means the bigon occupies slots s, s+1.
struct BigonInfo {
  std::vector<std::vector<std::pair<int, int>>> at;  // crossing -> (slot, neighbour)
};

BigonInfo find_bigons(const Diagram& d, const FaceSet& f) {
  BigonInfo info;
  info.at.resize(d.crossing_count());
  for (const auto& cyc : f.cycles) {
    if (cyc.size() != 2) continue;
    int c0 = Diagram::crossing_of(cyc[0]);
    int c1 = Diagram::crossing_of(cyc[1]);
    if (c0 == c1) continue;
    info.at[c0].emplace_back(Diagram::slot_of(cyc[0]), c1);
    info.at[c1].emplace_back(Diagram::slot_of(cyc[1]), c0);
  }
  return info;
}

Sign end_sign(const std::vector<char>& entry, const GroupEnd& e) {
  auto he = e.half_edges();
  return entry[he[0]] == entry[he[1]] ? Sign::positive : Sign::negative;
}

int entry_pair_slot(const std::vector<char>& entry, int c) {
  for (int s = 0; s < 4; ++s) {
    if (entry[Diagram::half_edge(c, s)] && entry[Diagram::half_edge(c, s + 1)]) return s;
  }
  throw InvalidDiagram("crossing without adjacent inbound slots");
}

}  // namespace

Group loner_group(const Diagram& d, int crossing, Sign pairing) {
  auto entry = entry_flags(d);
  int s = entry_pair_slot(entry, crossing);
  Group g;
  g.crossings = {crossing};
  g.sign = pairing;
  if (pairing == Sign::positive) {
    g.ends = {GroupEnd{crossing, s}, GroupEnd{crossing, s + 2}};
  } else {
    g.ends = {GroupEnd{crossing, (s + 1) & 3}, GroupEnd{crossing, (s + 3) & 3}};
  }
  return g;
}

std::vector<Group> find_groups(const Diagram& d) {
  require_valid(d);
  int n = d.crossing_count();
  FaceSet f = compute_faces(d);
  BigonInfo bi = find_bigons(d, f);
  auto entry = entry_flags(d);
  std::vector<char> done(n, 0);
  std::vector<Group> groups;
  for (int c = 0; c < n; ++c) {
    if (done[c]) continue;
    Group g;
    if (bi.at[c].empty()) {
      done[c] = 1;
      int s = entry_pair_slot(entry, c);
      g.crossings = {c};
      g.sign = Sign::positive;
      g.ends = {GroupEnd{c, s}, GroupEnd{c, s + 2}};
      groups.push_back(std::move(g));
      continue;
    }
    // Collect the component of the bigon graph.
    std::vector<int> comp{c};
    done[c] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (auto [slot, nb] : bi.at[comp[i]]) {
        if (!done[nb]) {
          done[nb] = 1;
          comp.push_back(nb);
        }
      }
    }
    int start = -1;
    for (int x : comp) {
      if (bi.at[x].size() == 1 && (start < 0 || x < start)) start = x;
    }
    g.cyclic = start < 0;
    if (g.cyclic) start = *std::min_element(comp.begin(), comp.end());
    // Walk the chain.
    g.crossings.push_back(start);
    int prev = -1, cur = start;
    while (true) {
      int nxt = -1;
      for (auto [slot, nb] : bi.at[cur]) {
        if (nb != prev && nb != cur &&
            std::find(g.crossings.begin(), g.crossings.end(), nb) == g.crossings.end()) {
          nxt = nb;
          break;
        }
      }
      if (nxt < 0) break;
      g.crossings.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    if (g.cyclic) {
      int slot = bi.at[start][0].first;
      auto he0 = Diagram::half_edge(start, slot);
      auto he1 = Diagram::half_edge(start, slot + 1);
      g.sign = entry[he0] == entry[he1] ? Sign::positive : Sign::negative;
      g.ends = {GroupEnd{start, slot}, GroupEnd{start, slot + 2}};
    } else {
      int first = g.crossings.front();
      int last = g.crossings.back();
      g.ends[0] = GroupEnd{first, (bi.at[first][0].first + 2) & 3};
      g.ends[1] = GroupEnd{last, (bi.at[last][0].first + 2) & 3};
      g.sign = end_sign(entry, g.ends[0]);
    }
    groups.push_back(std::move(g));
  }
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    return *std::min_element(a.crossings.begin(), a.crossings.end()) <
           *std::min_element(b.crossings.begin(), b.crossings.end());
  });
  return groups;
}

int group_of(const std::vector<Group>& groups, int crossing) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& cs = groups[i].crossings;
    if (std::find(cs.begin(), cs.end(), crossing) != cs.end()) return static_cast<int>(i);
  }
  return -1;
}

int default_side(const Group& g) {
  auto a = g.ends[0].half_edges();
  auto b = g.ends[1].half_edges();
  return std::min(a[0], a[1]) <= std::min(b[0], b[1]) ? 0 : 1;
}

GroupCode to_group_code(const Diagram& d, int start) {
  auto visits = traverse(d, start);
  auto groups = find_groups(d);
  int n = d.crossing_count();
  std::vector<int> gid(n);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (int c : groups[i].crossings) gid[c] = static_cast<int>(i);
  }
  if (groups.size() == 1 && groups[0].cyclic) {
    int k = groups[0].size();
    return {{k, 1, false}, {k, 1, groups[0].sign == Sign::negative}};
  }
  // Rotate so the sequence starts where a new group run begins.
  int m = static_cast<int>(visits.size());
  int offset = 0;
  while (offset < m && gid[visits[offset].crossing] ==
                           gid[visits[(offset + m - 1) % m].crossing]) {
    ++offset;
  }
  if (offset == m) offset = 0;
  std::vector<int> label(groups.size(), 0), seen(groups.size(), 0);
  int next = 0;
  GroupCode code;
  for (int i = 0; i < m; ++i) {
    int g = gid[visits[(offset + i) % m].crossing];
    int prev = gid[visits[(offset + i + m - 1) % m].crossing];
    if (i > 0 && g == prev) continue;
    if (label[g] == 0) label[g] = ++next;
    ++seen[g];
    bool neg = groups[g].sign == Sign::negative && seen[g] == 2;
    code.push_back({groups[g].size(), label[g], neg});
  }
  return code;
}

bool Tangle::contains(int c) const {
  return std::binary_search(crossings.begin(), crossings.end(), c);
}

Tangle make_tangle(const Diagram& d, std::vector<int> crossings) {
  std::sort(crossings.begin(), crossings.end());
  crossings.erase(std::unique(crossings.begin(), crossings.end()), crossings.end());
  Tangle t;
  t.crossings = std::move(crossings);
  std::vector<char> in(d.crossing_count(), 0);
  for (int c : t.crossings) in[c] = 1;
  for (int c : t.crossings) {
    for (int s = 0; s < 4; ++s) {
      int h = Diagram::half_edge(c, s);
      if (!in[Diagram::crossing_of(d.pair(h))]) t.incident_edges.push_back(h);
    }
  }
  return t;
}

namespace detail {

CrossingSet to_mask(int n, const std::vector<int>& crossings) {
  CrossingSet m(n, 0);
  for (int c : crossings) m[c] = 1;
  return m;
}

std::vector<int> from_mask(const CrossingSet& mask) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(mask.size()); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

bool has_loop(const Diagram& d) {
  for (int h = 0; h < d.half_edge_count(); ++h) {
    if (Diagram::crossing_of(h) == Diagram::crossing_of(d.pair(h))) return true;
  }
  return false;
}

bool prime_by_faces(const Diagram& d, const FaceSet& f) {
  std::vector<std::pair<int, int>> seen;
  seen.reserve(2 * d.crossing_count());
  for (int h = 0; h < d.half_edge_count(); ++h) {
    if (h > d.pair(h)) continue;
    int a = f.left_of(h), b = f.right_of(h);
    if (a == b) return false;
    seen.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace detail

std::vector<std::vector<int>> find_2_tangles(const Diagram& d) {
  require_valid(d);
  int n = d.crossing_count();
  std::vector<int> edges;
  for (int h = 0; h < d.half_edge_count(); ++h) {
    if (h < d.pair(h)) edges.push_back(h);
  }
  std::vector<std::vector<int>> found;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto cut = [&](int h) {
        int e = d.edge_of(h);
        return e == edges[i] || e == edges[j];
      };
      std::vector<char> seen(n, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
          int h = Diagram::half_edge(c, s);
          if (cut(h)) continue;
          int o = Diagram::crossing_of(d.pair(h));
          if (!seen[o]) {
            seen[o] = 1;
            stack.push_back(o);
          }
        }
      }
      std::vector<int> side;
      for (int c = 0; c < n; ++c) {
        if (!seen[c]) side.push_back(c);
      }
      if (side.empty()) continue;
      if (std::find(found.begin(), found.end(), side) == found.end()) {
        found.push_back(std::move(side));
      }
    }
  }
  return found;
}

bool is_prime(const Diagram& d) { return find_2_tangles(d).empty(); }

bool is_reduced(const Diagram& d) {
  require_valid(d);
  return !detail::has_loop(d);
}

}  // namespace knotforge
