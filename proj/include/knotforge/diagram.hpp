#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotforge {

// A knot shadow stored as a 4-regular combinatorial map. Half-edge h belongs
// to crossing h / 4 at slot h % 4; slots are in counterclockwise order and a
// strand entering at slot s leaves at slot s + 2. Over/under is implicit: an
// alternating diagram is determined by its shadow up to mirror image.
class Diagram {
 public:
  Diagram() = default;
  Diagram(int crossings, std::vector<int> pairing);

  int crossing_count() const { return n_; }
  int half_edge_count() const { return 4 * n_; }
  int pair(int h) const { return pair_[h]; }
  const std::vector<int>& pairing() const { return pair_; }

  static int crossing_of(int h) { return h >> 2; }
  static int slot_of(int h) { return h & 3; }
  static int half_edge(int c, int s) { return 4 * c + (s & 3); }
  static int rot_next(int h) { return (h & ~3) | ((h + 1) & 3); }
  static int rot_prev(int h) { return (h & ~3) | ((h + 3) & 3); }
  static int opposite(int h) { return (h & ~3) | ((h + 2) & 3); }

  // Canonical id of the edge containing h: the smaller of its two half-edges.
  int edge_of(int h) const { return h < pair_[h] ? h : pair_[h]; }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.n_ == b.n_ && a.pair_ == b.pair_;
  }

 private:
  int n_ = 0;
  std::vector<int> pair_;
};

using Code = std::vector<std::uint8_t>;

struct Visit {
  int crossing;
  int entry_slot;
  friend bool operator==(const Visit&, const Visit&) = default;
};

struct GaussEntry {
  int label;
  int bit;
  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

struct SignedGaussCode {
  std::vector<GaussEntry> entries;
  friend bool operator==(const SignedGaussCode&, const SignedGaussCode&) = default;
};

struct GroupCodeEntry {
  int size;
  int label;
  bool negated;
  friend bool operator==(const GroupCodeEntry&, const GroupCodeEntry&) = default;
};

using GroupCode = std::vector<GroupCodeEntry>;
using DtCode = std::vector<int>;

// Faces of the rotation system. A corner is named by the half-edge h whose
// slot opens it: the corner lies between slot(h) and slot(h) + 1. The corner
// following h on its face is pair(rot_next(h)).
struct FaceSet {
  std::vector<int> face_of_corner;
  std::vector<std::vector<int>> cycles;

  int count() const { return static_cast<int>(cycles.size()); }
  // Faces on the two sides of the edge through h: the corners before and
  // after slot(h) at crossing(h).
  int left_of(int h) const { return face_of_corner[Diagram::rot_prev(h)]; }
  int right_of(int h) const { return face_of_corner[h]; }
};

Diagram figure_eight();

std::vector<std::string> validate(const Diagram& d);
void require_valid(const Diagram& d);
bool is_single_component(const Diagram& d);

FaceSet compute_faces(const Diagram& d);
FaceSet faces(const Diagram& d);

std::vector<Visit> traverse(const Diagram& d, int start);
std::vector<int> unsigned_gauss(const Diagram& d, int start);

Diagram mirror(const Diagram& d);
Diagram relabel(const Diagram& d, const std::vector<int>& new_index);

SignedGaussCode to_signed_gauss(const Diagram& d, int start, bool reflect);
Diagram from_signed_gauss(const SignedGaussCode& code);
std::vector<Diagram> realize_unsigned_gauss(const std::vector<int>& seq);

Code encode(const SignedGaussCode& code);
SignedGaussCode decode(const Code& bytes);
Code canonical_code(const Diagram& d);
// Start half-edge and reflect flag realizing canonical_code(d).
std::pair<int, bool> canonical_start(const Diagram& d);

GroupCode to_group_code(const Diagram& d, int start);
DtCode to_dt_code(const Diagram& d);

std::string to_hex(const Code& bytes);
Code from_hex(std::string_view hex);

std::string format_unsigned_gauss(const std::vector<int>& seq);
std::string format_signed_gauss(const SignedGaussCode& code);
std::string format_group_code(const GroupCode& code);
std::string format_dt_code(const DtCode& code);
std::vector<int> parse_int_list(std::string_view text);
SignedGaussCode parse_signed_gauss(std::string_view text);

}  // namespace knotforge
