#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotforge/canonical.hpp"
#include "knotforge/diagram.hpp"

namespace knotforge {

enum class KnotClass { KA, KB, KC };

const char* knot_class_name(KnotClass c);

struct Witness {
  std::string description;  // e.g. "negative 2-group", "interleaved 2-sequence"
  std::vector<int> crossings;
};

struct ClassLabel {
  KnotClass value = KnotClass::KC;
  std::vector<Witness> witnesses;
  // "K_A (negative 2-group)" style summary using the first witness.
  std::string to_string() const;
};

// Two crossing-disjoint positive 2-subgroups, each given in chain order.
using TwoSubgroupPair = std::array<std::array<int, 2>, 2>;

// Negative groups of size 2 or more, then rots tangles.
std::vector<Witness> ka_witnesses(const Diagram& d);
bool is_KA(const Diagram& d);

// Consecutive crossing pairs of positive groups, cyclic groups included.
std::vector<std::array<int, 2>> positive_2_subgroups(const Diagram& d);

std::vector<TwoSubgroupPair> find_interleaved_2_sequences(const Diagram& d);

// Positive groups of size 3 or more, interleaved 2-sequences, then OTS sites
// whose image has a rots tangle (ots-rots tangle) or a negative group of size
// 2 or more (negative ots-2-group).
std::vector<Witness> kb_witnesses(const Diagram& d);
bool is_KB_structural(const Diagram& d);

// Not K_A, and one OTS or one turn of a positive 2-subgroup yields a K_A
// diagram.
bool is_KB_operational(const Diagram& d);

ClassLabel classify(const Diagram& d);

// Label of the knot: the best label over the diagram's flype closure, with
// K_A before K_B before K_C.
ClassLabel classify_knot(const Diagram& d, std::size_t flype_cap = default_flype_cap);

}  // namespace knotforge
