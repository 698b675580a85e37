#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge {

inline constexpr std::size_t default_flype_cap = 1000000;

struct CanonicalKey {
  Code bytes;
  int crossing_count = 0;
  std::string hex() const { return to_hex(bytes); }
  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) { return a.bytes == b.bytes; }
  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) { return a.bytes < b.bytes; }
};

// Canonical codes of every diagram reachable from d by single-crossing flypes,
// sorted. Throws CapExceeded once more than cap diagrams are reached.
std::vector<Code> flype_closure(const Diagram& d, std::size_t cap = default_flype_cap);

// The same closure as diagrams, in discovery order starting with d.
std::vector<Diagram> flype_closure_diagrams(const Diagram& d, std::size_t cap = default_flype_cap);

// Maps the canonical code of every diagram in an explored closure to the key
// of that closure. Safe for concurrent use.
class KeyCache {
 public:
  std::optional<Code> find(const Code& code) const;
  void insert(const std::vector<Code>& members, const Code& key);
  std::size_t size() const;
  void clear();

 private:
  struct Hash {
    std::size_t operator()(const Code& c) const noexcept;
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<Code, Code, Hash> map_;
};

CanonicalKey canonical_key(const Diagram& d, std::size_t cap = default_flype_cap);
CanonicalKey canonical_key(const Diagram& d, KeyCache& cache,
                           std::size_t cap = default_flype_cap);

// The diagram whose canonical code is the key.
Diagram representative(const CanonicalKey& key);

}  // namespace knotforge
