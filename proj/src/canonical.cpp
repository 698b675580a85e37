#include "knotforge/canonical.hpp"

#include <algorithm>
#include <mutex>
#include <string_view>
#include <unordered_set>

#include "internal.hpp"
#include "knotforge/errors.hpp"

namespace knotforge {

namespace {

struct CodeHash {
  std::size_t operator()(const Code& c) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(c.data()), c.size()));
  }
};

template <typename Visit>
void explore(const Diagram& d, std::size_t cap, Visit visit) {
  require_valid(d);
  std::unordered_set<Code, CodeHash> seen;
  std::vector<Diagram> queue{d};
  Code first = detail::canonical_code_unchecked(d);
  seen.insert(first);
  visit(d, first);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Diagram cur = queue[i];
    detail::for_each_crossing_flype(cur, [&](const Diagram& next) {
      Code code = detail::canonical_code_unchecked(next);
      if (!seen.insert(code).second) return;
      if (seen.size() > cap) throw CapExceeded(cap, "starting from " + to_hex(first));
      visit(next, code);
      queue.push_back(next);
    });
  }
}

}  // namespace

std::size_t KeyCache::Hash::operator()(const Code& c) const noexcept { return CodeHash{}(c); }

std::vector<Code> flype_closure(const Diagram& d, std::size_t cap) {
  std::vector<Code> out;
  explore(d, cap, [&](const Diagram&, const Code& code) { out.push_back(code); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Diagram> flype_closure_diagrams(const Diagram& d, std::size_t cap) {
  std::vector<Diagram> out;
  explore(d, cap, [&](const Diagram& m, const Code&) { out.push_back(m); });
  return out;
}

std::optional<Code> KeyCache::find(const Code& code) const {
  std::shared_lock lock(mutex_);
  auto it = map_.find(code);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void KeyCache::insert(const std::vector<Code>& members, const Code& key) {
  std::unique_lock lock(mutex_);
  for (const auto& m : members) map_[m] = key;
}

std::size_t KeyCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void KeyCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

CanonicalKey canonical_key(const Diagram& d, std::size_t cap) {
  auto closure = flype_closure(d, cap);
  return {closure.front(), d.crossing_count()};
}

CanonicalKey canonical_key(const Diagram& d, KeyCache& cache, std::size_t cap) {
  require_valid(d);
  Code code = detail::canonical_code_unchecked(d);
  if (auto hit = cache.find(code)) return {*hit, d.crossing_count()};
  auto closure = flype_closure(d, cap);
  cache.insert(closure, closure.front());
  return {closure.front(), d.crossing_count()};
}

Diagram representative(const CanonicalKey& key) { return from_signed_gauss(decode(key.bytes)); }

}  // namespace knotforge
