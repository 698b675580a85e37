#include "knotforge/enumerator.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/operators.hpp"

namespace knotforge {

Code diagram_blob(const Diagram& d) {
  if (d.half_edge_count() > 256) throw InvalidArgument("blob format holds at most 64 crossings");
  Code out;
  out.reserve(d.half_edge_count());
  for (int h = 0; h < d.half_edge_count(); ++h) out.push_back(static_cast<std::uint8_t>(d.pair(h)));
  return out;
}

Diagram diagram_from_blob(const Code& blob) {
  if (blob.empty() || blob.size() % 4 != 0) throw Malformed("blob length is not a multiple of 4");
  std::vector<int> p(blob.begin(), blob.end());
  Diagram d(static_cast<int>(blob.size() / 4), std::move(p));
  auto report = validate(d);
  if (!report.empty()) throw Malformed("blob does not encode a valid diagram: " + report.front());
  return d;
}

KnotStore::KnotStore(std::filesystem::path root) : root_(std::move(root)) {}

std::string KnotStore::file_name(int n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "knots_%02d.db", n);
  return buf;
}

bool KnotStore::insert_if_absent(int n, const Code& key, const Code& blob) {
  if (static_cast<int>(key.size()) != 2 * n) {
    throw InvalidArgument("key of length " + std::to_string(key.size()) + " does not belong to level " +
                          std::to_string(n));
  }
  std::lock_guard lock(mutex_);
  return levels_[n].emplace(key, blob).second;
}

bool KnotStore::contains(int n, const Code& key) const {
  std::lock_guard lock(mutex_);
  auto it = levels_.find(n);
  return it != levels_.end() && it->second.count(key) > 0;
}

std::optional<Code> KnotStore::blob(int n, const Code& key) const {
  std::lock_guard lock(mutex_);
  auto it = levels_.find(n);
  if (it == levels_.end()) return std::nullopt;
  auto jt = it->second.find(key);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::size_t KnotStore::count(int n) const {
  std::lock_guard lock(mutex_);
  auto it = levels_.find(n);
  return it == levels_.end() ? 0 : it->second.size();
}

std::vector<int> KnotStore::levels() const {
  std::lock_guard lock(mutex_);
  std::vector<int> out;
  for (const auto& [n, m] : levels_) out.push_back(n);
  return out;
}

std::vector<std::pair<Code, Code>> KnotStore::entries(int n) const {
  std::lock_guard lock(mutex_);
  std::vector<std::pair<Code, Code>> out;
  auto it = levels_.find(n);
  if (it != levels_.end()) out.assign(it->second.begin(), it->second.end());
  return out;
}

void KnotStore::clear_level(int n) {
  std::lock_guard lock(mutex_);
  levels_.erase(n);
}

void KnotStore::flush(int n) const {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) throw StoreError("cannot create " + root_.string() + ": " + ec.message());
  auto rows = entries(n);
  auto path = root_ / file_name(n);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    out << "KNOTDB 1 " << n << ' ' << rows.size() << '\n';
    for (const auto& [key, blob] : rows) out << to_hex(key) << ' ' << to_hex(blob) << '\n';
    if (!out) throw StoreError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw StoreError("cannot replace " + path.string() + ": " + ec.message());
}

void KnotStore::load(int n) {
  auto path = root_ / file_name(n);
  std::ifstream in(path);
  if (!in) throw StoreError("cannot open " + path.string());
  std::string magic;
  int version = 0, level = 0;
  std::size_t count = 0;
  if (!(in >> magic >> version >> level >> count) || magic != "KNOTDB" || version != 1 ||
      level != n) {
    throw StoreError("bad header in " + path.string());
  }
  std::map<Code, Code> rows;
  std::string key_hex, blob_hex;
  Code prev;
  while (in >> key_hex >> blob_hex) {
    Code key, blob;
    try {
      key = from_hex(key_hex);
      blob = from_hex(blob_hex);
    } catch (const Malformed& e) {
      throw StoreError(path.string() + ": " + e.what());
    }
    if (static_cast<int>(key.size()) != 2 * n) throw StoreError(path.string() + ": key of wrong length");
    if (!rows.empty() && !(prev < key)) throw StoreError(path.string() + ": keys not strictly increasing");
    prev = key;
    rows.emplace(std::move(key), std::move(blob));
  }
  if (rows.size() != count) {
    throw StoreError(path.string() + ": header says " + std::to_string(count) + " keys, found " +
                     std::to_string(rows.size()));
  }
  std::lock_guard lock(mutex_);
  levels_[n] = std::move(rows);
}

void KnotStore::load_all() {
  std::error_code ec;
  if (!std::filesystem::is_directory(root_, ec)) throw StoreError("no store at " + root_.string());
  for (const auto& entry : std::filesystem::directory_iterator(root_)) {
    auto name = entry.path().filename().string();
    int n = 0;
    char tail = 0;
    if (std::sscanf(name.c_str(), "knots_%d.d%c", &n, &tail) == 2 && name == file_name(n)) load(n);
  }
}

namespace {

// Runs fn(i) for i in [0, count) on up to threads workers; the first
// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed) {
        std::size_t i = next++;
        if (i >= count) break;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<Diagram> sources(const Diagram& d, const GenerateConfig& config) {
  if (!config.all_members) return {d};
  return flype_closure_diagrams(d, config.flype_cap);
}

// Applies every site of the given kinds to each source and collects keys.
std::set<Code> expand(const std::vector<Diagram>& knots, std::initializer_list<SiteKind> kinds,
                      const GenerateConfig& config, KeyCache& cache) {
  std::set<Code> out;
  std::mutex out_mutex;
  std::vector<SiteKind> ks(kinds);
  parallel_for(knots.size(), config.threads, [&](std::size_t i) {
    std::vector<Code> local;
    for (const auto& src : sources(knots[i], config)) {
      for (SiteKind k : ks) {
        for (const auto& site : enumerate_sites(src, k)) {
          Diagram img = apply_site(src, site);
          local.push_back(canonical_key(img, cache, config.flype_cap).bytes);
        }
      }
    }
    std::lock_guard lock(out_mutex);
    out.insert(local.begin(), local.end());
  });
  return out;
}

std::vector<Diagram> representatives(const std::set<Code>& keys) {
  std::vector<Diagram> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(from_signed_gauss(decode(k)));
  return out;
}

}  // namespace

std::set<Code> step1(const std::vector<Diagram>& knots, const GenerateConfig& config,
                     KeyCache& cache) {
  return expand(knots, {SiteKind::D, SiteKind::ROTS}, config, cache);
}

std::set<Code> step2_closure(const std::set<Code>& seeds, const GenerateConfig& config,
                             KeyCache& cache) {
  std::set<Code> all = seeds;
  std::set<Code> frontier = seeds;
  while (!frontier.empty()) {
    auto found = expand(representatives(frontier), {SiteKind::OTS, SiteKind::T2}, config, cache);
    frontier.clear();
    for (const auto& k : found) {
      if (all.insert(k).second) frontier.insert(k);
    }
  }
  return all;
}

GenerationStats generate(int n_max, KnotStore& store, const GenerateConfig& config) {
  if (n_max < 5) throw InvalidArgument("max-crossings must be >= 5");
  GenerationStats stats;
  for (int n = 4; n <= n_max; ++n) store.clear_level(n);
  Diagram seed = figure_eight();
  CanonicalKey seed_key = canonical_key(seed, config.flype_cap);
  store.insert_if_absent(4, seed_key.bytes, diagram_blob(representative(seed_key)));
  store.flush(4);
  std::set<Code> level{seed_key.bytes};
  for (int n = 4; n < n_max; ++n) {
    auto start = std::chrono::steady_clock::now();
    KeyCache cache;
    auto first = step1(representatives(level), config, cache);
    auto all = step2_closure(first, config, cache);
    for (const auto& k : all) {
      store.insert_if_absent(n + 1, k, diagram_blob(from_signed_gauss(decode(k))));
    }
    store.flush(n + 1);
    LevelStats ls;
    ls.n = n + 1;
    ls.total = all.size();
    ls.step1 = first.size();
    ls.step2 = all.size() - first.size();
    ls.step1_fraction = all.empty() ? 0.0 : static_cast<double>(first.size()) / all.size();
    ls.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    stats.levels.push_back(ls);
    write_stats(store.root() / "stats.json", stats);
    if (config.on_level) config.on_level(ls);
    level = std::move(all);
  }
  return stats;
}

void write_stats(const std::filesystem::path& file, const GenerationStats& stats) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : stats.levels) {
    arr.push_back({{"n", l.n},
                   {"total", l.total},
                   {"step1", l.step1},
                   {"step2", l.step2},
                   {"step1_fraction", l.step1_fraction},
                   {"seconds", l.seconds},
                   {"cap_events", l.cap_events}});
  }
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw StoreError("cannot write " + file.string());
  out << arr.dump(2) << '\n';
}

GenerationStats read_stats(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw StoreError("no stats at " + file.string());
  GenerationStats stats;
  try {
    auto arr = nlohmann::json::parse(in);
    for (const auto& r : arr) {
      LevelStats l;
      l.n = r.at("n").get<int>();
      l.total = r.at("total").get<std::size_t>();
      l.step1 = r.at("step1").get<std::size_t>();
      l.step2 = r.at("step2").get<std::size_t>();
      l.step1_fraction = r.at("step1_fraction").get<double>();
      l.seconds = r.at("seconds").get<double>();
      l.cap_events = r.value("cap_events", std::size_t{0});
      stats.levels.push_back(l);
    }
  } catch (const nlohmann::json::exception& e) {
    throw StoreError(file.string() + ": " + e.what());
  }
  return stats;
}

}  // namespace knotforge
