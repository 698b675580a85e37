#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "knotforge/canonical.hpp"
#include "knotforge/diagram.hpp"

namespace knotforge {

struct LevelStats {
  int n = 0;
  std::size_t total = 0;
  std::size_t step1 = 0;
  std::size_t step2 = 0;
  double step1_fraction = 0.0;
  double seconds = 0.0;
  std::size_t cap_events = 0;
};

struct GenerationStats {
  std::vector<LevelStats> levels;
};

struct GenerateConfig {
  int threads = 1;
  std::size_t flype_cap = default_flype_cap;
  // Apply operators to every member of each knot's flype closure. With false
  // only the stored representative is used, which misses knots from n = 12 on.
  bool all_members = true;
  std::function<void(const LevelStats&)> on_level;
};

// Diagram serialization: one byte per half-edge holding its partner.
Code diagram_blob(const Diagram& d);
Diagram diagram_from_blob(const Code& blob);

// Per-level sets of canonical keys with one representative diagram each,
// persisted as knots_NN.db files in root.
class KnotStore {
 public:
  explicit KnotStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  static std::string file_name(int n);

  bool insert_if_absent(int n, const Code& key, const Code& blob);
  bool contains(int n, const Code& key) const;
  std::optional<Code> blob(int n, const Code& key) const;
  std::size_t count(int n) const;
  std::vector<int> levels() const;
  std::vector<std::pair<Code, Code>> entries(int n) const;
  void clear_level(int n);

  void flush(int n) const;
  void load(int n);
  // Loads every knots_NN.db file found in root.
  void load_all();

 private:
  std::filesystem::path root_;
  mutable std::mutex mutex_;
  std::map<int, std::map<Code, Code>> levels_;
};

// Keys at n + 1 produced by D and ROTS from the given level-n diagrams.
std::set<Code> step1(const std::vector<Diagram>& knots, const GenerateConfig& config,
                     KeyCache& cache);

// Closure of the seeds under OTS and T2. Returns every key reached, seeds
// included.
std::set<Code> step2_closure(const std::set<Code>& seeds, const GenerateConfig& config,
                             KeyCache& cache);

// Runs both steps from the figure-eight up to n_max crossings, writing every
// level and stats.json to the store.
GenerationStats generate(int n_max, KnotStore& store, const GenerateConfig& config = {});

void write_stats(const std::filesystem::path& file, const GenerationStats& stats);
GenerationStats read_stats(const std::filesystem::path& file);

}  // namespace knotforge
