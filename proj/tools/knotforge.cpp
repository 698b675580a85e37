#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotforge/canonical.hpp"
#include "knotforge/classify.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/enumerator.hpp"
#include "knotforge/errors.hpp"
#include "knotforge/tangles.hpp"

using namespace knotforge;
using nlohmann::json;

namespace {

// Raised for lookups and comparisons that fail; maps to exit code 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;

  int max_crossings = 0;
  std::string out;
  int threads = 0;
  std::size_t flype_cap = default_flype_cap;
  bool representative_only = false;

  std::string db;
  std::string expect;

  std::string key;
  std::string gauss;
  std::string format = "gauss";

  std::vector<int> levels;
};

int thread_count(int flag) {
  if (const char* env = std::getenv("KNOTFORGE_THREADS")) {
    try {
      int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw InvalidArgument("KNOTFORGE_THREADS must be a positive integer");
  }
  if (flag > 0) return flag;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string orbit_text(const Diagram& d) {
  std::ostringstream out;
  auto groups = find_groups(d);
  auto list = [](const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
    return s + "}";
  };
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    Orbit o = compute_orbit(d, groups, g, default_side(g));
    out << "group " << i << " " << (g.sign == Sign::positive ? "+" : "-") << g.size() << " "
        << list(g.crossings) << (o.torus() ? " torus" : "") << "\n";
    for (std::size_t k = 0; k < o.positions.size(); ++k) {
      const auto& p = o.positions[k];
      out << "  position " << k << ": ";
      if (p.is_group) {
        out << "group " << p.group << "\n";
      } else {
        out << "edges " << d.edge_of(p.edges[0]) << " " << d.edge_of(p.edges[1]) << "\n";
      }
      if (k < o.min_tangles.size()) out << "  min-tangle " << k << ": " << list(o.min_tangles[k].crossings) << "\n";
    }
  }
  std::string s = out.str();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string render(const Diagram& d, const std::string& format) {
  if (format == "gauss") {
    auto [start, reflect] = canonical_start(d);
    return format_signed_gauss(to_signed_gauss(d, start, reflect));
  }
  if (format == "group") return format_group_code(to_group_code(d, 0));
  if (format == "dt") return format_dt_code(to_dt_code(d));
  if (format == "orbit") return orbit_text(d);
  if (format == "class") return classify_knot(d).to_string();
  if (format == "key") return canonical_key(d).hex();
  throw InvalidArgument("unknown format " + format);
}

Diagram diagram_from_gauss_text(const std::string& text) {
  if (text.find(':') != std::string::npos) return from_signed_gauss(parse_signed_gauss(text));
  auto seq = parse_int_list(text);
  std::vector<Diagram> found;
  try {
    found = realize_unsigned_gauss(seq);
  } catch (const Error& e) {
    throw Failure(std::string("unrealizable gauss: ") + e.what());
  }
  if (found.empty()) throw Failure("unrealizable gauss: no planar realization");
  return found.front();
}

int cmd_generate(const Options& o) {
  if (o.max_crossings < 5) throw InvalidArgument("max-crossings must be >= 5");
  if (o.flype_cap == 0) throw InvalidArgument("flype-cap must be positive");
  GenerateConfig config;
  config.threads = thread_count(o.threads);
  config.flype_cap = o.flype_cap;
  config.all_members = !o.representative_only;
  if (!o.json) {
    config.on_level = [](const LevelStats& l) {
      std::cerr << "n=" << l.n << " total=" << l.total << " (" << l.seconds << " s)\n";
    };
  }
  KnotStore store(o.out);
  auto stats = generate(o.max_crossings, store, config);
  if (o.json) {
    json counts = json::object();
    json levels = json::array();
    for (const auto& l : stats.levels) {
      counts[std::to_string(l.n)] = l.total;
      levels.push_back({{"n", l.n}, {"total", l.total}, {"step1", l.step1}, {"step2", l.step2},
                        {"step1_fraction", l.step1_fraction}, {"seconds", l.seconds}});
    }
    std::cout << json{{"counts", counts}, {"levels", levels}}.dump(2) << "\n";
    return 0;
  }
  std::string line;
  for (const auto& l : stats.levels) {
    if (!line.empty()) line += ", ";
    line += std::to_string(l.n) + ": " + std::to_string(l.total);
  }
  std::cout << line << "\n";
  std::cout << "n\ttotal\tstep1\tstep2\tstep1_fraction\tseconds\n";
  for (const auto& l : stats.levels) {
    std::cout << l.n << "\t" << l.total << "\t" << l.step1 << "\t" << l.step2 << "\t"
              << l.step1_fraction << "\t" << l.seconds << "\n";
  }
  return 0;
}

std::map<int, std::size_t> read_expect(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Failure("cannot open expect file " + file);
  std::map<int, std::size_t> out;
  try {
    auto j = json::parse(in);
    if (!j.is_object()) throw Failure("expect file must be a JSON object");
    for (const auto& [k, v] : j.items()) {
      std::size_t used = 0;
      int n = std::stoi(k, &used);
      if (used != k.size() || !v.is_number_unsigned()) throw Failure("bad expect entry " + k);
      out[n] = v.get<std::size_t>();
    }
  } catch (const json::exception& e) {
    throw Failure(std::string("malformed expect file: ") + e.what());
  } catch (const std::logic_error&) {
    throw Failure("malformed expect file: keys must be crossing numbers");
  }
  return out;
}

int cmd_verify(const Options& o) {
  auto expect = read_expect(o.expect);
  KnotStore store(o.db);
  bool all = true;
  json rows = json::array();
  for (auto [n, want] : expect) {
    std::optional<std::size_t> got;
    std::string error;
    try {
      store.load(n);
      got = store.count(n);
    } catch (const StoreError& e) {
      error = e.what();
    }
    bool pass = got && *got == want;
    all = all && pass;
    if (o.json) {
      json row{{"n", n}, {"expected", want}, {"pass", pass}};
      row["actual"] = got ? json(*got) : json(nullptr);
      if (!error.empty()) row["error"] = error;
      rows.push_back(row);
    } else {
      std::cout << (pass ? "PASS" : "FAIL") << " n=" << n << " expected=" << want;
      if (got) {
        std::cout << " actual=" << *got;
        if (!pass) std::cout << " diff=" << static_cast<long long>(*got) - static_cast<long long>(want);
      } else {
        std::cout << " error=" << error;
      }
      std::cout << "\n";
    }
  }
  if (o.json) std::cout << json{{"pass", all}, {"results", rows}}.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_show(const Options& o) {
  if (o.key.empty() == o.gauss.empty()) throw InvalidArgument("give exactly one of --key or --gauss");
  Diagram d;
  std::string key_hex;
  if (!o.key.empty()) {
    if (o.db.empty()) throw InvalidArgument("--key needs --db");
    Code key;
    try {
      key = from_hex(o.key);
    } catch (const Malformed&) {
      throw Failure("key not found");
    }
    if (key.empty() || key.size() % 2 != 0) throw Failure("key not found");
    int n = static_cast<int>(key.size() / 2);
    KnotStore store(o.db);
    try {
      store.load(n);
    } catch (const StoreError&) {
      throw Failure("key not found");
    }
    auto blob = store.blob(n, key);
    if (!blob) throw Failure("key not found");
    d = diagram_from_blob(*blob);
    key_hex = o.key;
  } else {
    d = diagram_from_gauss_text(o.gauss);
    if (!is_prime(d) || !is_reduced(d)) throw Failure("diagram is not prime and reduced");
    key_hex = canonical_key(d).hex();
  }
  std::string text = render(d, o.format);
  if (o.json) {
    std::cout << json{{"key", key_hex}, {"format", o.format}, {"value", text}}.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

int cmd_stats(const Options& o) {
  GenerationStats stats;
  try {
    stats = read_stats(std::filesystem::path(o.db) / "stats.json");
  } catch (const StoreError&) {
    throw Failure("no stats");
  }
  if (stats.levels.empty()) throw Failure("no stats");
  if (o.json) {
    json levels = json::array();
    for (const auto& l : stats.levels) {
      levels.push_back({{"n", l.n}, {"total", l.total}, {"step1", l.step1}, {"step2", l.step2},
                        {"step1_fraction", l.step1_fraction}, {"seconds", l.seconds}});
    }
    std::cout << levels.dump(2) << "\n";
    return 0;
  }
  std::cout << "n\ttotal\tstep1\tstep2\tstep1_fraction\tseconds\n";
  for (const auto& l : stats.levels) {
    std::cout << l.n << "\t" << l.total << "\t" << l.step1 << "\t" << l.step2 << "\t"
              << l.step1_fraction << "\t" << l.seconds << "\n";
  }
  return 0;
}

int cmd_export(const Options& o) {
  KnotStore store(o.db);
  try {
    if (o.levels.empty()) {
      store.load_all();
    } else {
      for (int n : o.levels) store.load(n);
    }
  } catch (const StoreError& e) {
    throw Failure(e.what());
  }
  json rows = json::array();
  for (int n : store.levels()) {
    for (const auto& [key, blob] : store.entries(n)) {
      Diagram d = diagram_from_blob(blob);
      std::string text = o.format == "key" ? to_hex(key) : render(d, o.format);
      if (o.json) {
        rows.push_back({{"n", n}, {"key", to_hex(key)}, {"value", text}});
      } else {
        std::cout << n << "\t" << to_hex(key) << "\t" << text << "\n";
      }
    }
  }
  if (o.json) std::cout << rows.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime alternating knot enumeration"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print machine-readable JSON");

  auto* gen = app.add_subcommand("generate", "Enumerate knots up to a crossing number");
  gen->add_option("--max-crossings", o.max_crossings, "Largest crossing number")->required();
  gen->add_option("--out", o.out, "Store directory")->required();
  gen->add_option("--threads", o.threads, "Worker threads (default: hardware parallelism)");
  gen->add_option("--flype-cap", o.flype_cap, "Largest flype closure explored per diagram");
  gen->add_flag("--representative-only", o.representative_only,
                "Apply operators to one diagram per knot instead of its whole flype closure");
  gen->add_flag("--json", o.json, "Print machine-readable JSON");

  auto* ver = app.add_subcommand("verify", "Compare store counts to expected counts");
  ver->add_option("--db", o.db, "Store directory")->required();
  ver->add_option("--expect", o.expect, "JSON object mapping crossing number to count")->required();
  ver->add_flag("--json", o.json, "Print machine-readable JSON");

  const std::vector<std::string> formats{"gauss", "group", "dt", "orbit", "class", "key"};
  auto* show = app.add_subcommand("show", "Print one knot");
  show->add_option("--key", o.key, "Canonical key in hex");
  show->add_option("--gauss", o.gauss, "Gauss sequence, e.g. 1,2,3,1,2,3 or 1:0 2:0 3:0 1:1 2:1 3:1");
  show->add_option("--db", o.db, "Store directory (needed with --key)");
  show->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  show->add_flag("--json", o.json, "Print machine-readable JSON");

  auto* stats = app.add_subcommand("stats", "Print generation statistics");
  stats->add_option("--db", o.db, "Store directory")->required();
  stats->add_flag("--json", o.json, "Print machine-readable JSON");

  auto* exp = app.add_subcommand("export", "Print every stored knot");
  exp->add_option("--db", o.db, "Store directory")->required();
  exp->add_option("--crossings", o.levels, "Crossing numbers to export (default: all)");
  exp->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  exp->add_flag("--json", o.json, "Print machine-readable JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*ver) return cmd_verify(o);
    if (*show) return cmd_show(o);
    if (*stats) return cmd_stats(o);
    if (*exp) return cmd_export(o);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Failure& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
