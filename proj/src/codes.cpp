#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "internal.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/errors.hpp"

namespace knotforge {

namespace detail {

Code canonical_code_unchecked(const Diagram& d) {
  const int n = d.crossing_count();
  const int m = 2 * n;
  const auto& pair = d.pairing();
  Code best(m), buf(m);
  bool have_best = false;
  std::vector<int> label(n), first_slot(n), stamp(n, 0);
  int cur = 0;
  for (int start = 0; start < 4 * n; ++start) {
    for (int reflect = 0; reflect < 2; ++reflect) {
      ++cur;
      int next = 0;
      int h = start;
      bool less = !have_best;
      bool aborted = false;
      for (int pos = 0; pos < m; ++pos) {
        int c = h >> 2;
        int s = h & 3;
        std::uint8_t byte;
        if (stamp[c] != cur) {
          stamp[c] = cur;
          label[c] = next++;
          first_slot[c] = s;
          byte = static_cast<std::uint8_t>(label[c] << 1);
        } else {
          int bit = (first_slot[c] == ((s + 1) & 3)) ? 1 : 0;
          byte = static_cast<std::uint8_t>((label[c] << 1) | (bit ^ reflect));
        }
        if (!less) {
          if (byte > best[pos]) {
            aborted = true;
            break;
          }
          if (byte < best[pos]) less = true;
        }
        buf[pos] = byte;
        h = pair[(h & ~3) | ((h + 2) & 3)];
      }
      if (!aborted && less) {
        best.swap(buf);
        have_best = true;
      }
    }
  }
  return best;
}

bool single_strand(const Diagram& d) { return is_single_component(d); }

}  // namespace detail

SignedGaussCode to_signed_gauss(const Diagram& d, int start, bool reflect) {
  auto visits = traverse(d, start);
  int n = d.crossing_count();
  std::vector<int> label(n, 0), first_slot(n, -1);
  int next = 0;
  SignedGaussCode code;
  code.entries.reserve(visits.size());
  for (const auto& v : visits) {
    if (label[v.crossing] == 0) {
      label[v.crossing] = ++next;
      first_slot[v.crossing] = v.entry_slot;
      code.entries.push_back({label[v.crossing], 0});
    } else {
      int bit = first_slot[v.crossing] == ((v.entry_slot + 1) & 3) ? 1 : 0;
      code.entries.push_back({label[v.crossing], bit ^ (reflect ? 1 : 0)});
    }
  }
  return code;
}

namespace {

// Relabels to first-appearance order and checks multiplicities.
std::vector<int> normalize_labels(const std::vector<int>& raw) {
  if (raw.empty() || raw.size() % 2 != 0) {
    throw Malformed("code length must be a positive even number");
  }
  std::vector<std::pair<int, int>> seen;  // raw label -> count
  std::vector<int> out;
  out.reserve(raw.size());
  for (int r : raw) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == r; });
    if (it == seen.end()) {
      seen.emplace_back(r, 1);
      out.push_back(static_cast<int>(seen.size()));
    } else {
      ++it->second;
      out.push_back(static_cast<int>(it - seen.begin()) + 1);
    }
  }
  for (const auto& [lab, count] : seen) {
    if (count != 2) {
      throw Malformed("label " + std::to_string(lab) + " appears " +
                      std::to_string(count) + " times");
    }
  }
  if (seen.size() > 128) throw Malformed("more than 128 crossings");
  return out;
}

}  // namespace

Diagram from_signed_gauss(const SignedGaussCode& code) {
  std::vector<int> raw;
  raw.reserve(code.entries.size());
  for (const auto& e : code.entries) raw.push_back(e.label);
  auto labels = normalize_labels(raw);
  int m = static_cast<int>(labels.size());
  int n = m / 2;
  std::vector<int> entry(m), exit(m);
  std::vector<char> visited(n, 0);
  for (int k = 0; k < m; ++k) {
    int c = labels[k] - 1;
    int bit = code.entries[k].bit;
    if (bit != 0 && bit != 1) throw Malformed("chirality bit must be 0 or 1");
    if (!visited[c]) {
      visited[c] = 1;
      if (bit != 0) throw Malformed("chirality bit set on a first visit");
      entry[k] = Diagram::half_edge(c, 0);
      exit[k] = Diagram::half_edge(c, 2);
    } else {
      entry[k] = Diagram::half_edge(c, bit ? 3 : 1);
      exit[k] = Diagram::half_edge(c, bit ? 1 : 3);
    }
  }
  std::vector<int> pair(4 * n);
  for (int k = 0; k < m; ++k) {
    int a = exit[k];
    int b = entry[(k + 1) % m];
    pair[a] = b;
    pair[b] = a;
  }
  Diagram d(n, std::move(pair));
  int f = compute_faces(d).count();
  if (n - 2 * n + f != 2) throw NonPlanar("signed Gauss code is not planar");
  return d;
}

std::vector<Diagram> realize_unsigned_gauss(const std::vector<int>& seq) {
  auto labels = normalize_labels(seq);
  int n = static_cast<int>(labels.size()) / 2;
  if (n > 24) throw InvalidArgument("realization search limited to 24 crossings");
  std::vector<Diagram> out;
  std::set<Code> seen;
  for (long mask = 0; mask < (1L << n); ++mask) {
    SignedGaussCode code;
    std::vector<char> visited(n, 0);
    for (int lab : labels) {
      int c = lab - 1;
      int bit = visited[c] ? static_cast<int>((mask >> c) & 1) : 0;
      visited[c] = 1;
      code.entries.push_back({lab, bit});
    }
    try {
      Diagram d = from_signed_gauss(code);
      if (seen.insert(detail::canonical_code_unchecked(d)).second) {
        out.push_back(std::move(d));
      }
    } catch (const NonPlanar&) {
    }
  }
  return out;
}

Code encode(const SignedGaussCode& code) {
  Code out;
  out.reserve(code.entries.size());
  for (const auto& e : code.entries) {
    if (e.label < 1 || e.label > 128) throw Malformed("label out of byte range");
    out.push_back(static_cast<std::uint8_t>(((e.label - 1) << 1) | (e.bit & 1)));
  }
  return out;
}

SignedGaussCode decode(const Code& bytes) {
  SignedGaussCode code;
  code.entries.reserve(bytes.size());
  for (auto b : bytes) code.entries.push_back({(b >> 1) + 1, b & 1});
  return code;
}

Code canonical_code(const Diagram& d) {
  require_valid(d);
  return detail::canonical_code_unchecked(d);
}

std::pair<int, bool> canonical_start(const Diagram& d) {
  Code best = canonical_code(d);
  for (int start = 0; start < d.half_edge_count(); ++start) {
    for (int r = 0; r < 2; ++r) {
      if (encode(to_signed_gauss(d, start, r == 1)) == best) return {start, r == 1};
    }
  }
  throw Error("canonical start not found");
}

DtCode to_dt_code(const Diagram& d) {
  require_valid(d);
  int n = d.crossing_count();
  DtCode best;
  std::vector<int> first_pos(n);
  for (int start = 0; start < d.half_edge_count(); ++start) {
    std::fill(first_pos.begin(), first_pos.end(), 0);
    std::vector<int> partner(2 * n + 1, 0);
    int h = start;
    for (int pos = 1; pos <= 2 * n; ++pos) {
      int c = Diagram::crossing_of(h);
      if (first_pos[c] == 0) {
        first_pos[c] = pos;
      } else {
        partner[first_pos[c]] = pos;
        partner[pos] = first_pos[c];
      }
      h = d.pair(Diagram::opposite(h));
    }
    DtCode dt;
    for (int odd = 1; odd < 2 * n; odd += 2) {
      if (partner[odd] % 2 != 0) throw Error("visit parity violated; diagram is not planar");
      dt.push_back(partner[odd]);
    }
    if (best.empty() || dt < best) best = dt;
  }
  return best;
}

std::string to_hex(const Code& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(2 * bytes.size());
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

Code from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw Malformed("hex string has odd length");
  auto val = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw Malformed(std::string("invalid hex digit '") + ch + "'");
  };
  Code out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(val(hex[i]) * 16 + val(hex[i + 1])));
  }
  return out;
}

namespace {

template <typename T, typename F>
std::string join(const std::vector<T>& items, F render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += render(items[i]);
  }
  return out;
}

}  // namespace

std::string format_unsigned_gauss(const std::vector<int>& seq) {
  return join(seq, [](int v) { return std::to_string(v); });
}

std::string format_signed_gauss(const SignedGaussCode& code) {
  return join(code.entries, [](const GaussEntry& e) {
    return std::to_string(e.label) + ":" + std::to_string(e.bit);
  });
}

std::string format_group_code(const GroupCode& code) {
  return join(code, [](const GroupCodeEntry& e) {
    return std::string(e.negated ? "-" : "") + std::to_string(e.size) + "_" +
           std::to_string(e.label);
  });
}

std::string format_dt_code(const DtCode& code) {
  return join(code, [](int v) { return std::to_string(v); });
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') {
      ++i;
      continue;
    }
    int value = 0;
    auto res = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (res.ec != std::errc()) {
      throw Malformed("cannot parse integer list near '" + std::string(text.substr(i)) + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(res.ptr - text.data());
  }
  return out;
}

SignedGaussCode parse_signed_gauss(std::string_view text) {
  SignedGaussCode code;
  std::string s(text);
  for (char& ch : s) {
    if (ch == ',') ch = ' ';
  }
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos) throw Malformed("signed Gauss entry '" + tok + "' lacks ':'");
    int label = 0, bit = 0;
    auto r1 = std::from_chars(tok.data(), tok.data() + colon, label);
    auto r2 = std::from_chars(tok.data() + colon + 1, tok.data() + tok.size(), bit);
    if (r1.ec != std::errc() || r2.ec != std::errc()) {
      throw Malformed("cannot parse signed Gauss entry '" + tok + "'");
    }
    code.entries.push_back({label, bit});
  }
  return code;
}

}  // namespace knotforge
