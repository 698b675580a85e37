#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

using knotforge::Diagram;

namespace {

using Pairing = std::vector<int>;

int walk_faces(const Pairing& p) {
  int m = static_cast<int>(p.size());
  std::vector<char> used(m, 0);
  int faces = 0;
  for (int h = 0; h < m; ++h) {
    if (used[h]) continue;
    ++faces;
    for (int c = h; !used[c];) {
      used[c] = 1;
      int turned = (c & ~3) | ((c + 1) & 3);
      c = p[turned];
    }
  }
  return faces;
}

Pairing flip(const Pairing& p) {
  auto f = [](int h) { return (h & ~3) | ((4 - (h & 3)) & 3); };
  Pairing q(p.size());
  for (std::size_t h = 0; h < p.size(); ++h) q[f(static_cast<int>(h))] = f(p[h]);
  return q;
}

// Traversal signature from one entry half-edge: crossing labels in order of
// appearance and each second visit's entry slot relative to the first.
std::vector<int> signature(const Pairing& p, int start) {
  int n = static_cast<int>(p.size()) / 4;
  std::vector<int> label(n, -1), first(n, 0), sig;
  int next = 0;
  int h = start;
  for (int k = 0; k < 2 * n; ++k) {
    int c = h / 4, s = h % 4;
    if (label[c] < 0) {
      label[c] = next++;
      first[c] = s;
      sig.push_back(label[c] * 4);
    } else {
      sig.push_back(label[c] * 4 + ((s - first[c] + 4) % 4));
    }
    int out = 4 * c + (s + 2) % 4;
    h = p[out];
  }
  return sig;
}

std::vector<int> canonical(const Pairing& p) {
  std::vector<int> best;
  for (const Pairing& q : {p, flip(p)}) {
    for (int s = 0; s < static_cast<int>(q.size()); ++s) {
      auto sig = signature(q, s);
      if (best.empty() || sig < best) best = sig;
    }
  }
  return best;
}

// Rotations and reversal of a Gauss word, relabelled by first appearance.
std::vector<int> normalized(const std::vector<int>& w) {
  std::vector<int> map(w.size() + 1, 0), out;
  int next = 0;
  for (int x : w) {
    if (!map[x]) map[x] = ++next;
    out.push_back(map[x]);
  }
  return out;
}

bool minimal_word(const std::vector<int>& w) {
  int m = static_cast<int>(w.size());
  std::vector<int> rot(m);
  for (int dir = 0; dir < 2; ++dir) {
    for (int r = 0; r < m; ++r) {
      for (int i = 0; i < m; ++i) {
        int idx = dir == 0 ? (r + i) % m : (r - i + m) % m;
        rot[i] = w[idx];
      }
      if (normalized(rot) < w) return false;
    }
  }
  return true;
}

// No cyclic interval of length 2 .. m-2 holds both visits of every label in it.
bool prime_word(const std::vector<int>& w) {
  int m = static_cast<int>(w.size());
  int n = m / 2;
  std::vector<int> count(n + 1);
  for (int start = 0; start < m; ++start) {
    std::fill(count.begin(), count.end(), 0);
    int open = 0;
    for (int len = 1; len <= m - 2; ++len) {
      int x = w[(start + len - 1) % m];
      if (++count[x] == 1) {
        ++open;
      } else {
        --open;
      }
      if (len >= 2 && open == 0) return false;
    }
  }
  return true;
}

void gauss_words(int n, const std::function<void(const std::vector<int>&)>& emit) {
  int m = 2 * n;
  std::vector<int> w(m, 0), first_pos(n + 1, -1);
  std::function<void(int, int)> rec = [&](int pos, int next) {
    if (pos == m) {
      if (w[m - 1] != w[0]) emit(w);
      return;
    }
    // Close an open label at a position of opposite parity.
    for (int lab = 1; lab < next; ++lab) {
      int fp = first_pos[lab];
      if (fp < 0) continue;
      bool closed = std::count(w.begin(), w.begin() + pos, lab) == 2;
      if (closed || (pos - fp) % 2 == 0 || fp == pos - 1) continue;
      w[pos] = lab;
      rec(pos + 1, next);
    }
    if (next <= n) {
      w[pos] = next;
      first_pos[next] = pos;
      rec(pos + 1, next + 1);
      first_pos[next] = -1;
    }
    w[pos] = 0;
  };
  rec(0, 1);
}

Pairing realize(const std::vector<int>& w, unsigned bits) {
  int m = static_cast<int>(w.size());
  int n = m / 2;
  std::vector<int> in(m), out(m);
  std::vector<char> seen(n + 1, 0);
  for (int k = 0; k < m; ++k) {
    int c = w[k] - 1;
    if (!seen[w[k]]) {
      seen[w[k]] = 1;
      in[k] = 4 * c;
      out[k] = 4 * c + 2;
    } else {
      bool b = (bits >> c) & 1;
      in[k] = 4 * c + (b ? 3 : 1);
      out[k] = 4 * c + (b ? 1 : 3);
    }
  }
  Pairing p(4 * n);
  for (int k = 0; k < m; ++k) {
    p[out[k]] = in[(k + 1) % m];
    p[in[(k + 1) % m]] = out[k];
  }
  return p;
}

using Dense = std::vector<long long>;  // coefficients with a fixed offset

}  // namespace

int face_count(const Diagram& d) { return walk_faces(d.pairing()); }

Poly knot_invariant(const Diagram& d) {
  const Pairing& p = d.pairing();
  int n = d.crossing_count();
  // Over strand of each crossing: entry slot of the even-numbered visit.
  std::vector<int> over(n, -1), under_in(n, -1);
  int h = 0;
  for (int k = 0; k < 2 * n; ++k) {
    int c = h / 4;
    if (k % 2 == 0) {
      over[c] = h % 4;
    } else {
      under_in[c] = h % 4;
    }
    h = p[4 * c + (h % 4 + 2) % 4];
  }
  int writhe = 0;
  for (int c = 0; c < n; ++c) writhe += (under_in[c] == (over[c] + 1) % 4) ? 1 : -1;

  // State sum: A^(a-b) * d^(loops-1), d = -A^2 - A^-2.
  const int off = 7 * n + 8;
  Dense total(2 * off + 1, 0);
  std::vector<Dense> dpow(2 * n + 2, Dense(2 * off + 1, 0));
  dpow[0][off] = 1;
  for (std::size_t k = 1; k < dpow.size(); ++k) {
    for (int e = 0; e <= 2 * off; ++e) {
      long long v = dpow[k - 1][e];
      if (!v) continue;
      if (e + 2 <= 2 * off) dpow[k][e + 2] -= v;
      if (e - 2 >= 0) dpow[k][e - 2] -= v;
    }
  }
  std::vector<int> parent(4 * n);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (long state = 0; state < (1L << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    for (int x = 0; x < 4 * n; ++x) unite(x, p[x]);
    int a = 0;
    for (int c = 0; c < n; ++c) {
      int o = over[c];
      auto s = [&](int k) { return 4 * c + (o + k) % 4; };
      if ((state >> c) & 1) {
        ++a;
        unite(s(1), s(2));
        unite(s(3), s(0));
      } else {
        unite(s(0), s(1));
        unite(s(2), s(3));
      }
    }
    int loops = 0;
    for (int x = 0; x < 4 * n; ++x) loops += find(x) == x;
    int shift = a - (n - a);
    const Dense& dp = dpow[loops - 1];
    for (int e = 0; e <= 2 * off; ++e) {
      if (dp[e] && e + shift >= 0 && e + shift <= 2 * off) total[e + shift] += dp[e];
    }
  }
  // Multiply by (-A^3)^(-writhe).
  Dense norm(2 * off + 1, 0);
  int shift = -3 * writhe;
  long long sign = (writhe % 2 == 0) ? 1 : -1;
  for (int e = 0; e <= 2 * off; ++e) {
    if (!total[e]) continue;
    int t = e + shift;
    if (t < 0 || t > 2 * off) throw std::runtime_error("bracket exponent out of range");
    norm[t] = sign * total[e];
  }
  auto pack = [&](const Dense& v, bool invert) {
    Poly poly;
    int lo = -1, hi = -1;
    for (int e = 0; e <= 2 * off; ++e) {
      int idx = invert ? 2 * off - e : e;
      if (v[idx]) {
        if (lo < 0) lo = e;
        hi = e;
      }
    }
    poly.low = lo - off;
    for (int e = lo; e <= hi; ++e) poly.coef.push_back(v[invert ? 2 * off - e : e]);
    return poly;
  };
  return std::min(pack(norm, false), pack(norm, true));
}

std::vector<Diagram> prime_shadows(int n) {
  std::vector<Diagram> out;
  std::set<std::vector<int>> seen;
  gauss_words(n, [&](const std::vector<int>& w) {
    if (!prime_word(w) || !minimal_word(w)) return;
    for (unsigned bits = 0; bits < (1u << n); bits += 2) {
      Pairing p = realize(w, bits);
      if (walk_faces(p) != n + 2) continue;
      if (seen.insert(canonical(p)).second) out.emplace_back(n, p);
    }
  });
  return out;
}

int knot_count(int n) {
  std::set<Poly> inv;
  for (const auto& d : prime_shadows(n)) inv.insert(knot_invariant(d));
  return static_cast<int>(inv.size());
}

}  // namespace oracle
