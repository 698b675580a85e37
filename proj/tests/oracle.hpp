#pragma once

// Brute-force reference implementations used to check the library. Nothing
// here calls into the library except to convert between pairings and
// Diagram objects.

#include <cstdint>
#include <vector>

#include "knotforge/diagram.hpp"

namespace oracle {

// Laurent polynomial in A, stored densely from the lowest exponent.
struct Poly {
  int low = 0;
  std::vector<long long> coef;
  friend bool operator==(const Poly&, const Poly&) = default;
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.low != b.low) return a.low < b.low;
    return a.coef < b.coef;
  }
};

// Writhe-normalized Kauffman bracket of the alternating diagram on the
// shadow, symmetrized over mirror images (the smaller of f(A), f(1/A)).
Poly knot_invariant(const knotforge::Diagram& d);

// All prime reduced shadows with n crossings, one per sphere/mirror class.
std::vector<knotforge::Diagram> prime_shadows(int n);

// Number of distinct knot invariants among prime_shadows(n).
int knot_count(int n);

// Independent face count via its own face walk.
int face_count(const knotforge::Diagram& d);

}  // namespace oracle
