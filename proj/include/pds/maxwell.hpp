#pragma once

#include "pds/poly.hpp"

#include <array>
#include <vector>

namespace pds {

// A line through the origin in R^3 (projective point), held as the canonical
// representative whose first nonzero coordinate equals 1. Components are
// real elements of the coefficient field, so canonicalization is exact and
// +/-v and all rescalings collapse to one representative.
struct Direction {
  std::array<Scalar, 3> v;

  // Canonicalizes (vx, vy, vz). Throws std::invalid_argument if all three
  // are zero or any has a nonzero imaginary part.
  static Direction from(const Scalar& vx, const Scalar& vy, const Scalar& vz);
  static Direction from_ints(long vx, long vy, long vz);

  friend bool operator==(const Direction& a, const Direction& b) = default;
  friend bool operator<(const Direction& a, const Direction& b) {
    if (a.v[0] != b.v[0]) return a.v[0] < b.v[0];
    if (a.v[1] != b.v[1]) return a.v[1] < b.v[1];
    return a.v[2] < b.v[2];
  }

  std::string to_string() const;
};

// A multiset of directions; its size is the degree of the mode it encodes.
// Directions are stored canonically; multiplicity matters, order does not
// (the generated polynomial is exactly order-independent).
struct MultipoleSet {
  std::vector<Direction> directions;

  size_t l() const { return directions.size(); }
};

// The multipole construction: l directions determine (projectively) one
// harmonic polynomial of degree l. Implemented by the numerator recursion
//   Q_0 = 1,   Q_{m+1} = r^2 (v.grad) Q_m - (2m+1) (v.(x,y,z)) Q_m,
// equivalent to peeling the directional derivatives off of 1/r and clearing
// the r^{2m+1} denominator at every step; the overall constant is fixed to
// 1, so callers compare results projectively. Raw (non-canonical) direction
// triples are accepted so scale laws can be exercised.
Poly maxwell_mode(const MultipoleSet& s);
Poly maxwell_mode_raw(const std::vector<std::array<Scalar, 3>>& dirs);

// Verifies the exact scale law: rescaling direction i by scales[i] rescales
// the mode by the product of all factors. Requires one nonzero real factor
// per direction; returns the exact comparison result.
bool directions_scale_invariance_check(const MultipoleSet& s,
                                       const std::vector<Scalar>& scales);

}  // namespace pds
