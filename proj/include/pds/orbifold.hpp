#pragma once

#include "pds/maxwell.hpp"

#include <array>
#include <string>
#include <vector>

namespace pds {

// Configurations of points on the quotient of the sphere by the full
// icosahedral symmetry group — a spherical triangle with mirror edges and
// corners of rotation order 5, 3, 2. A point of the triangle stands for its
// whole set of image directions on the sphere: 6, 10 or 15 for the corners,
// 30 for a point on a mirror edge, 60 for an interior point. Placing points
// with fractional multiplicities so the direction count comes out to l
// parameterizes the degree-l icosahedrally invariant harmonics.

// Dimension of the space of degree-l invariant harmonics:
// max(0, 1 + floor(l/2) + floor(l/3) + floor(l/5) - l); in particular 1 at
// l = 0 and 0 for l in {1,...,5} and similar infeasible degrees.
// Throws std::invalid_argument for negative l.
int dim_invariant_harmonics(int l);

// The corner axes of one fundamental triangle (a vertex of the icosahedron
// with vertices at the cyclic permutations of (0, +-phi, +-1), the center
// of a face containing it, and the midpoint of an edge of that face).
Direction corner_order5();  // (0, phi, 1),        orbit 6
Direction corner_order3();  // (1, 1, 1),          orbit 10
Direction corner_order2();  // (1, phi, phi - 1),  orbit 15

// Mirror arcs of the triangle, named by the orders of the two corners they
// join ("25", "23", "35").
enum class Arc { TwoFive, TwoThree, ThreeFive };

std::string arc_name(Arc a);
// Throws std::invalid_argument for anything but "25", "23", "35".
Arc arc_from_name(const std::string& name);

// A point on a mirror arc: the exact blend (1-t) * first + t * second of
// the two corner axes named by the arc; canonical locations have t strictly
// between 0 and 1.
struct HalfPoint {
  Arc arc = Arc::TwoFive;
  Rational t;

  friend bool operator==(const HalfPoint& a, const HalfPoint& b) = default;
};

// An interior point: exact positive barycentric weights over the corner
// axes in the order (order-2, order-3, order-5). Scale is irrelevant.
struct WholePoint {
  std::array<Rational, 3> bary;

  friend bool operator==(const WholePoint& a, const WholePoint& b) = default;
};

struct OrbifoldConfig {
  int l = 0;       // target degree; must equal degree()
  int c10 = 0;     // multiplicity at the order-5 corner (1/10 weight each)
  int c6 = 0;      // multiplicity at the order-3 corner (1/6 weight each)
  int c4 = 0;      // multiplicity at the order-2 corner (1/4 weight each)
  std::vector<HalfPoint> half_points;
  std::vector<WholePoint> whole_points;

  // 6 c10 + 10 c6 + 15 c4 + 30 |half| + 60 |whole|.
  int degree() const;

  friend bool operator==(const OrbifoldConfig& a, const OrbifoldConfig& b) = default;
};

struct CornerCounts {
  int c10 = 0, c6 = 0, c4 = 0;
  // Remaining freedom in half-point units: #half + 2 #whole must equal this.
  int budget = 0;
};

// The corner multiplicities any canonical degree-l configuration must carry
// (c10 = l mod 5, c6 = l mod 3, c4 = l mod 2) and the leftover budget
// floor(l/2) + floor(l/3) + floor(l/5) - l. Throws std::domain_error when
// that budget is negative, i.e. when no degree-l invariant mode exists.
CornerCounts forced_corner_counts(int l);

// Exact arc and interior locations. Deliberately permissive (any rational
// blend that is not the zero vector): geometric degeneracies — a blend that
// lands on a corner, weights that land on a mirror — are caught by
// lift_config's orbit-size checks, and the strict canonical ranges
// (0 < t < 1, positive weights) are enforced by the file-format layer.
Direction arc_point(Arc a, const Rational& t);
Direction interior_point(const std::array<Rational, 3>& bary);

// The direction multiset a configuration stands for: each corner orbit with
// its multiplicity, a 30-direction orbit per half point, a 60-direction
// orbit per whole point — exactly degree() directions in total. Throws
// std::domain_error if l != degree(), if a half point's orbit is not 30, or
// if a whole point's orbit is not 60 (the location degenerated onto a
// corner or a mirror).
MultipoleSet lift_config(const OrbifoldConfig& c);

enum class ConfigPolicy { Normalize, Reject };

// Canonical configurations keep c10 <= 4, c6 <= 2, c4 <= 1. Larger counts
// are equivalent to half points pinned at a corner, freed to move: under
// Normalize, each excess bundle (five 1/10s, three 1/6s, or two 1/4s)
// becomes one half point at the next unused location of the deterministic
// arc sequence; under Reject, excess throws std::domain_error. Also checks
// l == degree() and negative counts (std::domain_error).
OrbifoldConfig normalize_config(OrbifoldConfig c, ConfigPolicy policy);

// The deterministic degree-l candidate family, before any rank checks:
// every config carries the forced corner counts; the first `count` configs
// spend the budget B on half points at arc parameters 1/3, 2/5, 3/7, ...
// (window `offset` shifts where in that sequence the family starts, each
// config taking a disjoint block); when count == B + 1 >= 3 the last config
// instead places one interior whole point plus B - 2 half points.
// Throws std::domain_error for infeasible l, std::invalid_argument when
// count is not in [1, dim_invariant_harmonics(l)].
std::vector<OrbifoldConfig> candidate_basis_configs(int l, int count, int offset = 0);

// Candidate families, advanced through window offsets until the associated
// multipole harmonics are exactly linearly independent (rank == count).
// The default count is the full dimension.
std::vector<OrbifoldConfig> enumerate_basis_configs(int l, int count);
std::vector<OrbifoldConfig> enumerate_basis_configs(int l);

// The invariant harmonic a configuration encodes, built from its direction
// multiset. Degree-l, exactly harmonic; invariance is checked by callers.
Poly config_mode(const OrbifoldConfig& c);

}  // namespace pds
