#pragma once

#include "pds/maxwell.hpp"
#include "pds/poly.hpp"

#include <array>
#include <vector>

namespace pds {

// Exact 3x3 rotation (rows of real Scalars).
struct Rotation3 {
  std::array<std::array<Scalar, 3>, 3> m;

  static Rotation3 identity();
  Rotation3 transpose() const;
  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b);
  std::array<Scalar, 3> apply(const std::array<Scalar, 3>& v) const;

  Scalar det() const;
  // M M^T == identity, exactly.
  bool is_orthogonal() const;

  friend bool operator==(const Rotation3& a, const Rotation3& b) = default;
  friend bool operator<(const Rotation3& a, const Rotation3& b);
};

// Exact quaternion q0 + q1 i + q2 j + q3 k with real Scalar components.
struct Quaternion {
  std::array<Scalar, 4> q;

  static Quaternion one();
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  Quaternion conjugated() const;
  Quaternion operator-() const;
  Scalar norm2() const;

  friend bool operator==(const Quaternion& a, const Quaternion& b) = default;
  friend bool operator<(const Quaternion& a, const Quaternion& b) {
    return a.q < b.q;
  }
};

// The two exact symmetry groups used everywhere downstream:
//  - rotations: the 60 orientation-preserving icosahedral symmetries of the
//    icosahedron with vertices at the cyclic permutations of (0, +-phi, +-1);
//  - quaternions: the binary icosahedral group, 120 unit quaternions
//    {+-1, +-i, +-j, +-k} u {(+-1 +-i +-j +-k)/2} u {even permutations of
//    (0, +-1, +-1/phi, +-phi)/2}.
// Both tables are sorted, closed under multiplication, and verified at
// construction (closure, cardinality, orthogonality/unit norms, and that the
// quaternions project two-to-one onto exactly the 60 rotations).
struct GroupTables {
  std::vector<Rotation3> rotations;
  std::vector<Quaternion> quaternions;
};

// Built once, lazily; throws std::logic_error if any construction-time
// verification fails (which would be a programming bug, not bad input).
const GroupTables& icosahedral_groups();

// Exact generators of the rotation table: a five-fold turn about the vertex
// axis (0, phi, 1) and the half-turn about z (an edge-midpoint axis).
Rotation3 rotation_r5();
Rotation3 rotation_r2();

// The rotation of the base 2-sphere induced by acting with q upstairs:
// fibration(x . q) = induced_rotation(q) . fibration(x). Same result for q
// and -q; as q ranges over the quaternion table this covers the rotation
// table exactly. (As a map it reverses products — harmless for orbit and
// invariance work, and pinned down in the tests.)
Rotation3 induced_rotation(const Quaternion& q);

// The linear substitution images defining the two actions below: for a
// rotation, three real3 linear forms (row_i(R) . (x,y,z)); for a quaternion,
// four cplx linear forms. Exposed so that optimized evaluation paths use the
// exact same substitution data as the reference implementations.
std::vector<Poly> rotation_images(const Rotation3& r);
std::vector<Poly> quaternion_images(const Quaternion& q);

// f |-> f o R (substitute row_i(R) . (x,y,z) for the i-th variable).
// Real3 chart only.
Poly act_on_poly_s2(const Rotation3& r, const Poly& f);

// F |-> F o m_q where m_q is right quaternion multiplication on the
// 3-sphere under the identification (alpha, beta) <-> alpha + beta j:
// with q = a + b j (a = q0 + q1 i, b = q2 + q3 i),
//   alpha -> a*alpha - conj(b)*beta,   beta -> b*alpha + conj(a)*beta.
// This commutes with the fiber flow, so it preserves twist. Cplx chart only.
Poly act_on_poly_s3(const Quaternion& q, const Poly& f);

// Canonical representative of R . d.
Direction act_on_direction(const Rotation3& r, const Direction& d);

// Deduplicated projective orbit of d under the 60 rotations, sorted.
// Sizes realized by icosahedral geometry: 6, 10, 15, 30, 60.
std::vector<Direction> orbit(const Direction& d);

// Smallest n >= 1 with R^n = identity (n <= 10 for this group).
int element_order(const Rotation3& r);

// Number of table elements leaving the polynomial exactly fixed.
int invariance_count_s2(const Poly& f);
int invariance_count_s3(const Poly& f);

// Group average (1/|G|) sum_g g.f — the exact projector onto invariants.
Poly reynolds_average_s2(const Poly& f);
Poly reynolds_average_s3(const Poly& f);

}  // namespace pds
