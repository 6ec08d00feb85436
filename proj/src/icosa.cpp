#include "pds/icosa.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pds {

namespace {

Scalar half() { return Scalar{Rational(1, 2), 0, 0, 0}; }
// phi/2 = (1 + sqrt5)/4 and 1/(2 phi) = (sqrt5 - 1)/4.
Scalar phi_half() { return Scalar{Rational(1, 4), Rational(1, 4), 0, 0}; }
Scalar phi_inv_half() { return Scalar{Rational(-1, 4), Rational(1, 4), 0, 0}; }

}  // namespace

Rotation3 Rotation3::identity() {
  Rotation3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = i == j ? Scalar::one() : Scalar::zero();
  return r;
}

Rotation3 Rotation3::transpose() const {
  Rotation3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
  Rotation3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar s = Scalar::zero();
      for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

std::array<Scalar, 3> Rotation3::apply(const std::array<Scalar, 3>& v) const {
  std::array<Scalar, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  }
  return r;
}

Scalar Rotation3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool Rotation3::is_orthogonal() const {
  return *this * transpose() == identity();
}

bool operator<(const Rotation3& a, const Rotation3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (a.m[i][j] != b.m[i][j]) return a.m[i][j] < b.m[i][j];
    }
  return false;
}

Quaternion Quaternion::one() {
  return Quaternion{{Scalar::one(), Scalar::zero(), Scalar::zero(), Scalar::zero()}};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  const auto& [w1, x1, y1, z1] = a.q;
  const auto& [w2, x2, y2, z2] = b.q;
  return Quaternion{{w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
                     w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
                     w1 * y2 + y1 * w2 + z1 * x2 - x1 * z2,
                     w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2}};
}

Quaternion Quaternion::conjugated() const {
  return Quaternion{{q[0], -q[1], -q[2], -q[3]}};
}

Quaternion Quaternion::operator-() const {
  return Quaternion{{-q[0], -q[1], -q[2], -q[3]}};
}

Scalar Quaternion::norm2() const {
  return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
}

Rotation3 rotation_r5() {
  Rotation3 r;
  r.m = {{{-phi_half(), -phi_inv_half(), half()},
          {phi_inv_half(), half(), phi_half()},
          {-half(), phi_half(), -phi_inv_half()}}};
  return r;
}

Rotation3 rotation_r2() {
  Rotation3 r = Rotation3::identity();
  r.m[0][0] = -Scalar::one();
  r.m[1][1] = -Scalar::one();
  return r;
}

Rotation3 induced_rotation(const Quaternion& quat) {
  // Conjugation rotation of the unit quaternion on pure-imaginary space,
  // then the fixed change of frame T: (w1,w2,w3) -> (w3,w2,-w1) that matches
  // this library's fibration coordinates: rho = T . Rconj^T . T^T. Verified
  // against the defining property fibration(x.q) = rho(q) fibration(x) for
  // all 120 table elements in the tests.
  const Scalar& w = quat.q[0];
  const Scalar& x = quat.q[1];
  const Scalar& y = quat.q[2];
  const Scalar& z = quat.q[3];
  const Scalar one = Scalar::one();
  const Scalar two = Scalar::from_int(2);
  Rotation3 conj;
  conj.m = {{{one - two * (y * y + z * z), two * (x * y - z * w), two * (x * z + y * w)},
             {two * (x * y + z * w), one - two * (x * x + z * z), two * (y * z - x * w)},
             {two * (x * z - y * w), two * (y * z + x * w), one - two * (x * x + y * y)}}};
  Rotation3 t;
  t.m = {{{Scalar::zero(), Scalar::zero(), one},
          {Scalar::zero(), one, Scalar::zero()},
          {-one, Scalar::zero(), Scalar::zero()}}};
  return t * conj.transpose() * t.transpose();
}

namespace {

std::vector<Quaternion> build_binary_group() {
  std::set<Quaternion> elems;
  // +-1, +-i, +-j, +-k.
  for (int axis = 0; axis < 4; ++axis) {
    for (int sign : {1, -1}) {
      Quaternion q{{Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()}};
      q.q[axis] = Scalar::from_int(sign);
      elems.insert(q);
    }
  }
  // (+-1 +-i +-j +-k)/2.
  for (int mask = 0; mask < 16; ++mask) {
    Quaternion q{{half(), half(), half(), half()}};
    for (int pos = 0; pos < 4; ++pos) {
      if (mask & (1 << pos)) q.q[pos] = -q.q[pos];
    }
    elems.insert(q);
  }
  // Even permutations of (0, +-1, +-1/phi, +-phi)/2: signs run over the
  // three nonzero slots.
  const std::array<Scalar, 4> vals = {Scalar::zero(), half(), phi_inv_half(),
                                      phi_half()};
  std::array<int, 4> perm = {0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 != 0) continue;
    for (int mask = 0; mask < 8; ++mask) {
      Quaternion q{{Scalar::zero(), Scalar::zero(), Scalar::zero(), Scalar::zero()}};
      int nz = 0;
      for (int pos = 0; pos < 4; ++pos) {
        Scalar v = vals[size_t(perm[pos])];
        if (!v.is_zero()) {
          if (mask & (1 << nz)) v = -v;
          ++nz;
        }
        q.q[pos] = v;
      }
      elems.insert(q);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {elems.begin(), elems.end()};
}

std::vector<Rotation3> build_rotation_group() {
  std::set<Rotation3> elems{Rotation3::identity()};
  std::vector<Rotation3> frontier{Rotation3::identity()};
  const std::array<Rotation3, 2> gens = {rotation_r5(), rotation_r2()};
  while (!frontier.empty()) {
    std::vector<Rotation3> next;
    for (const Rotation3& f : frontier) {
      for (const Rotation3& g : gens) {
        Rotation3 p = f * g;
        if (elems.insert(p).second) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
    if (elems.size() > 60) break;
  }
  return {elems.begin(), elems.end()};
}

GroupTables build_and_verify() {
  GroupTables t;
  t.quaternions = build_binary_group();
  t.rotations = build_rotation_group();
  if (t.quaternions.size() != 120) {
    throw std::logic_error("binary icosahedral table does not have 120 elements");
  }
  if (t.rotations.size() != 60) {
    throw std::logic_error("icosahedral rotation table does not have 60 elements");
  }
  for (const Quaternion& q : t.quaternions) {
    if (q.norm2() != Scalar::one()) {
      throw std::logic_error("non-unit quaternion in group table");
    }
  }
  for (const Rotation3& r : t.rotations) {
    if (!r.is_orthogonal() || r.det() != Scalar::one()) {
      throw std::logic_error("non-rotation in group table");
    }
  }
  // Closure of both tables, and the two-to-one projection onto the
  // rotations — the consistency the whole pipeline leans on.
  const std::set<Quaternion> qset(t.quaternions.begin(), t.quaternions.end());
  for (const Quaternion& a : t.quaternions) {
    for (const Quaternion& b : t.quaternions) {
      if (!qset.count(a * b)) throw std::logic_error("quaternion table not closed");
    }
  }
  const std::set<Rotation3> rset(t.rotations.begin(), t.rotations.end());
  for (const Rotation3& a : t.rotations) {
    for (const Rotation3& b : t.rotations) {
      if (!rset.count(a * b)) throw std::logic_error("rotation table not closed");
    }
  }
  std::set<Rotation3> projected;
  for (const Quaternion& q : t.quaternions) projected.insert(induced_rotation(q));
  if (projected != rset) {
    throw std::logic_error("quaternions do not project onto the rotation table");
  }
  return t;
}

}  // namespace

const GroupTables& icosahedral_groups() {
  static const GroupTables tables = build_and_verify();
  return tables;
}

std::vector<Poly> rotation_images(const Rotation3& r) {
  std::vector<Poly> images;
  images.reserve(3);
  for (int i = 0; i < 3; ++i) {
    Poly row(Chart::Real3);
    for (int j = 0; j < 3; ++j) {
      row += Poly::variable(Chart::Real3, j).scaled(r.m[i][j]);
    }
    images.push_back(std::move(row));
  }
  return images;
}

std::vector<Poly> quaternion_images(const Quaternion& q) {
  // a = q0 + i q1 and b = q2 + i q3 with the qi real.
  const auto complex_from = [](const Scalar& re, const Scalar& im) {
    return Scalar{re.re_rat, re.re_s5, im.re_rat, im.re_s5};
  };
  const Scalar a = complex_from(q.q[0], q.q[1]);
  const Scalar b = complex_from(q.q[2], q.q[3]);
  const Poly va = Poly::variable(Chart::Cplx, 0);
  const Poly vab = Poly::variable(Chart::Cplx, 1);
  const Poly vb = Poly::variable(Chart::Cplx, 2);
  const Poly vbb = Poly::variable(Chart::Cplx, 3);
  return {
      va.scaled(a) - vb.scaled(b.conj()),
      vab.scaled(a.conj()) - vbb.scaled(b),
      va.scaled(b) + vb.scaled(a.conj()),
      vab.scaled(b.conj()) + vbb.scaled(a),
  };
}

Poly act_on_poly_s2(const Rotation3& r, const Poly& f) {
  if (f.chart() != Chart::Real3) {
    throw std::invalid_argument("act_on_poly_s2: polynomial must be in the real3 chart");
  }
  return f.substitute(rotation_images(r));
}

Poly act_on_poly_s3(const Quaternion& q, const Poly& f) {
  if (f.chart() != Chart::Cplx) {
    throw std::invalid_argument("act_on_poly_s3: polynomial must be in the cplx chart");
  }
  return f.substitute(quaternion_images(q));
}

Direction act_on_direction(const Rotation3& r, const Direction& d) {
  const auto w = r.apply(d.v);
  return Direction::from(w[0], w[1], w[2]);
}

std::vector<Direction> orbit(const Direction& d) {
  std::set<Direction> out;
  for (const Rotation3& r : icosahedral_groups().rotations) {
    out.insert(act_on_direction(r, d));
  }
  return {out.begin(), out.end()};
}

int element_order(const Rotation3& r) {
  Rotation3 p = r;
  for (int n = 1; n <= 10; ++n) {
    if (p == Rotation3::identity()) return n;
    p = p * r;
  }
  throw std::logic_error("element order exceeds 10 — not an icosahedral rotation");
}

int invariance_count_s2(const Poly& f) {
  int count = 0;
  for (const Rotation3& r : icosahedral_groups().rotations) {
    if (act_on_poly_s2(r, f) == f) ++count;
  }
  return count;
}

int invariance_count_s3(const Poly& f) {
  int count = 0;
  for (const Quaternion& q : icosahedral_groups().quaternions) {
    if (act_on_poly_s3(q, f) == f) ++count;
  }
  return count;
}

Poly reynolds_average_s2(const Poly& f) {
  Poly sum(Chart::Real3);
  for (const Rotation3& r : icosahedral_groups().rotations) {
    sum += act_on_poly_s2(r, f);
  }
  return sum.scaled(Scalar::from_rational(Rational(1, 60)));
}

Poly reynolds_average_s3(const Poly& f) {
  Poly sum(Chart::Cplx);
  for (const Quaternion& q : icosahedral_groups().quaternions) {
    sum += act_on_poly_s3(q, f);
  }
  return sum.scaled(Scalar::from_rational(Rational(1, 120)));
}

}  // namespace pds
