#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pds/harmonics.hpp"
#include "pds/hopf.hpp"
#include "pds/icosa.hpp"

#include <map>
#include <set>

using pds::Chart;
using pds::Direction;
using pds::Mono;
using pds::Poly;
using pds::Quaternion;
using pds::Rational;
using pds::Rotation3;
using pds::Scalar;

namespace {

Poly X() { return Poly::variable(Chart::Real3, 0); }
Poly Y() { return Poly::variable(Chart::Real3, 1); }
Poly Z3() { return Poly::variable(Chart::Real3, 2); }

Direction vertex_dir() {
  return Direction::from(Scalar::zero(), Scalar::phi(), Scalar::one());
}
Direction face_dir() { return Direction::from_ints(1, 1, 1); }
Direction edge_dir() {
  return Direction::from(Scalar::one(), Scalar::phi(),
                         Scalar::phi() - Scalar::one());
}

std::vector<Poly> cplx_monomials_up_to(int maxdeg) {
  std::vector<Poly> out;
  for (int p = 0; p <= maxdeg; ++p)
    for (int q = 0; p + q <= maxdeg; ++q)
      for (int r = 0; p + q + r <= maxdeg; ++r)
        for (int s = 0; p + q + r + s <= maxdeg; ++s)
          out.push_back(Poly::monomial(
              Chart::Cplx, Mono{uint8_t(p), uint8_t(q), uint8_t(r), uint8_t(s)},
              Scalar::one()));
  return out;
}

}  // namespace

TEST_CASE("group tables have the right size and structure") {
  const auto& g = pds::icosahedral_groups();
  REQUIRE(g.rotations.size() == 60);
  REQUIRE(g.quaternions.size() == 120);

  // Element orders over the rotations: 1 identity, 15 half-turns,
  // 20 three-fold, 24 five-fold.
  std::map<int, int> orders;
  for (const Rotation3& r : g.rotations) orders[pds::element_order(r)]++;
  CHECK(orders == std::map<int, int>{{1, 1}, {2, 15}, {3, 20}, {5, 24}});

  // The quaternion table contains the antipodal element and is
  // inverse-closed.
  const Quaternion minus_one = -Quaternion::one();
  const std::set<Quaternion> qset(g.quaternions.begin(), g.quaternions.end());
  CHECK(qset.count(minus_one) == 1);
  for (const Quaternion& q : g.quaternions) CHECK(qset.count(q.conjugated()) == 1);
}

TEST_CASE("generators behave as advertised") {
  const Rotation3 r5 = pds::rotation_r5();
  CHECK(r5.is_orthogonal());
  CHECK(r5.det() == Scalar::one());
  CHECK(pds::element_order(r5) == 5);
  // r5 fixes the vertex axis (0, phi, 1).
  const std::array<Scalar, 3> axis = {Scalar::zero(), Scalar::phi(), Scalar::one()};
  CHECK(r5.apply(axis) == axis);
  CHECK(pds::element_order(pds::rotation_r2()) == 2);
}

TEST_CASE("quaternions project two-to-one onto the rotations") {
  const auto& g = pds::icosahedral_groups();
  std::set<Rotation3> projected;
  for (const Quaternion& q : g.quaternions) {
    const Rotation3 r = pds::induced_rotation(q);
    CHECK(pds::induced_rotation(-q) == r);
    projected.insert(r);
  }
  CHECK(projected == std::set<Rotation3>(g.rotations.begin(), g.rotations.end()));
}

TEST_CASE("the 3-sphere action covers the 2-sphere action through the fibration") {
  // For every table quaternion, acting upstairs then projecting equals
  // projecting then rotating: each fibration component composed with m_q
  // must equal the rho(q)-combination of the three components.
  const auto& im = pds::hopf_images();
  const std::array<Poly, 3> comps = {im.x_image, im.y_image, im.z_image};
  for (const Quaternion& q : pds::icosahedral_groups().quaternions) {
    const Rotation3 rho = pds::induced_rotation(q);
    for (int i = 0; i < 3; ++i) {
      Poly want(Chart::Cplx);
      for (int j = 0; j < 3; ++j) want += comps[j].scaled(rho.m[i][j]);
      CHECK(pds::act_on_poly_s3(q, comps[i]) == want);
    }
  }
}

TEST_CASE("acting commutes with lifting") {
  const std::vector<Poly> fs = {Z3(), X() * Y() - Z3() * Z3(),
                                pds::solid_harmonics(3).poly(1)};
  const auto& quats = pds::icosahedral_groups().quaternions;
  for (size_t qi : {3u, 40u, 77u}) {
    const Quaternion& q = quats[qi];
    const Rotation3 rho = pds::induced_rotation(q);
    for (const Poly& f : fs) {
      CHECK(pds::act_on_poly_s3(q, pds::lift(f)) ==
            pds::lift(pds::act_on_poly_s2(rho, f)));
    }
  }
}

TEST_CASE("antipodal element fixes even-degree polynomials") {
  const Quaternion minus_one = -Quaternion::one();
  const Poly even = pds::lift(X() * X() - Y() * Z3());
  CHECK(pds::act_on_poly_s3(minus_one, even) == even);
  const Poly odd = Poly::variable(Chart::Cplx, 0);
  CHECK(pds::act_on_poly_s3(minus_one, odd) == -odd);
}

TEST_CASE("upstairs action commutes with twist machinery") {
  const auto monos = cplx_monomials_up_to(4);
  const auto& quats = pds::icosahedral_groups().quaternions;
  // Every element against a rotating monomial sample, then a few elements
  // against the whole grid: covers both axes without the 120 x 70 blowup.
  for (size_t qi = 0; qi < quats.size(); ++qi) {
    const Quaternion& q = quats[qi];
    const Poly& m = monos[qi % monos.size()];
    CHECK(pds::act_on_poly_s3(q, pds::z_operator(m)) ==
          pds::z_operator(pds::act_on_poly_s3(q, m)));
    CHECK(pds::act_on_poly_s3(q, pds::twist_raise(m)) ==
          pds::twist_raise(pds::act_on_poly_s3(q, m)));
    CHECK(pds::act_on_poly_s3(q, pds::twist_lower(m)) ==
          pds::twist_lower(pds::act_on_poly_s3(q, m)));
  }
  for (size_t qi : {11u, 64u, 101u}) {
    for (const Poly& m : monos) {
      CHECK(pds::act_on_poly_s3(quats[qi], pds::twist_raise(m)) ==
            pds::twist_raise(pds::act_on_poly_s3(quats[qi], m)));
    }
  }
}

TEST_CASE("direction action and orbits") {
  const Rotation3 id = Rotation3::identity();
  const Direction d = Direction::from_ints(2, -1, 3);
  CHECK(pds::act_on_direction(id, d) == d);
  // Half-turn about z sends (1,0,0) to (-1,0,0), the same projective point.
  CHECK(pds::act_on_direction(pds::rotation_r2(), Direction::from_ints(1, 0, 0)) ==
        Direction::from_ints(1, 0, 0));
  // The five-fold generator fixes its own axis direction.
  CHECK(pds::act_on_direction(pds::rotation_r5(), vertex_dir()) == vertex_dir());

  CHECK(pds::orbit(vertex_dir()).size() == 6);
  CHECK(pds::orbit(face_dir()).size() == 10);
  CHECK(pds::orbit(edge_dir()).size() == 15);
  CHECK(pds::orbit(Direction::from_ints(2, -1, 3)).size() == 60);

  // Vertex orbit is setwise invariant under every rotation.
  const auto verts = pds::orbit(vertex_dir());
  const std::set<Direction> vset(verts.begin(), verts.end());
  for (const Rotation3& r : pds::icosahedral_groups().rotations) {
    for (const Direction& v : verts) CHECK(vset.count(pds::act_on_direction(r, v)) == 1);
  }
}

TEST_CASE("group averaging is the exact invariant projector") {
  // The average of x^2 over any irreducibly-acting rotation group is r^2/3.
  const Poly r2 = X() * X() + Y() * Y() + Z3() * Z3();
  CHECK(pds::reynolds_average_s2(X() * X()) ==
        r2.scaled(Scalar::from_rational(Rational(1, 3))));

  const std::vector<Poly> samples = {X() * X() * Y() - Z3() * Z3() * Z3(),
                                     (X() + Y()) * (X() - Z3()) * Y() * X(),
                                     X() * Y() * Z3() * X() * Y() * Z3()};
  for (const Poly& f : samples) {
    const Poly avg = pds::reynolds_average_s2(f);
    CHECK(pds::reynolds_average_s2(avg) == avg);  // idempotent
    if (!avg.is_zero()) CHECK(pds::invariance_count_s2(avg) == 60);
  }

  const Poly lifted = pds::lift(X() * X() - Y() * Y());
  const Poly avg3 = pds::reynolds_average_s3(lifted);
  CHECK(pds::reynolds_average_s3(avg3) == avg3);
  // Degree-4 invariants upstairs do not exist (first nontrivial even
  // degree is 12), so this particular average collapses to zero.
  CHECK(avg3.is_zero());
}
