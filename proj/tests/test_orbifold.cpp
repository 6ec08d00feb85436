#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pds/icosa.hpp"
#include "pds/orbifold.hpp"

#include <algorithm>
#include <set>

using pds::Arc;
using pds::Direction;
using pds::HalfPoint;
using pds::OrbifoldConfig;
using pds::Rational;
using pds::Scalar;
using pds::WholePoint;

TEST_CASE("dimension formula: pinned values and closed form") {
  // Hand-evaluated: 1 + floor(l/2) + floor(l/3) + floor(l/5) - l.
  CHECK(pds::dim_invariant_harmonics(0) == 1);
  for (int l = 1; l <= 5; ++l) CHECK(pds::dim_invariant_harmonics(l) == 0);
  CHECK(pds::dim_invariant_harmonics(6) == 1);
  CHECK(pds::dim_invariant_harmonics(10) == 1);
  CHECK(pds::dim_invariant_harmonics(12) == 1);
  CHECK(pds::dim_invariant_harmonics(14) == 0);
  CHECK(pds::dim_invariant_harmonics(15) == 1);
  CHECK(pds::dim_invariant_harmonics(16) == 1);
  CHECK(pds::dim_invariant_harmonics(18) == 1);
  CHECK(pds::dim_invariant_harmonics(21) == 1);
  CHECK(pds::dim_invariant_harmonics(30) == 2);
  CHECK(pds::dim_invariant_harmonics(36) == 2);
  CHECK(pds::dim_invariant_harmonics(60) == 3);
  CHECK(pds::dim_invariant_harmonics(61) == 2);  // 1+30+20+12-61
  CHECK_THROWS_AS(pds::dim_invariant_harmonics(-1), std::invalid_argument);
}

TEST_CASE("forced corner counts and the degree identity") {
  const auto c6 = pds::forced_corner_counts(6);
  CHECK(c6.c10 == 1);
  CHECK(c6.c6 == 0);
  CHECK(c6.c4 == 0);
  CHECK(c6.budget == 0);
  const auto c30 = pds::forced_corner_counts(30);
  CHECK(c30.c10 == 0);
  CHECK(c30.c6 == 0);
  CHECK(c30.c4 == 0);
  CHECK(c30.budget == 1);
  const auto c15 = pds::forced_corner_counts(15);
  CHECK(c15.c10 == 0);
  CHECK(c15.c6 == 0);
  CHECK(c15.c4 == 1);
  CHECK(c15.budget == 0);
  CHECK_THROWS_AS(pds::forced_corner_counts(14), std::domain_error);
  CHECK_THROWS_AS(pds::forced_corner_counts(2), std::domain_error);
  CHECK_THROWS_AS(pds::forced_corner_counts(-3), std::invalid_argument);

  // For every degree: the forced counts close the degree equation exactly
  // and the dimension equals 1 + budget when feasible.
  for (int l = 0; l <= 200; ++l) {
    const int dim = pds::dim_invariant_harmonics(l);
    if (dim == 0) {
      CHECK_THROWS_AS(pds::forced_corner_counts(l), std::domain_error);
      continue;
    }
    const auto cc = pds::forced_corner_counts(l);
    CHECK(dim == 1 + cc.budget);
    CHECK(6 * cc.c10 + 10 * cc.c6 + 15 * cc.c4 + 30 * cc.budget == l);
    CHECK(cc.c10 <= 4);
    CHECK(cc.c6 <= 2);
    CHECK(cc.c4 <= 1);
  }
}

TEST_CASE("triangle geometry: corner, arc and interior orbit sizes") {
  CHECK(pds::orbit(pds::corner_order5()).size() == 6);
  CHECK(pds::orbit(pds::corner_order3()).size() == 10);
  CHECK(pds::orbit(pds::corner_order2()).size() == 15);
  for (const Arc a : {Arc::TwoFive, Arc::TwoThree, Arc::ThreeFive}) {
    CHECK(pds::orbit(pds::arc_point(a, Rational(1, 3))).size() == 30);
    CHECK(pds::orbit(pds::arc_point(a, Rational(2, 5))).size() == 30);
  }
  CHECK(pds::orbit(pds::interior_point({Rational(1), Rational(1), Rational(1)})).size() == 60);
  CHECK(pds::orbit(pds::interior_point({Rational(1, 2), Rational(1, 3), Rational(1, 6)})).size() == 60);

  // Endpoint blends reproduce the corners themselves.
  CHECK(pds::arc_point(Arc::TwoFive, Rational(0)) == pds::corner_order2());
  CHECK(pds::arc_point(Arc::TwoFive, Rational(1)) == pds::corner_order5());
  CHECK(pds::arc_point(Arc::ThreeFive, Rational(0)) == pds::corner_order3());

  CHECK(pds::arc_name(Arc::TwoFive) == "25");
  CHECK(pds::arc_from_name("35") == Arc::ThreeFive);
  CHECK_THROWS_AS(pds::arc_from_name("52"), std::invalid_argument);
}

TEST_CASE("lifting configurations to direction multisets") {
  // The pure corner config of degree 6 is exactly the vertex-axis orbit.
  OrbifoldConfig v6;
  v6.l = 6;
  v6.c10 = 1;
  const auto lifted = pds::lift_config(v6);
  CHECK(lifted.l() == 6);
  const auto vertex_orbit = pds::orbit(pds::corner_order5());
  CHECK(std::multiset<Direction>(lifted.directions.begin(), lifted.directions.end()) ==
        std::multiset<Direction>(vertex_orbit.begin(), vertex_orbit.end()));

  // Corner multiplicity repeats the whole orbit.
  OrbifoldConfig v12;
  v12.l = 12;
  v12.c10 = 2;
  CHECK(pds::lift_config(v12).l() == 12);

  // One half point: 30 distinct directions.
  OrbifoldConfig h30;
  h30.l = 30;
  h30.half_points.push_back({Arc::TwoFive, Rational(1, 3)});
  const auto lifted30 = pds::lift_config(h30);
  CHECK(lifted30.l() == 30);
  CHECK(std::set<Direction>(lifted30.directions.begin(), lifted30.directions.end()).size() == 30);

  // One whole point: 60 distinct directions.
  OrbifoldConfig w60;
  w60.l = 60;
  w60.whole_points.push_back({{Rational(1), Rational(2), Rational(3)}});
  const auto lifted60 = pds::lift_config(w60);
  CHECK(lifted60.l() == 60);
  CHECK(std::set<Direction>(lifted60.directions.begin(), lifted60.directions.end()).size() == 60);

  // Declared degree must match the content.
  OrbifoldConfig bad;
  bad.l = 7;
  bad.c10 = 1;
  CHECK_THROWS_AS(pds::lift_config(bad), std::domain_error);
  bad.c10 = -1;
  CHECK_THROWS_AS(pds::lift_config(bad), std::domain_error);

  // A "half point" blended all the way onto a corner is rejected with the
  // orbit-size diagnosis, as is an "interior" point lying on a mirror arc.
  OrbifoldConfig degenerate_half;
  degenerate_half.l = 30;
  degenerate_half.half_points.push_back({Arc::TwoFive, Rational(0)});
  CHECK_THROWS_AS(pds::lift_config(degenerate_half), std::domain_error);
  OrbifoldConfig degenerate_whole;
  degenerate_whole.l = 60;
  degenerate_whole.whole_points.push_back({{Rational(1), Rational(1), Rational(0)}});
  CHECK_THROWS_AS(pds::lift_config(degenerate_whole), std::domain_error);
}

TEST_CASE("canonicalization folds excess corner multiplicities into half points") {
  OrbifoldConfig c;
  c.l = 36;
  c.c10 = 6;  // 6 tenth-points: one over the cap bundle of five
  const auto n = pds::normalize_config(c, pds::ConfigPolicy::Normalize);
  CHECK(n.c10 == 1);
  CHECK(n.half_points.size() == 1);
  CHECK(n.half_points[0].arc == Arc::TwoFive);
  CHECK(n.half_points[0].t == Rational(1, 3));
  CHECK(n.degree() == 36);
  CHECK_THROWS_AS(pds::normalize_config(c, pds::ConfigPolicy::Reject),
                  std::domain_error);

  // Folding skips arc locations the configuration already occupies.
  OrbifoldConfig d;
  d.l = 66;
  d.c10 = 6;
  d.half_points.push_back({Arc::TwoFive, Rational(1, 3)});
  const auto m = pds::normalize_config(d, pds::ConfigPolicy::Normalize);
  CHECK(m.c10 == 1);
  CHECK(m.half_points.size() == 2);
  CHECK(m.half_points[1].t == Rational(2, 5));
  CHECK(m.degree() == 66);

  // All three corner kinds fold: 3 sixth-points and 2 quarter-points each
  // carry weight 1/2.
  OrbifoldConfig e;
  e.l = 60;
  e.c6 = 3;
  e.c4 = 2;
  const auto f = pds::normalize_config(e, pds::ConfigPolicy::Normalize);
  CHECK(f.c6 == 0);
  CHECK(f.c4 == 0);
  CHECK(f.half_points.size() == 2);
  CHECK(f.degree() == 60);

  // Within the caps nothing changes.
  OrbifoldConfig g;
  g.l = 6;
  g.c10 = 1;
  CHECK(pds::normalize_config(g, pds::ConfigPolicy::Reject) == g);
}

TEST_CASE("candidate families: shapes pinned by the enumeration scheme") {
  // Budget 0: the single forced-corner config.
  const auto f6 = pds::candidate_basis_configs(6, 1, 0);
  REQUIRE(f6.size() == 1);
  CHECK(f6[0].c10 == 1);
  CHECK(f6[0].half_points.empty());
  CHECK(f6[0].whole_points.empty());
  CHECK(f6[0].degree() == 6);

  // Budget 1: two all-half configs at 1/3 and 2/5.
  const auto f30 = pds::candidate_basis_configs(30, 2, 0);
  REQUIRE(f30.size() == 2);
  CHECK(f30[0].half_points.size() == 1);
  CHECK(f30[0].half_points[0].t == Rational(1, 3));
  CHECK(f30[1].half_points.size() == 1);
  CHECK(f30[1].half_points[0].t == Rational(2, 5));

  // Budget 2: two half-pair configs on disjoint parameter windows plus one
  // interior whole-point config.
  const auto f60 = pds::candidate_basis_configs(60, 3, 0);
  REQUIRE(f60.size() == 3);
  CHECK(f60[0].half_points.size() == 2);
  CHECK(f60[0].half_points[0].t == Rational(1, 3));
  CHECK(f60[0].half_points[1].t == Rational(2, 5));
  CHECK(f60[1].half_points.size() == 2);
  CHECK(f60[1].half_points[0].t == Rational(3, 7));
  CHECK(f60[1].half_points[1].t == Rational(4, 9));
  CHECK(f60[2].half_points.empty());
  CHECK(f60[2].whole_points.size() == 1);
  for (const auto& cfg : f60) CHECK(cfg.degree() == 60);

  // The offset shifts every parameter window deterministically.
  const auto shifted = pds::candidate_basis_configs(30, 2, 1);
  CHECK(shifted[0].half_points[0].t == Rational(2, 5));
  CHECK(shifted[1].half_points[0].t == Rational(3, 7));

  CHECK_THROWS_AS(pds::candidate_basis_configs(14, 1, 0), std::domain_error);
  CHECK_THROWS_AS(pds::candidate_basis_configs(6, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(pds::candidate_basis_configs(6, 0, 0), std::invalid_argument);
}

TEST_CASE("enumerated families produce independent harmonic modes") {
  // Degree 0: the empty config, constant mode.
  const auto f0 = pds::enumerate_basis_configs(0);
  REQUIRE(f0.size() == 1);
  CHECK(pds::config_mode(f0[0]) ==
        pds::Poly::constant(pds::Chart::Real3, Scalar::one()));

  for (const int l : {6, 10, 12, 15}) {
    const auto configs = pds::enumerate_basis_configs(l);
    REQUIRE(int(configs.size()) == pds::dim_invariant_harmonics(l));
    for (const auto& cfg : configs) {
      const pds::Poly mode = pds::config_mode(cfg);
      CHECK(mode.degree() == l);
      CHECK(mode.is_homogeneous());
      CHECK(mode.laplacian().is_zero());
    }
  }

  // Degree 30 is the first two-dimensional case: the two half-point modes
  // must come out exactly independent.
  const auto f30 = pds::enumerate_basis_configs(30);
  REQUIRE(f30.size() == 2);
  const pds::Poly m0 = pds::config_mode(f30[0]);
  const pds::Poly m1 = pds::config_mode(f30[1]);
  CHECK(pds::exact_rank({m0, m1}).rank == 2);
  CHECK(m0.laplacian().is_zero());
  CHECK(m1.laplacian().is_zero());

  CHECK_THROWS_AS(pds::enumerate_basis_configs(14), std::domain_error);
}
