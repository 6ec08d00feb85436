#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pds/hopf.hpp"

#include <cmath>
#include <vector>

using pds::Chart;
using pds::Mono;
using pds::Poly;
using pds::Rational;
using pds::Scalar;

namespace {

Poly A() { return Poly::variable(Chart::Cplx, 0); }
Poly Ab() { return Poly::variable(Chart::Cplx, 1); }
Poly B() { return Poly::variable(Chart::Cplx, 2); }
Poly Bb() { return Poly::variable(Chart::Cplx, 3); }
Poly X() { return Poly::variable(Chart::Real3, 0); }
Poly Y() { return Poly::variable(Chart::Real3, 1); }
Poly Z3() { return Poly::variable(Chart::Real3, 2); }

// All monomials of total degree <= maxdeg in the Cplx chart.
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

TEST_CASE("fibration components square-sum to the squared radius") {
  const auto& im = pds::hopf_images();
  const Poly r2 = A() * Ab() + B() * Bb();
  CHECK(im.x_image * im.x_image + im.y_image * im.y_image +
            im.z_image * im.z_image ==
        r2 * r2);
  CHECK(im.x_image.degree() == 2);
  CHECK(im.x_image.conjugate() == im.x_image);
  CHECK(im.y_image.conjugate() == im.y_image);
  CHECK(im.z_image.conjugate() == im.z_image);
}

TEST_CASE("numeric fibration map") {
  const auto p1 = pds::hopf_point({1, 0}, {0, 0});
  CHECK(p1[0] == doctest::Approx(0.0));
  CHECK(p1[1] == doctest::Approx(0.0));
  CHECK(p1[2] == doctest::Approx(-1.0));

  const auto p2 = pds::hopf_point({0, 0}, {1, 0});
  CHECK(p2[2] == doctest::Approx(1.0));

  const double s = 1.0 / std::sqrt(2.0);
  const auto p3 = pds::hopf_point({s, 0}, {s, 0});
  CHECK(p3[0] == doctest::Approx(1.0));
  CHECK(p3[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p3[2] == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS((void)pds::hopf_point({1, 0}, {1, 0}), std::domain_error);
}

TEST_CASE("lift of pinned quadratics") {
  // x^2 - y^2 pulls back to 2(a^2 bb^2 + ab^2 b^2).
  const Poly f1 = X() * X() - Y() * Y();
  CHECK(pds::lift(f1) ==
        (A() * A() * Bb() * Bb() + Ab() * Ab() * B() * B())
            .scaled(Scalar::from_int(2)));
  // x^2 + y^2 - 2z^2 pulls back to -2(a^2 ab^2 - 4 a ab b bb + b^2 bb^2).
  const Poly f2 = X() * X() + Y() * Y() - (Z3() * Z3()).scaled(Scalar::from_int(2));
  Poly want(Chart::Cplx);
  want.add_term(Mono{2, 2, 0, 0}, Scalar::from_int(-2));
  want.add_term(Mono{1, 1, 1, 1}, Scalar::from_int(8));
  want.add_term(Mono{0, 0, 2, 2}, Scalar::from_int(-2));
  CHECK(pds::lift(f2) == want);

  CHECK(pds::lift(Poly::constant(Chart::Real3, Scalar::one())) ==
        Poly::constant(Chart::Cplx, Scalar::one()));
  CHECK(pds::lift(Z3()) == B() * Bb() - A() * Ab());
}

TEST_CASE("lift doubles degree and lands in the vertical subspace") {
  const std::vector<Poly> cases = {
      X(), X() * Y() * Z3(), X() * X() * Y() - Z3() * Z3() * Z3(),
      (X() + Y()).scaled(Scalar::phi()) * Z3()};
  for (const Poly& f : cases) {
    const Poly F = pds::lift(f);
    CHECK(F.degree() == 2 * f.degree());
    CHECK(F.is_homogeneous());
    CHECK(pds::is_vertical(F));
    CHECK(pds::twist_of(F) == Rational(0));
  }
  CHECK_THROWS_AS((void)pds::lift(X() + Poly::constant(Chart::Real3, Scalar::one())),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)pds::lift(A()), std::invalid_argument);
}

TEST_CASE("fiber-rotation eigenvalues") {
  CHECK(pds::z_operator(A() * B()) == A() * B());
  CHECK(pds::z_operator(A() * Ab()).is_zero());
  CHECK(pds::z_operator(Ab() * Ab() * Bb() * Bb()) ==
        (Ab() * Ab() * Bb() * Bb()).scaled(Scalar::from_int(-2)));
  // Half-integer eigenvalue on odd degree.
  CHECK(pds::twist_of(A()) == Rational(1, 2));
  CHECK(pds::twist_of(A() * B() + Ab()) == std::nullopt);
}

TEST_CASE("raising and lowering on pinned monomials") {
  CHECK(pds::twist_lower(A() * Ab()) == -(Ab() * Bb()));
  CHECK(pds::twist_raise(Ab() * Bb()) == A() * Ab() - B() * Bb());
  CHECK(pds::twist_of(pds::twist_raise(Ab() * Bb())) == Rational(0));
}

TEST_CASE("commutators with Z and the Laplacian on all monomials of degree <= 6") {
  for (const Poly& m : cplx_monomials_up_to(6)) {
    const Poly zr = pds::z_operator(pds::twist_raise(m)) -
                    pds::twist_raise(pds::z_operator(m));
    CHECK(zr == pds::twist_raise(m));
    const Poly zl = pds::z_operator(pds::twist_lower(m)) -
                    pds::twist_lower(pds::z_operator(m));
    CHECK(zl == -pds::twist_lower(m));
    CHECK(pds::twist_raise(m).laplacian() == pds::twist_raise(m.laplacian()));
    CHECK(pds::twist_lower(m).laplacian() == pds::twist_lower(m.laplacian()));
  }
}

TEST_CASE("Laplacian intertwines with the lift through the radius factor") {
  // For homogeneous f in real3, Lap(lift f) = 4 (a ab + b bb) lift(Lap f):
  // lifting is not Laplacian-commuting term by term, but harmonic inputs
  // still lift to harmonic outputs because the right side vanishes.
  const Poly r2 = A() * Ab() + B() * Bb();
  for (int dx = 0; dx <= 4; ++dx)
    for (int dy = 0; dx + dy <= 4; ++dy)
      for (int dz = 0; dx + dy + dz <= 4; ++dz) {
        const Poly f = Poly::monomial(
            Chart::Real3, Mono{uint8_t(dx), uint8_t(dy), uint8_t(dz), 0},
            Scalar::one());
        CHECK(pds::lift(f).laplacian() ==
              r2.scaled(Scalar::from_int(4)) * pds::lift(f.laplacian()));
      }
  // Consequence: pinned harmonic quadratics lift to harmonic quartics.
  CHECK(pds::lift(X() * X() - Y() * Y()).laplacian().is_zero());
  CHECK(pds::lift(X() * Y()).laplacian().is_zero());
}

TEST_CASE("raising a lifted degree-k mode more than k/2 times kills it") {
  const Poly F = pds::lift(X() * X() - Y() * Y());  // degree 4, so 3 raises
  Poly cur = F;
  for (int n = 1; n <= 2; ++n) {
    cur = pds::twist_raise(cur);
    CHECK_FALSE(cur.is_zero());
    CHECK(pds::twist_of(cur) == Rational(n));
  }
  CHECK(pds::twist_raise(cur).is_zero());
  CHECK(pds::twist_apply(F, 3).is_zero());
  CHECK(pds::twist_apply(F, -3).is_zero());
  CHECK(pds::twist_apply(F, 0) == F);
}

TEST_CASE("conjugation swaps raised and lowered families") {
  // For real f, conj(raise^n(lift f)) = lower^n(lift f); for a complex
  // pair, the partner is the conjugate polynomial.
  const Poly fr = X() * X() - Y() * Y();
  const Poly fc = (X() + Y().scaled(Scalar::i())) * (X() + Y().scaled(Scalar::i()));
  for (int n = 0; n <= 2; ++n) {
    CHECK(pds::twist_apply(pds::lift(fr), n).conjugate() ==
          pds::twist_apply(pds::lift(fr), -n));
    CHECK(pds::twist_apply(pds::lift(fc), n).conjugate() ==
          pds::twist_apply(pds::lift(fc.conjugate()), -n));
  }
}
