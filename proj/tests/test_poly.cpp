#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pds/poly.hpp"

#include <cstdint>
#include <vector>

using pds::Chart;
using pds::Mono;
using pds::Poly;
using pds::Rational;
using pds::Scalar;

namespace {

Poly X() { return Poly::variable(Chart::Real3, 0); }
Poly Y() { return Poly::variable(Chart::Real3, 1); }
Poly Z() { return Poly::variable(Chart::Real3, 2); }
Poly C3(long n) { return Poly::constant(Chart::Real3, Scalar::from_int(n)); }

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Small dense-ish random polynomial in the given chart, degree <= 3.
Poly random_poly(Chart chart, uint64_t seed) {
  Poly p(chart);
  const int nv = pds::chart_nvars(chart);
  for (int t = 0; t < 4; ++t) {
    Mono m{0, 0, 0, 0};
    int budget = 3;
    for (int v = 0; v < nv; ++v) {
      const int e = int(splitmix64(seed * 131 + t * 17 + v) % (budget + 1));
      m[v] = uint8_t(e);
      budget -= e;
    }
    const long num = long(splitmix64(seed * 977 + t) % 9) - 4;
    p.add_term(m, Scalar::from_int(num));
  }
  return p;
}

}  // namespace

TEST_CASE("construction and basic queries") {
  const Poly p = (X() + Y()) * (X() + Y());
  CHECK(p == X() * X() + C3(2) * X() * Y() + Y() * Y());
  CHECK(p.degree() == 2);
  CHECK(p.term_count() == 3);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + C3(1)).is_homogeneous());
  CHECK(Poly::zero(Chart::Real3).degree() == -1);
  CHECK(p.coeff(Mono{1, 1, 0, 0}) == Scalar::from_int(2));
  CHECK(p.coeff(Mono{0, 0, 2, 0}).is_zero());
  CHECK(p.leading_monomial() == Mono{2, 0, 0, 0});
  CHECK((p - p).is_zero());
}

TEST_CASE("terms iterate leading-first in graded lex order") {
  const Poly p = Z() + X() * X() + Y() + X() * Y() * Z();
  std::vector<Mono> got;
  for (const auto& [m, c] : p.terms()) got.push_back(m);
  const std::vector<Mono> want = {Mono{1, 1, 1, 0}, Mono{2, 0, 0, 0},
                                  Mono{0, 1, 0, 0}, Mono{0, 0, 1, 0}};
  CHECK(got == want);
}

TEST_CASE("chart hygiene") {
  CHECK_THROWS_AS((void)(X() + Poly::variable(Chart::Cplx, 0)), std::invalid_argument);
  CHECK_THROWS_AS((void)(X() * Poly::variable(Chart::Real4, 3)), std::invalid_argument);
  CHECK_THROWS_AS((void)Poly::variable(Chart::Real3, 3), std::invalid_argument);
  CHECK_THROWS_AS((void)X().differentiate(3), std::invalid_argument);
  CHECK_THROWS_AS(
      (void)Poly::monomial(Chart::Real3, Mono{0, 0, 0, 1}, Scalar::one()),
      std::invalid_argument);
  // Exponents are capped at 255 per variable.
  const Poly big = Poly::monomial(Chart::Real3, Mono{200, 0, 0, 0}, Scalar::one());
  const Poly big2 = Poly::monomial(Chart::Real3, Mono{60, 0, 0, 0}, Scalar::one());
  CHECK_THROWS_AS((void)(big * big2), std::domain_error);
}

TEST_CASE("differentiation") {
  const Poly p = X() * X() * X() * Y();  // x^3 y
  CHECK(p.differentiate(0) == C3(3) * X() * X() * Y());
  CHECK(p.differentiate(1) == X() * X() * X());
  CHECK(p.differentiate(2).is_zero());
  for (uint64_t s = 1; s <= 12; ++s) {
    const Poly q = random_poly(Chart::Real4, s);
    CHECK(q.differentiate(0).differentiate(2) == q.differentiate(2).differentiate(0));
    // Leibniz rule.
    const Poly r = random_poly(Chart::Real4, s + 100);
    CHECK((q * r).differentiate(1) ==
          q.differentiate(1) * r + q * r.differentiate(1));
  }
}

TEST_CASE("conjugation") {
  // Real chart: coefficients only.
  const Poly p = X().scaled(Scalar::i()) + Y();
  CHECK(p.conjugate() == X().scaled(-Scalar::i()) + Y());
  // Complex chart: swap a<->ab, b<->bb and conjugate coefficients.
  const Poly a = Poly::variable(Chart::Cplx, 0);
  const Poly ab = Poly::variable(Chart::Cplx, 1);
  const Poly b = Poly::variable(Chart::Cplx, 2);
  const Poly bb = Poly::variable(Chart::Cplx, 3);
  const Poly q = (a * a * bb).scaled(Scalar::i());
  CHECK(q.conjugate() == (ab * ab * b).scaled(-Scalar::i()));
  for (uint64_t s = 1; s <= 8; ++s) {
    const Poly r = random_poly(Chart::Cplx, s);
    CHECK(r.conjugate().conjugate() == r);
    const Poly t = random_poly(Chart::Cplx, s + 50);
    CHECK((r * t).conjugate() == r.conjugate() * t.conjugate());
  }
}

TEST_CASE("substitution") {
  // f(x,y,z) = x^2 + y with x -> x+y, y -> x*y, z -> z gives
  // (x+y)^2 + x*y = x^2 + 3*x*y + y^2.
  const Poly f = X() * X() + Y();
  const Poly g = f.substitute({X() + Y(), X() * Y(), Z()});
  CHECK(g == X() * X() + C3(3) * X() * Y() + Y() * Y());

  // Substitution is a ring homomorphism.
  const std::vector<Poly> images = {X() + Z(), Y() * Y(), X() - Y()};
  for (uint64_t s = 1; s <= 8; ++s) {
    const Poly p = random_poly(Chart::Real3, s);
    const Poly q = random_poly(Chart::Real3, s + 30);
    CHECK((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
    CHECK((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
  }

  CHECK_THROWS_AS((void)f.substitute({X(), Y()}), std::invalid_argument);
  CHECK_THROWS_AS(
      (void)f.substitute({X(), Y(), Poly::variable(Chart::Real4, 3)}),
      std::invalid_argument);
}

TEST_CASE("laplacian in real charts") {
  CHECK((X() * X()).laplacian() == C3(2));
  CHECK((X() * X() - Y() * Y()).laplacian().is_zero());
  CHECK((X() * X() + Y() * Y() + Z() * Z()).laplacian() == C3(6));
  // Product rule Lap(fg) = f Lap g + g Lap f + 2 grad f . grad g.
  for (uint64_t s = 1; s <= 8; ++s) {
    const Poly f = random_poly(Chart::Real3, s);
    const Poly g = random_poly(Chart::Real3, s + 77);
    Poly cross(Chart::Real3);
    for (int v = 0; v < 3; ++v) cross += f.differentiate(v) * g.differentiate(v);
    CHECK((f * g).laplacian() ==
          f * g.laplacian() + g * f.laplacian() + cross.scaled(Scalar::from_int(2)));
  }
}

TEST_CASE("laplacian in the complex chart matches the flat R^4 operator") {
  const Poly a = Poly::variable(Chart::Cplx, 0);
  const Poly ab = Poly::variable(Chart::Cplx, 1);
  const Poly b = Poly::variable(Chart::Cplx, 2);
  const Poly bb = Poly::variable(Chart::Cplx, 3);
  // |alpha|^2 has Laplacian 4; |alpha|^2 + |beta|^2 (the squared radius) 8.
  CHECK((a * ab).laplacian() == Poly::constant(Chart::Cplx, Scalar::from_int(4)));
  CHECK((a * ab + b * bb).laplacian() ==
        Poly::constant(Chart::Cplx, Scalar::from_int(8)));
  // Purely unbarred polynomials are annihilated.
  CHECK((a * a * b).laplacian().is_zero());
}

TEST_CASE("exact rank with deterministic independent subset") {
  const auto r1 = pds::exact_rank({X(), Y(), X() + Y()});
  CHECK(r1.rank == 2);
  CHECK(r1.independent == std::vector<size_t>{0, 1});

  const auto r2 = pds::exact_rank(
      {X() * X(), X() * X() + Y() * Y(), Y() * Y() - X() * X()});
  CHECK(r2.rank == 2);
  CHECK(r2.independent == std::vector<size_t>{0, 1});

  const auto r3 = pds::exact_rank({Poly::zero(Chart::Real3), X()});
  CHECK(r3.rank == 1);
  CHECK(r3.independent == std::vector<size_t>{1});

  // Dependence through irrational coefficients is still caught exactly:
  // sqrt5 * (x + sqrt5*y) = 5y + sqrt5*x.
  const Poly u = X() + Y().scaled(Scalar::sqrt5());
  const Poly v = X().scaled(Scalar::sqrt5()) + Y().scaled(Scalar::from_int(5));
  const auto r4 = pds::exact_rank({u, v});
  CHECK(r4.rank == 1);

  CHECK(pds::exact_rank({}).rank == 0);
}

TEST_CASE("proportionality") {
  const Poly p = X() * X() - Y() * Z();
  Scalar ratio;
  CHECK(pds::proportional(p, p.scaled(Scalar{-2, 1, 0, 0}), &ratio));
  CHECK(ratio == Scalar{-2, 1, 0, 0});
  CHECK_FALSE(pds::proportional(X() + Y(), X() - Y()));
  CHECK_FALSE(pds::proportional(X(), Poly::zero(Chart::Real3)));
  CHECK(pds::proportional(Poly::zero(Chart::Real3), Poly::zero(Chart::Real3)));
}

TEST_CASE("evaluation") {
  const Poly f = X() * X() * Y();
  CHECK(f.eval({Scalar::from_int(2), Scalar::from_int(3), Scalar::from_int(1)}) ==
        Scalar::from_int(12));
  // phi is a root of x^2 - x - 1.
  const Poly g = X() * X() - X() - C3(1);
  CHECK(g.eval({Scalar::phi(), Scalar::zero(), Scalar::zero()}).is_zero());
  // Floating evaluation agrees with exact evaluation.
  const Poly h = random_poly(Chart::Real3, 5);
  const std::vector<Scalar> pt = {Scalar{Rational(1, 3), 0, 0, 0},
                                  Scalar{Rational(-2, 7), 0, 0, 0},
                                  Scalar::phi()};
  std::vector<std::complex<double>> ptd;
  for (const auto& s : pt) ptd.push_back(s.to_complex());
  CHECK(std::abs(h.eval(pt).to_complex() - h.eval(ptd)) < 1e-12);
}

TEST_CASE("printing") {
  CHECK(Poly::zero(Chart::Real3).to_string() == "0");
  CHECK((C3(2) * X() * X() * Y() - Z()).to_string() == "2*x^2*y - z");
  const Poly a = Poly::variable(Chart::Cplx, 0);
  const Poly bb = Poly::variable(Chart::Cplx, 3);
  CHECK((a * bb).scaled(-Scalar::i()).to_string() == "-i*a*bb");
  CHECK((X().scaled(Scalar::phi())).to_string() == "(1/2 + 1/2*r5)*x");
}
