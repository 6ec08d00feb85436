#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <string>

namespace pds {

using BigInt = boost::multiprecision::cpp_int;
// Always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Canonical "num/den" form (den printed even when 1, so round-trips are
// byte-identical).
std::string rational_to_string(const Rational& r);
// Accepts "num" or "num/den" with optional leading '-'. Throws
// std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);
double rational_to_double(const Rational& r);

// An element of the field Q(sqrt5, i), stored exactly as
//     (re_rat + re_s5*sqrt5) + i*(im_rat + im_s5*sqrt5).
// sqrt5 is real and irrational, i^2 = -1, so the four rational components
// are unique. This field contains every constant the pipeline produces:
// the golden ratio, icosahedral matrix entries, binary-icosahedral
// quaternion components, and all harmonic-polynomial coefficients.
struct Scalar {
  Rational re_rat{0};
  Rational re_s5{0};
  Rational im_rat{0};
  Rational im_s5{0};

  Scalar() = default;
  Scalar(Rational rr, Rational rs, Rational ir, Rational is)
      : re_rat(std::move(rr)), re_s5(std::move(rs)),
        im_rat(std::move(ir)), im_s5(std::move(is)) {}

  static Scalar zero() { return Scalar{}; }
  static Scalar one() { return from_int(1); }
  static Scalar from_int(long n) { return Scalar{Rational(n), 0, 0, 0}; }
  static Scalar from_rational(Rational r) {
    return Scalar{std::move(r), 0, 0, 0};
  }
  // re + i*im with re, im rational.
  static Scalar from_pair(Rational re, Rational im) {
    return Scalar{std::move(re), 0, std::move(im), 0};
  }
  static Scalar i() { return Scalar{0, 0, Rational(1), 0}; }
  static Scalar sqrt5() { return Scalar{0, Rational(1), 0, 0}; }
  // Golden ratio (1 + sqrt5)/2.
  static Scalar phi() {
    return Scalar{Rational(1, 2), Rational(1, 2), 0, 0};
  }
  // 1/phi = phi - 1 = (-1 + sqrt5)/2.
  static Scalar phi_inv() {
    return Scalar{Rational(-1, 2), Rational(1, 2), 0, 0};
  }

  bool is_zero() const {
    return re_rat == 0 && re_s5 == 0 && im_rat == 0 && im_s5 == 0;
  }
  bool is_real() const { return im_rat == 0 && im_s5 == 0; }
  // True when the value lies in Q itself (no sqrt5, no i).
  bool is_rational() const { return is_real() && re_s5 == 0; }

  Scalar conj() const { return Scalar{re_rat, re_s5, -im_rat, -im_s5}; }

  Scalar operator-() const {
    return Scalar{-re_rat, -re_s5, -im_rat, -im_s5};
  }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  // Exact multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) = default;
  // Arbitrary strict total order (componentwise lexicographic); used for
  // canonical sorting and set keys, not for magnitude.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::complex<double> to_complex() const;

  // Human-readable form, e.g. "1/2 + 1/2*r5", "-i", "2 - 3*i".
  std::string to_string() const;
};

}  // namespace pds
