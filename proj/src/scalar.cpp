#include "pds/scalar.hpp"

#include <sstream>
#include <stdexcept>
#include <tuple>

namespace pds {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) {
    os << '/' << boost::multiprecision::denominator(r);
  }
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(s));
    }
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) {
      throw std::invalid_argument("zero denominator in rational literal: " + s);
    }
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

double rational_to_double(const Rational& r) {
  return static_cast<double>(r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_rat += o.re_rat;
  re_s5 += o.re_s5;
  im_rat += o.im_rat;
  im_s5 += o.im_s5;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_rat -= o.re_rat;
  re_s5 -= o.re_s5;
  im_rat -= o.im_rat;
  im_s5 -= o.im_s5;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  // Write a = (p + q*r5) + i(u + v*r5), b = (p' + q'*r5) + i(u' + v'*r5)
  // and expand using r5^2 = 5, i^2 = -1.
  const Rational &p = a.re_rat, &q = a.re_s5, &u = a.im_rat, &v = a.im_s5;
  const Rational &P = b.re_rat, &Q = b.re_s5, &U = b.im_rat, &V = b.im_s5;
  Scalar r;
  r.re_rat = p * P + 5 * q * Q - u * U - 5 * v * V;
  r.re_s5 = p * Q + q * P - u * V - v * U;
  r.im_rat = p * U + 5 * q * V + u * P + 5 * v * Q;
  r.im_s5 = p * V + q * U + u * Q + v * P;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero Scalar");
  // First clear i: 1/z = conj(z) / (z * conj(z)), where n = z*conj(z) is a
  // real element u + v*r5 of Q(sqrt5). Then clear r5 on n:
  // 1/(u + v*r5) = (u - v*r5) / (u^2 - 5 v^2), exact because u^2 = 5 v^2
  // with u, v rational forces u = v = 0.
  const Scalar c = conj();
  const Scalar n = *this * c;  // real: n.im_rat == n.im_s5 == 0
  const Rational& u = n.re_rat;
  const Rational& v = n.re_s5;
  const Rational d = u * u - 5 * v * v;
  if (d == 0) throw std::domain_error("division by zero Scalar");
  // 1/n = (u - v*r5)/d, so 1/z = c * (u - v*r5)/d.
  const Scalar n_inv{u / d, -v / d, Rational(0), Rational(0)};
  return c * n_inv;
}

bool operator<(const Scalar& a, const Scalar& b) {
  return std::tie(a.re_rat, a.re_s5, a.im_rat, a.im_s5) <
         std::tie(b.re_rat, b.re_s5, b.im_rat, b.im_s5);
}

std::complex<double> Scalar::to_complex() const {
  static const double r5 = std::sqrt(5.0);
  return {rational_to_double(re_rat) + rational_to_double(re_s5) * r5,
          rational_to_double(im_rat) + rational_to_double(im_s5) * r5};
}

namespace {

// Appends "c" or "c*unit" (unit = "r5", "i", "i*r5") to os, with sign
// handling that produces " + " / " - " separators after the first term.
void append_term(std::ostringstream& os, bool& first, const Rational& c,
                 const char* unit) {
  if (c == 0) return;
  Rational a = c;
  if (first) {
    if (a < 0) {
      os << '-';
      a = -a;
    }
    first = false;
  } else {
    os << (a < 0 ? " - " : " + ");
    if (a < 0) a = -a;
  }
  const bool unit_only = (*unit != '\0') && a == 1;
  if (unit_only) {
    os << unit;
    return;
  }
  os << boost::multiprecision::numerator(a);
  if (boost::multiprecision::denominator(a) != 1) {
    os << '/' << boost::multiprecision::denominator(a);
  }
  if (*unit != '\0') os << '*' << unit;
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  append_term(os, first, re_rat, "");
  append_term(os, first, re_s5, "r5");
  append_term(os, first, im_rat, "i");
  append_term(os, first, im_s5, "i*r5");
  return os.str();
}

}  // namespace pds
