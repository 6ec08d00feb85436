#include "pds/hopf.hpp"

#include <cmath>
#include <stdexcept>

namespace pds {

namespace {

Poly cvar(int v) { return Poly::variable(Chart::Cplx, v); }

HopfImages make_images() {
  const Poly a = cvar(0), ab = cvar(1), b = cvar(2), bb = cvar(3);
  HopfImages im{Poly(Chart::Cplx), Poly(Chart::Cplx), Poly(Chart::Cplx)};
  im.x_image = a * bb + ab * b;
  im.y_image = (a * bb - ab * b).scaled(-Scalar::i());
  im.z_image = b * bb - a * ab;
  return im;
}

}  // namespace

const HopfImages& hopf_images() {
  static const HopfImages images = make_images();
  return images;
}

std::array<double, 3> hopf_point(std::complex<double> alpha,
                                 std::complex<double> beta) {
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > 1e-12) {
    throw std::domain_error("hopf_point: (alpha, beta) is not on the unit 3-sphere");
  }
  const std::complex<double> cross = alpha * std::conj(beta);
  return {2.0 * cross.real(), 2.0 * cross.imag(),
          std::norm(beta) - std::norm(alpha)};
}

Poly lift(const Poly& f) {
  if (f.chart() != Chart::Real3) {
    throw std::invalid_argument("lift: input must be in the real3 chart");
  }
  if (!f.is_homogeneous()) {
    throw std::invalid_argument("lift: input must be homogeneous");
  }
  const HopfImages& im = hopf_images();
  return f.substitute({im.x_image, im.y_image, im.z_image});
}

Poly z_operator(const Poly& p) {
  if (p.chart() != Chart::Cplx) {
    throw std::invalid_argument("z_operator: input must be in the cplx chart");
  }
  Poly r(Chart::Cplx);
  for (const auto& [m, c] : p.terms()) {
    const Rational eig(long(m[0]) - long(m[1]) + long(m[2]) - long(m[3]), 2);
    if (eig == 0) continue;
    r.add_term(m, c * Scalar::from_rational(eig));
  }
  return r;
}

Poly twist_raise(const Poly& p) {
  if (p.chart() != Chart::Cplx) {
    throw std::invalid_argument("twist_raise: input must be in the cplx chart");
  }
  return -(cvar(2) * p.differentiate(1)) + cvar(0) * p.differentiate(3);
}

Poly twist_lower(const Poly& p) {
  if (p.chart() != Chart::Cplx) {
    throw std::invalid_argument("twist_lower: input must be in the cplx chart");
  }
  return -(cvar(3) * p.differentiate(0)) + cvar(1) * p.differentiate(2);
}

Poly twist_apply(Poly p, int n) {
  for (; n > 0; --n) p = twist_raise(p);
  for (; n < 0; ++n) p = twist_lower(p);
  return p;
}

std::optional<Rational> twist_of(const Poly& p) {
  if (p.chart() != Chart::Cplx) {
    throw std::invalid_argument("twist_of: input must be in the cplx chart");
  }
  if (p.is_zero()) return Rational(0);
  std::optional<Rational> twist;
  for (const auto& [m, c] : p.terms()) {
    const Rational eig(long(m[0]) - long(m[1]) + long(m[2]) - long(m[3]), 2);
    if (!twist) {
      twist = eig;
    } else if (*twist != eig) {
      return std::nullopt;
    }
  }
  return twist;
}

}  // namespace pds
