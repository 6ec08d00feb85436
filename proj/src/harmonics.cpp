#include "pds/harmonics.hpp"

#include "pds/hopf.hpp"

#include <stdexcept>

namespace pds {

const Poly& HarmonicBasis2::poly(int m) const {
  if (m < -l || m > l) throw std::invalid_argument("harmonic order m out of range");
  return polys[size_t(m + l)];
}

HarmonicBasis2 solid_harmonics(int l) {
  if (l < 0) throw std::invalid_argument("harmonic degree must be non-negative");
  const Poly x = Poly::variable(Chart::Real3, 0);
  const Poly y = Poly::variable(Chart::Real3, 1);
  const Poly z = Poly::variable(Chart::Real3, 2);
  const Poly r2 = x * x + y * y + z * z;
  const Poly xiy = x + y.scaled(Scalar::i());

  HarmonicBasis2 basis;
  basis.l = l;
  basis.polys.assign(size_t(2 * l + 1), Poly(Chart::Real3));

  Poly xiy_pow = Poly::constant(Chart::Real3, Scalar::one());
  for (int m = 0; m <= l; ++m) {
    // March H[j][m] from j = m up to j = l.
    Poly prev(Chart::Real3);                                        // H[j-1][m]
    Poly cur = Poly::constant(Chart::Real3, Scalar::one());         // H[m][m]
    for (int j = m + 1; j <= l; ++j) {
      Poly next = z * cur.scaled(Scalar::from_int(2 * j - 1));
      if (j >= m + 2) next -= r2 * prev.scaled(Scalar::from_int(j - 1 + m));
      next = next.scaled(Scalar::from_rational(Rational(1, j - m)));
      prev = std::move(cur);
      cur = std::move(next);
    }
    const Poly pm = xiy_pow * cur;
    basis.polys[size_t(l + m)] = pm;
    basis.polys[size_t(l - m)] = pm.conjugate();
    if (m < l) xiy_pow *= xiy;
  }
  return basis;
}

const Poly& LiftedLattice::mode(int m, int n) const {
  const int h = k / 2;
  if (m < -h || m > h || n < -h || n > h) {
    throw std::invalid_argument("lattice index out of range");
  }
  return modes[size_t((m + h) * (k + 1) + (n + h))];
}

LiftedLattice lifted_lattice(int k) {
  if (k < 0 || k % 2 != 0) {
    throw std::invalid_argument("lattice degree k must be even and non-negative");
  }
  const int h = k / 2;
  const HarmonicBasis2 base = solid_harmonics(h);

  LiftedLattice lat;
  lat.k = k;
  lat.modes.assign(size_t((k + 1) * (k + 1)), Poly(Chart::Cplx));
  for (int m = -h; m <= h; ++m) {
    const size_t row = size_t(m + h) * size_t(k + 1);
    lat.modes[row + size_t(h)] = lift(base.poly(m));
    for (int n = 1; n <= h; ++n) {
      lat.modes[row + size_t(h + n)] = twist_raise(lat.modes[row + size_t(h + n - 1)]);
      lat.modes[row + size_t(h - n)] = twist_lower(lat.modes[row + size_t(h - n + 1)]);
    }
  }
  return lat;
}

Poly real_combination(const Poly& p, const Scalar& c) {
  if (p.chart() != Chart::Cplx) {
    throw std::invalid_argument("real_combination: input must be in the cplx chart");
  }
  return p.scaled(c) + p.conjugate().scaled(c.conj());
}

}  // namespace pds
