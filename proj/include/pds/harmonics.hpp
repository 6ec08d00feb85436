#pragma once

#include "pds/poly.hpp"

#include <vector>

namespace pds {

// Exact unnormalized basis of the degree-l harmonic homogeneous polynomials
// on R^3 (restrictions to S^2 are the usual spherical harmonics up to
// per-(l,m) positive rational scale and the sqrt(../pi) normalizers, which
// this library never introduces). Indexed by m = -l..l with
// poly(-m) = conjugate(poly(m)) exactly.
struct HarmonicBasis2 {
  int l = 0;
  std::vector<Poly> polys;  // size 2l+1; slot m+l holds the order-m element

  const Poly& poly(int m) const;
};

// Built from the two-term recursion on associated-Legendre numerators:
//   H[m][m]   = 1
//   H[m+1][m] = (2m+1) z
//   (l-m) H[l][m] = (2l-1) z H[l-1][m] - (l-1+m) r^2 H[l-2][m]
// with poly(m) = (x+iy)^m H[l][m] for m >= 0 and conjugation below.
// Coefficients stay rational (times i from the (x+iy) powers).
HarmonicBasis2 solid_harmonics(int l);

// The full degree-k family on the 3-sphere: vertical modes obtained by
// pulling back solid_harmonics(k/2) through the fibration, then the twisted
// columns generated by the raising/lowering operators. (k+1)^2 modes total,
// all exactly harmonic, mode(m,n) has fiber-rotation eigenvalue n.
struct LiftedLattice {
  int k = 0;
  std::vector<Poly> modes;  // (k+1)^2, slot (m+k/2)*(k+1) + (n+k/2)

  const Poly& mode(int m, int n) const;
};

// Requires k even and >= 0; throws std::invalid_argument otherwise.
LiftedLattice lifted_lattice(int k);

// c*P + conj(c)*conjugate(P): the generic real-valued combination of a mode
// and its conjugate partner. Always equals its own conjugate.
Poly real_combination(const Poly& p, const Scalar& c);

}  // namespace pds
