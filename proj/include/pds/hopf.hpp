#pragma once

#include "pds/poly.hpp"

#include <array>
#include <complex>
#include <optional>

namespace pds {

// The classical fibration p : S^3 -> S^2. With (alpha, beta) complex
// coordinates on C^2 ~ R^4, its three components are the quadratics
//   x = a*bb + ab*b,   y = -i(a*bb - ab*b),   z = b*bb - a*ab,
// homogeneous of bidegree (1,1). On the unit sphere |alpha|^2+|beta|^2 = 1
// they satisfy x^2 + y^2 + z^2 = 1; as polynomials the sum of squares is
// (a*ab + b*bb)^2, which the unit tests pin down exactly.
struct HopfImages {
  Poly x_image;
  Poly y_image;
  Poly z_image;
};

const HopfImages& hopf_images();

// Numeric fibration map. Requires |alpha|^2 + |beta|^2 = 1 within 1e-12;
// throws std::domain_error otherwise.
std::array<double, 3> hopf_point(std::complex<double> alpha,
                                 std::complex<double> beta);

// Pullback along the fibration: f(x,y,z) homogeneous of degree l becomes
// F(alpha, beta) = f(p(alpha, beta)), homogeneous of degree 2l in the Cplx
// chart and constant along fibers (z_operator(F) = 0). Harmonicity is
// preserved. Throws std::invalid_argument unless f is homogeneous Real3.
Poly lift(const Poly& f);

// Fiber-rotation generator Z = (a d_a - ab d_ab + b d_b - bb d_bb)/2. A
// monomial a^p ab^q b^r bb^s is an eigenvector with eigenvalue
// (p - q + r - s)/2; eigenvalue 0 characterizes lifted (vertical)
// polynomials.
Poly z_operator(const Poly& p);

// First-order operators shifting the Z-eigenvalue by exactly +1 / -1:
//   twist_raise = -b d_ab + a d_bb
//   twist_lower = -bb d_a + ab d_b
// Both commute with the Laplacian, so they carry harmonics to harmonics.
// (Names are bound to the verified commutators [Z, raise] = +raise and
// [Z, lower] = -lower, not to any external labeling.)
Poly twist_raise(const Poly& p);
Poly twist_lower(const Poly& p);

// raise applied n times for n >= 0, lower applied -n times for n < 0.
Poly twist_apply(Poly p, int n);

// The common Z-eigenvalue of all monomials of p, when one exists (p is then
// "twist-homogeneous"); nullopt for mixed polynomials. Zero polynomial
// reports twist 0.
std::optional<Rational> twist_of(const Poly& p);

inline bool is_vertical(const Poly& p) { return z_operator(p).is_zero(); }

}  // namespace pds
