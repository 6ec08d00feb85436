#pragma once

#include "pds/scalar.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pds {

// Coordinate charts polynomials can live in.
//   Real3: {x, y, z}            — ambient R^3 around the 2-sphere.
//   Real4: {x, y, z, w}         — ambient R^4 around the 3-sphere.
//   Cplx:  {a, ab, b, bb}       — complex coordinates (alpha, conj alpha,
//                                  beta, conj beta) on C^2 ~ R^4, treated as
//                                  four independent variables (Wirtinger).
enum class Chart : uint8_t { Real3, Real4, Cplx };

int chart_nvars(Chart c);
const char* chart_name(Chart c);
Chart chart_from_name(const std::string& s);
// Display name of variable `v` in chart `c` ("x","y","z","w","a","ab",...).
const char* chart_var_name(Chart c, int v);

// Exponent vector; entries beyond the chart's variable count stay zero.
using Mono = std::array<uint8_t, 4>;

inline int mono_degree(const Mono& m) {
  return int(m[0]) + int(m[1]) + int(m[2]) + int(m[3]);
}

// Strict "greater in graded lexicographic order" — higher total degree
// first, ties broken by the first differing exponent (larger first). Maps
// keyed by this comparator iterate leading term first, which fixes the
// canonical serialization order and elimination pivots.
struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    const int da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponents, larger first
  }
};

using TermMap = std::map<Mono, Scalar, GrlexGreater>;

// Sparse multivariate polynomial with exact Scalar coefficients in a fixed
// chart. Zero coefficients are never stored.
class Poly {
 public:
  explicit Poly(Chart chart) : chart_(chart) {}
  Poly() : chart_(Chart::Real3) {}

  static Poly zero(Chart chart) { return Poly(chart); }
  static Poly constant(Chart chart, const Scalar& c);
  static Poly variable(Chart chart, int var);
  static Poly monomial(Chart chart, const Mono& m, const Scalar& c);

  Chart chart() const { return chart_; }
  int nvars() const { return chart_nvars(chart_); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // Coefficient of monomial m (zero if absent).
  Scalar coeff(const Mono& m) const;
  // Leading (grlex-greatest) monomial; polynomial must be nonzero.
  const Mono& leading_monomial() const;

  // Adds c * x^m, erasing the entry if it cancels to zero.
  void add_term(const Mono& m, const Scalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Scalar& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.chart_ == b.chart_ && a.terms_ == b.terms_;
  }

  // Formal partial derivative with respect to variable index `var`.
  Poly differentiate(int var) const;

  // Complex conjugate of the polynomial function: conjugates every
  // coefficient; in the Cplx chart additionally swaps a<->ab and b<->bb so
  // the result again represents conj(F) as a polynomial in (a, ab, b, bb).
  Poly conjugate() const;

  // Substitutes images[v] for variable v. All images must share one chart,
  // which becomes the result's chart. Sizes must match this->nvars().
  Poly substitute(const std::vector<Poly>& images) const;

  // Flat Laplacian of the chart's ambient space:
  //   Real3: d^2/dx^2 + d^2/dy^2 + d^2/dz^2
  //   Real4: the four-term analogue
  //   Cplx:  4 (d_a d_ab + d_b d_bb), the R^4 Laplacian in complex
  //          coordinates.
  Poly laplacian() const;

  // Exact evaluation at a point given as one Scalar per variable.
  Scalar eval(const std::vector<Scalar>& point) const;
  // Floating evaluation at a complex point (used for sampling only).
  std::complex<double> eval(const std::vector<std::complex<double>>& point) const;

  // Human-readable form, grlex order, e.g. "2*x^2*y - z".
  std::string to_string() const;

 private:
  Chart chart_;
  TermMap terms_;
};

struct RankResult {
  int rank = 0;
  // Indices into the input list forming a maximal independent subset,
  // chosen greedily in input order (deterministic).
  std::vector<size_t> independent;
};

// Exact rank of a list of polynomials viewed as coefficient vectors over
// the common chart's monomial basis. Gaussian elimination with grlex
// leading-term pivoting; no rounding anywhere.
RankResult exact_rank(const std::vector<Poly>& rows);

// True iff q == c * p for some nonzero Scalar c (requires both nonzero, or
// both zero, in the same chart). On success stores the ratio if asked.
bool proportional(const Poly& p, const Poly& q, Scalar* ratio = nullptr);

}  // namespace pds
