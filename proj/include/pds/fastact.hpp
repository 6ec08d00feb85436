#pragma once

#include "pds/icosa.hpp"
#include "pds/poly.hpp"

#include <vector>

namespace pds {

// Drop-in exact equivalents of the group-action operations in icosa.hpp,
// specialized for the high-degree polynomials the pipeline produces.
//
// All group substitution coefficients lie in (1/4) Z[sqrt5, i], so the image
// of a degree-d monomial has the uniform denominator 4^d and integer-lattice
// numerators. These routines clear denominators, build per-element monomial
// image tables with 128-bit lattice arithmetic (chained degree by degree),
// and apply them to the polynomial's integer coefficient vector. A mass
// bound (|a| + 3|b| + |c| + 3|d| on a + b sqrt5 + i(c + d sqrt5), which is
// submultiplicative) is checked per call: it certifies that no intermediate
// can overflow; if the certificate cannot be established, the call silently
// falls back to the generic substitute-based path, so results are always
// exact and identical to the icosa.hpp versions (asserted in tests).

Poly act_on_poly_s2_fast(const Rotation3& r, const Poly& f);
Poly act_on_poly_s3_fast(const Quaternion& q, const Poly& f);

int invariance_count_s2_fast(const Poly& f);
int invariance_count_s3_fast(const Poly& f);

Poly reynolds_average_s2_fast(const Poly& f);
Poly reynolds_average_s3_fast(const Poly& f);

// Averages every input in one pass, sharing the per-element tables across
// the whole batch (the tables dominate the cost, so batching the projector
// over a basis is far cheaper than averaging one element at a time).
std::vector<Poly> reynolds_average_s3_bulk(const std::vector<Poly>& fs);

}  // namespace pds
