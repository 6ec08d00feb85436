#pragma once

// JSON serialization for the exact types: scalars, polynomials, orbifold
// configurations, multipole direction sets, and the symmetry-group tables.
//
// All rational numbers travel as strings ("num/den", or just "num" when the
// denominator is 1) so that no precision is lost and files stay diff-friendly.
// Polynomial terms are written in the library's canonical order (descending
// graded lexicographic), so writing and re-reading a polynomial reproduces
// the identical term list byte for byte.
//
// This layer is also where the strict file contract is enforced: interior
// arc parameters must satisfy 0 < t < 1 and barycentric weights must be
// positive.  The geometry layer underneath is deliberately permissive (it
// only rejects configurations whose orbits degenerate), so that tests can
// probe degenerate data directly; files, however, must be canonical.
//
// Any malformed or out-of-contract input throws FormatError, which the CLI
// maps to exit code 2 (as opposed to exit code 1 for domain errors raised
// by the math layer).

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "pds/maxwell.hpp"
#include "pds/orbifold.hpp"
#include "pds/poly.hpp"

namespace pds {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- Scalars -------------------------------------------------------------
//
//   {"re_rat": "1/2", "re_s5": "0", "im_rat": "0", "im_s5": "-3/4"}
//
// representing (re_rat + re_s5*sqrt(5)) + i*(im_rat + im_s5*sqrt(5)).

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

// --- Polynomials ---------------------------------------------------------
//
//   {"chart": "real3" | "real4" | "cplx",
//    "terms": [{"exp": [2, 0, 1], "coeff": {...scalar...}}, ...]}
//
// Terms are emitted in canonical (descending grlex) order; readers accept
// terms in any order and merge duplicates exactly.

nlohmann::json poly_to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j);

// --- Orbifold configurations ----------------------------------------------
//
//   {"l": 30, "c10": 0, "c6": 0, "c4": 0,
//    "half_points": [{"arc": "25", "t": "1/3"}],
//    "whole_points": [{"bary": ["1", "1", "2"]}]}
//
// Enforces 0 < t < 1 and strictly positive barycentric weights.

nlohmann::json config_to_json(const OrbifoldConfig& c);
OrbifoldConfig config_from_json(const nlohmann::json& j);

// --- Multipole direction sets ----------------------------------------------
//
//   [["0", "1", "1/2 + 1/2*r5"], ...]   (one entry of three real scalars
//                                        per direction, repetition allowed)
//
// Each direction must be a nonzero real vector; it is canonicalized on read.

nlohmann::json multipole_to_json(const MultipoleSet& s);
MultipoleSet multipole_from_json(const nlohmann::json& j);

// --- Group tables ----------------------------------------------------------
//
//   {"rotations":   [ [[s,s,s],[s,s,s],[s,s,s]], ... 60 entries ],
//    "quaternions": [ [s, s, s, s], ... 120 entries ]}
//
// The exact rotation matrices of the icosahedral group I and the unit
// quaternions of its binary cover, in the library's fixed orientation.

nlohmann::json group_tables_to_json();

// --- File helpers -----------------------------------------------------------

nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

Poly load_poly(const std::string& path);
void save_poly(const std::string& path, const Poly& f);

}  // namespace pds
