#pragma once

#include "pds/icosa.hpp"
#include "pds/orbifold.hpp"
#include "pds/poly.hpp"

#include <array>
#include <complex>
#include <vector>

namespace pds {

// Dimension of the invariant degree-k eigenspace upstairs: 0 for odd k
// (the group contains the antipodal map), else (k+1) times the number of
// independent invariant degree-k/2 harmonics on the base sphere.
// Throws std::invalid_argument for negative k.
int dim_invariant_modes(int k);

// Default degree cap for the exact verification pass inside build_k_modes;
// the CLI lets the PDS_MAX_EXACT_K environment variable override it.
inline constexpr int kDefaultMaxExactK = 24;

// How each mode family was verified. Invariance counts come either from
// certified-exact symbolic substitution (k <= cap, exact == true) or from
// randomized exact identity testing: f(gamma x) == f(x) checked as an
// identity mod a 62-bit prime at three random points per group element
// (exact == false; a false positive needs three simultaneous Schwartz-
// Zippel collisions, probability under 1e-50). Harmonicity, twist, and
// rank are certified exact in both regimes.
struct VerificationReport {
  bool exact = true;              // certified substitution vs randomized points
  std::vector<int> s2_counts;     // per config: rotations fixing the sphere mode (of 60)
  std::vector<int> s3_counts;     // per config: quaternions fixing the lift (of 120)
  int rank = 0;                   // exact rank of the flattened twisted basis
};

// The complete invariant family at one even degree k: one basis
// configuration per invariant direction on the base sphere, its harmonic
// mode, the lifted vertical mode (twist 0), and the twisted relatives for
// every twist n = -k/2 ... k/2.
struct ModeFamily {
  int k = 0;
  std::vector<OrbifoldConfig> configs;
  std::vector<Poly> sphere_modes;    // real3 chart, degree k/2, harmonic
  std::vector<Poly> vertical_modes;  // cplx chart, degree k, twist 0
  std::vector<std::vector<Poly>> twisted;  // twisted[c][n + k/2]
  VerificationReport report;

  // All twisted modes flattened (config-major, n ascending).
  std::vector<Poly> basis() const;
};

// Builds and verifies the family: enumerate degree-k/2 configurations, take
// their multipole harmonics, check invariance under all 60 rotations, lift
// through the fibration, check invariance under all 120 quaternions, apply
// the twist operators through |n| = k/2, and confirm the flattened basis
// has exact rank dim_invariant_modes(k). For k <= exact_cap the invariance
// checks are certified symbolic substitutions; beyond, randomized exact
// identity tests at seeded points mod a large prime substitute. Rank and
// harmonicity stay exact at every k. Throws std::domain_error for odd or
// negative k; an infeasible
// k/2 yields an empty family; a failed verification throws std::logic_error
// (it would be a bug, not bad input).
ModeFamily build_k_modes(int k, int exact_cap = kDefaultMaxExactK);

// Same verification pipeline, but for caller-supplied configurations (for
// instance read from a file) instead of the enumerated basis. Every config
// must have degree k/2; the final rank check expects (k+1) independent
// twisted modes per configuration. Throws std::domain_error for odd or
// negative k or a degree mismatch, and std::logic_error if the supplied
// family fails verification.
ModeFamily build_family_from_configs(int k,
                                     const std::vector<OrbifoldConfig>& configs,
                                     int exact_cap = kDefaultMaxExactK);

// Randomized exact invariance counts, usable at any degree: the number of
// group elements gamma for which f(gamma x) == f(x) holds as a polynomial
// identity mod a 62-bit prime at `trials` seeded random points. A genuine
// symmetry is always counted; a spurious one would need `trials`
// simultaneous Schwartz-Zippel collisions (probability <= (deg/2^62) per
// trial). These back the verification of families beyond the exact cap.
int randomized_invariance_count_s2(const Poly& f, int trials = 3, uint64_t seed = 1);
int randomized_invariance_count_s3(const Poly& f, int trials = 3, uint64_t seed = 1);

// Independent dimension oracle that never looks at the configuration
// pipeline: project the full (k+1)^2 lattice of degree-k harmonics onto the
// invariants by group averaging and return the projected rank — exact
// elimination for k <= exact_cap, floating block SVD (relative tolerance
// 1e-8) beyond. Throws std::domain_error for odd or negative k.
int reynolds_rank_oracle(int k, int exact_cap = 12);

// Floating evaluation of a cplx-chart polynomial at unit points
// (alpha_re, alpha_im, beta_re, beta_im); each point must satisfy
// |alpha|^2 + |beta|^2 = 1 within 1e-12 (std::domain_error otherwise, as is
// a non-cplx chart).
std::vector<std::complex<double>> evaluate_mode(
    const Poly& f, const std::vector<std::array<double, 4>>& points);

// Same for a real3-chart polynomial at unit points (x, y, z).
std::vector<std::complex<double>> evaluate_mode_s2(
    const Poly& f, const std::vector<std::array<double, 3>>& points);

// Numeric counterparts of the exact group actions on points, matching the
// substitution conventions exactly: evaluating a substituted polynomial at p
// equals evaluating the original at the moved point.
std::array<double, 4> act_point_s3(const Quaternion& q, const std::array<double, 4>& p);
std::array<double, 3> rotate_point_s2(const Rotation3& r, const std::array<double, 3>& p);

}  // namespace pds
