#include "pds/modes.hpp"

#include "pds/fastact.hpp"
#include "pds/harmonics.hpp"
#include "pds/hopf.hpp"
#include "pds/icosa.hpp"
#include "pds/sampling.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pds {

namespace {

using Cd = std::complex<double>;

Cd eval_terms(const Poly& f, const std::array<Cd, 4>& vars) {
  Cd sum = 0.0;
  for (const auto& [m, c] : f.terms()) {
    Cd term = c.to_complex();
    for (int v = 0; v < 4; ++v) {
      for (int e = 0; e < int(m[v]); ++e) term *= vars[v];
    }
    sum += term;
  }
  return sum;
}

std::array<Cd, 4> cplx_vars(const std::array<double, 4>& p) {
  const Cd alpha(p[0], p[1]), beta(p[2], p[3]);
  return {alpha, std::conj(alpha), beta, std::conj(beta)};
}

double max_abs_coeff(const Poly& f) {
  double m = 0.0;
  for (const auto& [mono, c] : f.terms()) m = std::max(m, std::abs(c.to_complex()));
  return m;
}

// Randomized exact invariance testing for degrees beyond the certified
// cap. The identity f(gamma x) == f(x) is tested by evaluating both sides
// at uniformly random points of GF(p), for a 62-bit prime p chosen so the
// coefficient field embeds: 5 and -1 are both quadratic residues mod p, so
// sqrt(5) and i become field elements. Two distinct polynomials of degree d
// agree at an independent uniform point with probability at most d/p
// (Schwartz-Zippel), so three agreeing points per group element make a
// false "invariant" verdict vanishingly unlikely, while a true identity
// always passes: there is no tolerance to tune, which matters because
// plain double evaluation of high-degree modes loses tens of digits to
// coefficient cancellation.
namespace modp {

constexpr uint64_t kP = 4611686018427387761ull;   // prime, 1 mod 4, 5 a square
constexpr uint64_t kSqrt5 = 276037557651519577ull;  // kSqrt5^2 = 5 mod kP
constexpr uint64_t kI = 1130501565556633554ull;     // kI^2 = -1 mod kP

uint64_t mul(uint64_t a, uint64_t b) {
  return uint64_t((unsigned __int128)(a)*b % kP);
}
uint64_t add(uint64_t a, uint64_t b) {
  const uint64_t s = a + b;  // both < 2^62, no overflow
  return s >= kP ? s - kP : s;
}
uint64_t pow_mod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint64_t from_bigint(const BigInt& n) {
  BigInt r = n % BigInt(kP);
  if (r < 0) r += kP;
  return r.convert_to<uint64_t>();
}

uint64_t from_rational(const Rational& q) {
  const uint64_t den = from_bigint(boost::multiprecision::denominator(q));
  if (den == 0) {
    // Would need a different prime; denominators here are products of small
    // integers, so this cannot occur in practice.
    throw std::logic_error("coefficient denominator divisible by the test prime");
  }
  return mul(from_bigint(boost::multiprecision::numerator(q)), pow_mod(den, kP - 2));
}

uint64_t from_scalar(const Scalar& s) {
  const uint64_t re = add(from_rational(s.re_rat), mul(from_rational(s.re_s5), kSqrt5));
  const uint64_t im = add(from_rational(s.im_rat), mul(from_rational(s.im_s5), kSqrt5));
  return add(re, mul(im, kI));
}

// A polynomial with coefficients projected into GF(p).
struct ProjectedPoly {
  int degree = 0;
  std::vector<std::pair<Mono, uint64_t>> terms;
};

ProjectedPoly project(const Poly& f) {
  static const bool constants_ok = [] {
    return mul(kSqrt5, kSqrt5) == 5 && mul(kI, kI) == kP - 1;
  }();
  if (!constants_ok) throw std::logic_error("bad GF(p) embedding constants");
  ProjectedPoly out;
  out.degree = std::max(0, f.degree());
  out.terms.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) out.terms.emplace_back(m, from_scalar(c));
  return out;
}

uint64_t eval(const ProjectedPoly& f, const std::array<uint64_t, 4>& vars) {
  std::array<std::vector<uint64_t>, 4> pw;
  for (int v = 0; v < 4; ++v) {
    pw[v].assign(size_t(f.degree) + 1, 1);
    for (int e = 1; e <= f.degree; ++e) pw[v][size_t(e)] = mul(pw[v][size_t(e) - 1], vars[v]);
  }
  uint64_t sum = 0;
  for (const auto& [m, c] : f.terms) {
    uint64_t t = c;
    for (int v = 0; v < 4; ++v) t = mul(t, pw[v][m[v]]);
    sum = add(sum, t);
  }
  return sum;
}

}  // namespace modp

// Counts the group elements gamma with f(gamma x) == f(x) as exact
// identities mod p at `trials` random points each; `images_of` supplies the
// substitution forms of the action (the same exact data the certified path
// substitutes symbolically).
template <typename Group, typename ImagesOf>
int randomized_invariance_count(const Poly& f, const Group& group,
                                ImagesOf images_of, int trials, uint64_t seed) {
  const modp::ProjectedPoly fp = modp::project(f);
  const int nvar = chart_nvars(f.chart());
  int count = 0;
  uint64_t counter = 0;
  for (const auto& g : group) {
    const std::vector<Poly> images = images_of(g);
    std::vector<modp::ProjectedPoly> forms;
    forms.reserve(images.size());
    for (const Poly& im : images) forms.push_back(modp::project(im));

    bool fixed = true;
    for (int t = 0; t < trials && fixed; ++t) {
      std::array<uint64_t, 4> v{1, 1, 1, 1};
      for (int j = 0; j < nvar; ++j) {
        v[size_t(j)] = splitmix64(splitmix64(seed) ^ ++counter) % modp::kP;
      }
      std::array<uint64_t, 4> w{1, 1, 1, 1};
      for (int j = 0; j < nvar; ++j) w[size_t(j)] = modp::eval(forms[size_t(j)], v);
      fixed = (modp::eval(fp, w) == modp::eval(fp, v));
    }
    count += fixed ? 1 : 0;
  }
  return count;
}


// ---------------------------------------------------------------------------
// Floating group averaging for the oracle beyond the exact cap: the same
// monomial-image-table idea as the exact fast path, in complex doubles.

using Key = uint32_t;

Key key_of(const Mono& m) {
  return (Key(m[0]) << 24) | (Key(m[1]) << 16) | (Key(m[2]) << 8) | Key(m[3]);
}

int key_twist(Key k) {
  return int((k >> 24) & 0xff) - int((k >> 16) & 0xff) + int((k >> 8) & 0xff) -
         int(k & 0xff);
}

using NumericRow = std::vector<std::pair<Key, Cd>>;

class NumericTable {
 public:
  explicit NumericTable(const std::vector<Poly>& images) {
    for (size_t v = 0; v < images.size(); ++v) {
      for (const auto& [m, c] : images[v].terms()) {
        int target = 0;
        for (int i = 0; i < 4; ++i) {
          if (m[i] == 1) target = i;
        }
        rows_[v].emplace_back(target, c.to_complex());
      }
    }
    memo_[0] = NumericRow{{0, Cd(1.0)}};
  }

  const NumericRow& image_of(const Mono& m) {
    const Key key = key_of(m);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int v = 3;
    while (m[v] == 0) --v;
    Mono base = m;
    base[v] -= 1;
    const NumericRow& prev = image_of(base);
    std::vector<std::pair<Key, Cd>> scratch;
    scratch.reserve(prev.size() * rows_[size_t(v)].size());
    for (const auto& [k, c] : prev) {
      for (const auto& [tv, rc] : rows_[size_t(v)]) {
        scratch.emplace_back(k + (Key(1) << (8 * (3 - tv))), c * rc);
      }
    }
    std::sort(scratch.begin(), scratch.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    NumericRow merged;
    for (const auto& [k, c] : scratch) {
      if (!merged.empty() && merged.back().first == k) {
        merged.back().second += c;
      } else {
        merged.emplace_back(k, c);
      }
    }
    return memo_.emplace(key, std::move(merged)).first->second;
  }

 private:
  std::array<std::vector<std::pair<int, Cd>>, 4> rows_;
  std::unordered_map<Key, NumericRow> memo_;
};

int floating_projected_rank(const std::vector<Poly>& modes, double rel_tol) {
  const auto& quats = icosahedral_groups().quaternions;

  // Scale-normalize each mode so tolerances are meaningful.
  std::vector<std::vector<std::pair<Key, Cd>>> inputs(modes.size());
  for (size_t i = 0; i < modes.size(); ++i) {
    const double scale = 1.0 / std::max(max_abs_coeff(modes[i]), 1e-300);
    for (const auto& [m, c] : modes[i].terms()) {
      inputs[i].emplace_back(key_of(m), c.to_complex() * scale);
    }
  }

  // Average the image of every mode over the group.
  std::vector<std::map<Key, Cd>> averaged(modes.size());
  for (const Quaternion& q : quats) {
    NumericTable table(quaternion_images(q));
    for (size_t i = 0; i < modes.size(); ++i) {
      for (const auto& [key, c] : inputs[i]) {
        Mono m{uint8_t(key >> 24), uint8_t(key >> 16), uint8_t(key >> 8),
               uint8_t(key)};
        for (const auto& [k2, w] : table.image_of(m)) {
          averaged[i][k2] += c * w;
        }
      }
    }
  }
  const double inv_n = 1.0 / double(quats.size());
  for (auto& row : averaged) {
    for (auto& [k, c] : row) c *= inv_n;
  }

  // The action preserves the twist of every monomial, so the averaged
  // matrix is block-diagonal by twist; rank sums over blocks with one
  // global tolerance.
  std::map<int, std::vector<size_t>> blocks;  // twist -> mode indices
  for (size_t i = 0; i < averaged.size(); ++i) {
    if (averaged[i].empty()) continue;
    blocks[key_twist(averaged[i].begin()->first)].push_back(i);
  }

  std::vector<Eigen::VectorXd> all_singular;
  double smax = 0.0;
  for (const auto& [twist, rows] : blocks) {
    std::map<Key, int> cols;
    for (const size_t i : rows) {
      for (const auto& [k, c] : averaged[i]) cols.emplace(k, 0);
    }
    int next = 0;
    for (auto& [k, idx] : cols) idx = next++;
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(long(rows.size()), long(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [k, c] : averaged[rows[r]]) mat(long(r), cols[k]) = c;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
    all_singular.push_back(svd.singularValues());
    if (all_singular.back().size() > 0) {
      smax = std::max(smax, all_singular.back()(0));
    }
  }
  // If even the largest singular value is at cancellation-noise scale, the
  // projected space is zero.
  if (smax < 1e-6) return 0;
  int rank = 0;
  for (const auto& sv : all_singular) {
    for (long i = 0; i < sv.size(); ++i) {
      if (sv(i) > rel_tol * smax) ++rank;
    }
  }
  return rank;
}

}  // namespace

int randomized_invariance_count_s2(const Poly& f, int trials, uint64_t seed) {
  if (f.chart() != Chart::Real3) {
    throw std::invalid_argument("expected a real3-chart polynomial");
  }
  return randomized_invariance_count(
      f, icosahedral_groups().rotations,
      [](const Rotation3& r) { return rotation_images(r); }, trials, seed);
}

int randomized_invariance_count_s3(const Poly& f, int trials, uint64_t seed) {
  if (f.chart() != Chart::Cplx) {
    throw std::invalid_argument("expected a cplx-chart polynomial");
  }
  return randomized_invariance_count(
      f, icosahedral_groups().quaternions,
      [](const Quaternion& q) { return quaternion_images(q); }, trials, seed);
}

int dim_invariant_modes(int k) {
  if (k < 0) throw std::invalid_argument("degree must be non-negative");
  if (k % 2 == 1) return 0;
  return (k + 1) * dim_invariant_harmonics(k / 2);
}

std::vector<Poly> ModeFamily::basis() const {
  std::vector<Poly> out;
  for (const auto& chain : twisted) out.insert(out.end(), chain.begin(), chain.end());
  return out;
}

ModeFamily build_k_modes(int k, int exact_cap) {
  if (k < 0 || k % 2 == 1) {
    throw std::domain_error("no modes exist at odd or negative degrees "
                            "(the covering group contains the antipodal map)");
  }
  ModeFamily fam;
  fam.k = k;
  if (dim_invariant_harmonics(k / 2) == 0) return fam;  // valid empty family
  fam = build_family_from_configs(k, enumerate_basis_configs(k / 2), exact_cap);
  if (fam.report.rank != dim_invariant_modes(k)) {
    throw std::logic_error("twisted basis rank does not match the dimension formula");
  }
  return fam;
}

ModeFamily build_family_from_configs(int k,
                                     const std::vector<OrbifoldConfig>& configs,
                                     int exact_cap) {
  if (k < 0 || k % 2 == 1) {
    throw std::domain_error("no modes exist at odd or negative degrees "
                            "(the covering group contains the antipodal map)");
  }
  const int l = k / 2;
  for (const OrbifoldConfig& cfg : configs) {
    if (cfg.l != l) {
      throw std::domain_error("configuration has degree " + std::to_string(cfg.l) +
                              ", expected " + std::to_string(l));
    }
  }
  ModeFamily fam;
  fam.k = k;
  fam.configs = configs;
  fam.report.exact = (k <= exact_cap);
  const int h = k / 2;

  for (const OrbifoldConfig& cfg : fam.configs) {
    const Poly f = config_mode(cfg);
    if (f.degree() != l || !f.is_homogeneous()) {
      throw std::logic_error("constructed sphere mode has the wrong degree");
    }
    if (!f.laplacian().is_zero()) {
      throw std::logic_error("constructed sphere mode is not harmonic");
    }
    if (fam.report.exact) {
      const int cnt = invariance_count_s2_fast(f);
      fam.report.s2_counts.push_back(cnt);
      if (cnt != 60) {
        throw std::logic_error("sphere mode is not invariant under all 60 rotations");
      }
    } else {
      const int cnt = randomized_invariance_count_s2(f, 3, 0x5eed5eedULL + uint64_t(l));
      fam.report.s2_counts.push_back(cnt);
      if (cnt != 60) {
        throw std::logic_error("sphere mode failed randomized invariance testing");
      }
    }

    const Poly lifted = lift(f);
    if (lifted.degree() != k || !z_operator(lifted).is_zero()) {
      throw std::logic_error("lifted mode is not a vertical degree-k polynomial");
    }
    if (!lifted.laplacian().is_zero()) {
      throw std::logic_error("lifted mode is not harmonic");
    }
    if (fam.report.exact) {
      const int cnt = invariance_count_s3_fast(lifted);
      fam.report.s3_counts.push_back(cnt);
      if (cnt != 120) {
        throw std::logic_error("lifted mode is not invariant under all 120 group elements");
      }
    } else {
      const int cnt = randomized_invariance_count_s3(lifted, 3, 0xf1be5ULL + uint64_t(k));
      fam.report.s3_counts.push_back(cnt);
      if (cnt != 120) {
        throw std::logic_error("lifted mode failed randomized invariance testing");
      }
    }

    std::vector<Poly> chain;
    chain.reserve(size_t(k) + 1);
    for (int n = -h; n <= h; ++n) {
      Poly t = twist_apply(lifted, n);
      if (t.is_zero() || twist_of(t) != Rational(n)) {
        throw std::logic_error("twisted mode does not have twist " + std::to_string(n));
      }
      if (!t.laplacian().is_zero()) {
        throw std::logic_error("twisting broke harmonicity");
      }
      chain.push_back(std::move(t));
    }
    fam.sphere_modes.push_back(f);
    fam.vertical_modes.push_back(lifted);
    fam.twisted.push_back(std::move(chain));
  }

  fam.report.rank = exact_rank(fam.basis()).rank;
  if (fam.report.rank != (k + 1) * int(configs.size())) {
    throw std::logic_error("twisted basis rank does not match (k+1) per configuration");
  }
  return fam;
}

int reynolds_rank_oracle(int k, int exact_cap) {
  if (k < 0 || k % 2 == 1) {
    throw std::domain_error("the oracle is defined for even non-negative degrees");
  }
  const LiftedLattice lattice = lifted_lattice(k);
  if (k <= exact_cap) {
    const auto averaged = reynolds_average_s3_bulk(lattice.modes);
    std::vector<Poly> nonzero;
    for (const Poly& p : averaged) {
      if (!p.is_zero()) nonzero.push_back(p);
    }
    return exact_rank(nonzero).rank;
  }
  return floating_projected_rank(lattice.modes, 1e-8);
}

std::vector<std::complex<double>> evaluate_mode(
    const Poly& f, const std::vector<std::array<double, 4>>& points) {
  if (f.chart() != Chart::Cplx) {
    throw std::domain_error("evaluation expects a cplx-chart polynomial");
  }
  std::vector<Cd> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    if (std::abs(n2 - 1.0) > 1e-12) {
      throw std::domain_error("sample point is not on the unit 3-sphere");
    }
    out.push_back(eval_terms(f, cplx_vars(p)));
  }
  return out;
}

std::array<double, 4> act_point_s3(const Quaternion& q, const std::array<double, 4>& p) {
  const Cd a(q.q[0].to_complex().real(), q.q[1].to_complex().real());
  const Cd b(q.q[2].to_complex().real(), q.q[3].to_complex().real());
  const Cd alpha(p[0], p[1]), beta(p[2], p[3]);
  const Cd alpha2 = a * alpha - std::conj(b) * beta;
  const Cd beta2 = b * alpha + std::conj(a) * beta;
  return {alpha2.real(), alpha2.imag(), beta2.real(), beta2.imag()};
}

std::array<double, 3> rotate_point_s2(const Rotation3& r, const std::array<double, 3>& p) {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      out[i] += r.m[i][j].to_complex().real() * p[j];
    }
  }
  return out;
}

std::vector<std::complex<double>> evaluate_mode_s2(
    const Poly& f, const std::vector<std::array<double, 3>>& points) {
  if (f.chart() != Chart::Real3) {
    throw std::domain_error("evaluation expects a real3-chart polynomial");
  }
  std::vector<Cd> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    const double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    if (std::abs(n2 - 1.0) > 1e-12) {
      throw std::domain_error("sample point is not on the unit 2-sphere");
    }
    out.push_back(eval_terms(f, {Cd(p[0]), Cd(p[1]), Cd(p[2]), Cd(0.0)}));
  }
  return out;
}

}  // namespace pds
