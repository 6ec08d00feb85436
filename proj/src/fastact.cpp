#include "pds/fastact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace pds {

namespace {

using cpp_int = BigInt;

// ---------------------------------------------------------------------------
// Lattice elements (a + b sqrt5) + i (c + d sqrt5).

// Fixed-width version for table entries; the mass certificate guarantees no
// component can reach 2^119, so 128-bit arithmetic never overflows.
struct QI {
  __int128 a = 0, b = 0, c = 0, d = 0;

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
};

QI mul(const QI& x, const QI& y) {
  if ((x.c == 0 && x.d == 0) && (y.c == 0 && y.d == 0)) {
    return QI{x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a, 0, 0};
  }
  return QI{x.a * y.a + 5 * x.b * y.b - x.c * y.c - 5 * x.d * y.d,
            x.a * y.b + x.b * y.a - x.c * y.d - x.d * y.c,
            x.a * y.c + 5 * x.b * y.d + x.c * y.a + 5 * x.d * y.b,
            x.a * y.d + x.b * y.c + x.c * y.b + x.d * y.a};
}

void add_to(QI& x, const QI& y) {
  x.a += y.a;
  x.b += y.b;
  x.c += y.c;
  x.d += y.d;
}

// Arbitrary-precision version for polynomial coefficient vectors.
struct QBig {
  cpp_int a, b, c, d;

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  friend bool operator==(const QBig& x, const QBig& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

QBig to_big(const QI& x) {
  return QBig{cpp_int(x.a), cpp_int(x.b), cpp_int(x.c), cpp_int(x.d)};
}

QBig mul(const QBig& x, const QBig& y) {
  if ((x.c == 0 && x.d == 0) && (y.c == 0 && y.d == 0)) {
    return QBig{x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a, 0, 0};
  }
  return QBig{x.a * y.a + 5 * x.b * y.b - x.c * y.c - 5 * x.d * y.d,
              x.a * y.b + x.b * y.a - x.c * y.d - x.d * y.c,
              x.a * y.c + 5 * x.b * y.d + x.c * y.a + 5 * x.d * y.b,
              x.a * y.d + x.b * y.c + x.c * y.b + x.d * y.a};
}

void add_to(QBig& x, const QBig& y) {
  x.a += y.a;
  x.b += y.b;
  x.c += y.c;
  x.d += y.d;
}

// ---------------------------------------------------------------------------
// Monomial keys: four exponent bytes packed big-endian, so key order is a
// stable (if arbitrary) canonical order within a fixed total degree.

using Key = uint32_t;

Key key_of(const Mono& m) {
  return (Key(m[0]) << 24) | (Key(m[1]) << 16) | (Key(m[2]) << 8) | Key(m[3]);
}

Mono mono_of(Key k) {
  return Mono{uint8_t(k >> 24), uint8_t(k >> 16), uint8_t(k >> 8), uint8_t(k)};
}

// ---------------------------------------------------------------------------
// Linear substitutions over the lattice.

using SparseRow = std::vector<std::pair<Key, QI>>;

struct SubstRows {
  // rows[v]: the image of variable v as (target variable, den * coefficient).
  std::array<std::vector<std::pair<int, QI>>, 4> rows;
  long den = 1;
  double max_row_mass = 0.0;
};

double mass(const QI& x) {
  return std::abs(double(x.a)) + 3.0 * std::abs(double(x.b)) +
         std::abs(double(x.c)) + 3.0 * std::abs(double(x.d));
}

// Extracts integer-lattice rows from linear substitution images, scaling by
// den = 4 (every icosahedral rotation entry and binary-group quaternion
// component lives in (1/4) Z[sqrt5]). Returns nullopt when the images do not
// have that shape; callers then fall back to the generic path.
std::optional<SubstRows> make_rows(const std::vector<Poly>& images) {
  SubstRows out;
  out.den = 4;
  const auto scaled_int = [](const Rational& r) -> std::optional<long> {
    const Rational s = r * 4;
    if (boost::multiprecision::denominator(s) != 1) return std::nullopt;
    const auto num = boost::multiprecision::numerator(s);
    if (num > 1000000 || num < -1000000) return std::nullopt;
    return long(num);
  };
  for (size_t v = 0; v < images.size(); ++v) {
    double row_mass = 0.0;
    for (const auto& [m, c] : images[v].terms()) {
      if (mono_degree(m) != 1) return std::nullopt;
      int target = 0;
      for (int i = 0; i < 4; ++i) {
        if (m[i] == 1) target = i;
      }
      const auto a = scaled_int(c.re_rat), b = scaled_int(c.re_s5),
                 cc = scaled_int(c.im_rat), dd = scaled_int(c.im_s5);
      if (!a || !b || !cc || !dd) return std::nullopt;
      const QI q{*a, *b, *cc, *dd};
      row_mass += mass(q);
      out.rows[v].emplace_back(target, q);
    }
    out.max_row_mass = std::max(out.max_row_mass, row_mass);
  }
  return out;
}

// True when every accumulated table entry is guaranteed below 2^119 in each
// lattice component: total image mass of a degree-d monomial is bounded by
// max_row_mass^d (mass is submultiplicative and subadditive), times any
// extra accumulation factor (e.g. the group order when tables are summed).
bool certified(const SubstRows& rows, int degree, double extra_factor) {
  if (degree <= 0) return true;
  const double bits = degree * std::log2(std::max(2.0, rows.max_row_mass)) +
                      std::log2(std::max(1.0, extra_factor));
  return bits < 119.0;
}

// ---------------------------------------------------------------------------
// Per-element monomial image tables, memoized along divisor chains:
// image(m * x_v) = image(m) combined with rows[v].

class ImageTable {
 public:
  explicit ImageTable(const SubstRows& rows) : rows_(&rows) {
    memo_[0] = SparseRow{{0, QI{1, 0, 0, 0}}};
  }

  const SparseRow& image_of(const Mono& m) {
    const Key key = key_of(m);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    int v = 3;
    while (m[v] == 0) --v;
    Mono base = m;
    base[v] -= 1;
    const SparseRow& prev = image_of(base);

    scratch_.clear();
    const auto& row = rows_->rows[size_t(v)];
    scratch_.reserve(prev.size() * row.size());
    for (const auto& [k, c] : prev) {
      for (const auto& [tv, rc] : row) {
        scratch_.emplace_back(k + (Key(1) << (8 * (3 - tv))), mul(c, rc));
      }
    }
    std::sort(scratch_.begin(), scratch_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow merged;
    merged.reserve(scratch_.size());
    for (const auto& [k, c] : scratch_) {
      if (!merged.empty() && merged.back().first == k) {
        add_to(merged.back().second, c);
      } else {
        merged.emplace_back(k, c);
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second.is_zero(); }),
                 merged.end());
    return memo_.emplace(key, std::move(merged)).first->second;
  }

 private:
  const SubstRows* rows_;
  std::unordered_map<Key, SparseRow> memo_;
  SparseRow scratch_;
};

// ---------------------------------------------------------------------------
// Denominator-cleared homogeneous polynomials.

struct Cleared {
  cpp_int den = 1;
  std::vector<Key> keys;
  std::vector<QBig> coeffs;
  int degree = 0;
};

Cleared clear_poly(const Poly& f) {
  Cleared out;
  out.degree = f.degree();
  for (const auto& [m, c] : f.terms()) {
    for (const Rational* r : {&c.re_rat, &c.re_s5, &c.im_rat, &c.im_s5}) {
      out.den = lcm(out.den, cpp_int(boost::multiprecision::denominator(*r)));
    }
  }
  const auto cleared_int = [&](const Rational& r) {
    return cpp_int(boost::multiprecision::numerator(r) * out.den /
                   boost::multiprecision::denominator(r));
  };
  for (const auto& [m, c] : f.terms()) {
    out.keys.push_back(key_of(m));
    out.coeffs.push_back(QBig{cleared_int(c.re_rat), cleared_int(c.re_s5),
                              cleared_int(c.im_rat), cleared_int(c.im_s5)});
  }
  return out;
}

// result = (1/total_den) sum of accumulated lattice coefficients.
Poly poly_from_acc(Chart chart, const std::map<Key, QBig>& acc,
                   const cpp_int& total_den) {
  Poly out(chart);
  for (const auto& [k, q] : acc) {
    const Scalar c{Rational(q.a, total_den), Rational(q.b, total_den),
                   Rational(q.c, total_den), Rational(q.d, total_den)};
    out.add_term(mono_of(k), c);
  }
  return out;
}

cpp_int pow_int(long base, int exp) {
  cpp_int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<Poly> homogeneous_components(const Poly& f) {
  std::map<int, Poly> by_degree;
  for (const auto& [m, c] : f.terms()) {
    by_degree.try_emplace(mono_degree(m), f.chart()).first->second.add_term(m, c);
  }
  std::vector<Poly> out;
  for (auto& [d, p] : by_degree) out.push_back(std::move(p));
  return out;
}

// ---------------------------------------------------------------------------
// Core operations over an abstract element list. `images_of(i)` must yield
// the exact linear substitution of element i; `fallback` the generic action.

struct ActionPlan {
  Chart chart;
  size_t count;
  std::function<std::vector<Poly>(size_t)> images_of;
  std::function<Poly(size_t, const Poly&)> fallback;
};

ActionPlan s2_plan() {
  const auto& rots = icosahedral_groups().rotations;
  return ActionPlan{
      Chart::Real3, rots.size(),
      [&rots](size_t i) { return rotation_images(rots[i]); },
      [&rots](size_t i, const Poly& f) { return act_on_poly_s2(rots[i], f); }};
}

ActionPlan s3_plan() {
  const auto& quats = icosahedral_groups().quaternions;
  return ActionPlan{
      Chart::Cplx, quats.size(),
      [&quats](size_t i) { return quaternion_images(quats[i]); },
      [&quats](size_t i, const Poly& f) { return act_on_poly_s3(quats[i], f); }};
}

Poly act_one(const std::vector<Poly>& images, const Poly& f,
             const std::function<Poly(const Poly&)>& fallback) {
  if (f.is_zero()) return f;
  const auto rows = make_rows(images);
  if (!rows || !certified(*rows, f.degree(), 1.0)) return fallback(f);

  ImageTable table(*rows);
  Poly out(f.chart());
  for (const Poly& comp : homogeneous_components(f)) {
    const Cleared cl = clear_poly(comp);
    std::map<Key, QBig> acc;
    for (size_t i = 0; i < cl.keys.size(); ++i) {
      for (const auto& [k, c] : table.image_of(mono_of(cl.keys[i]))) {
        add_to(acc.try_emplace(k).first->second, mul(cl.coeffs[i], to_big(c)));
      }
    }
    out += poly_from_acc(f.chart(), acc, cl.den * pow_int(rows->den, cl.degree));
  }
  return out;
}

int invariance_count(const ActionPlan& plan, const Poly& f) {
  if (f.chart() != plan.chart) {
    throw std::invalid_argument("invariance count: polynomial in the wrong chart");
  }
  // Precompute the cleared components and their 4^d-scaled coefficient maps:
  // element g fixes f iff the accumulated image of every component equals
  // den^degree times the cleared coefficients.
  struct Target {
    Cleared cl;
    std::map<Key, QBig> scaled;
  };
  std::vector<Target> targets;
  for (const Poly& comp : homogeneous_components(f)) {
    Target t{clear_poly(comp), {}};
    const cpp_int scale = pow_int(4, t.cl.degree);
    for (size_t i = 0; i < t.cl.keys.size(); ++i) {
      const QBig& q = t.cl.coeffs[i];
      t.scaled.emplace(t.cl.keys[i],
                       QBig{q.a * scale, q.b * scale, q.c * scale, q.d * scale});
    }
    targets.push_back(std::move(t));
  }

  int count = 0;
  for (size_t gi = 0; gi < plan.count; ++gi) {
    const auto rows = make_rows(plan.images_of(gi));
    if (!rows || rows->den != 4 || !certified(*rows, f.degree(), 1.0)) {
      if (plan.fallback(gi, f) == f) ++count;
      continue;
    }
    ImageTable table(*rows);
    bool fixed = true;
    for (const Target& t : targets) {
      std::map<Key, QBig> acc;
      for (size_t i = 0; i < t.cl.keys.size(); ++i) {
        for (const auto& [k, c] : table.image_of(mono_of(t.cl.keys[i]))) {
          add_to(acc.try_emplace(k).first->second, mul(t.cl.coeffs[i], to_big(c)));
        }
      }
      for (auto it = acc.begin(); it != acc.end();) {
        if (it->second.is_zero()) it = acc.erase(it);
        else ++it;
      }
      if (!(acc == t.scaled)) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++count;
  }
  return count;
}

std::vector<Poly> reynolds_bulk(const ActionPlan& plan, const std::vector<Poly>& fs) {
  if (fs.empty()) return {};
  const int degree = fs[0].degree();
  for (const Poly& f : fs) {
    if (f.chart() != plan.chart) {
      throw std::invalid_argument("averaging batch: polynomial in the wrong chart");
    }
    if (f.is_zero() || !f.is_homogeneous() || f.degree() != degree) {
      throw std::invalid_argument(
          "averaging batch requires nonzero homogeneous polynomials of one degree");
    }
  }

  // Union of all monomials that need image rows.
  std::vector<Cleared> cleared;
  cleared.reserve(fs.size());
  std::vector<Key> needed;
  for (const Poly& f : fs) {
    cleared.push_back(clear_poly(f));
    needed.insert(needed.end(), cleared.back().keys.begin(), cleared.back().keys.end());
  }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());

  // Accumulate the summed image table over the whole group; certificate must
  // absorb the extra factor |G|.
  std::map<Key, std::map<Key, QI>> summed;
  bool fast_ok = true;
  for (size_t gi = 0; gi < plan.count && fast_ok; ++gi) {
    const auto rows = make_rows(plan.images_of(gi));
    if (!rows || rows->den != 4 || !certified(*rows, degree, double(plan.count))) {
      fast_ok = false;
      break;
    }
    ImageTable table(*rows);
    for (const Key key : needed) {
      auto& srow = summed[key];
      for (const auto& [k, c] : table.image_of(mono_of(key))) {
        add_to(srow.try_emplace(k).first->second, c);
      }
    }
  }
  if (!fast_ok) {
    // Generic path: average each polynomial directly.
    std::vector<Poly> out;
    out.reserve(fs.size());
    for (const Poly& f : fs) {
      Poly sum(plan.chart);
      for (size_t gi = 0; gi < plan.count; ++gi) sum += plan.fallback(gi, f);
      out.push_back(sum.scaled(Scalar::from_rational(
          Rational(1, long(plan.count)))));
    }
    return out;
  }

  // Convert rows once, then apply to every batch member.
  std::map<Key, std::vector<std::pair<Key, QBig>>> big_rows;
  for (const auto& [key, srow] : summed) {
    auto& br = big_rows[key];
    br.reserve(srow.size());
    for (const auto& [k, c] : srow) br.emplace_back(k, to_big(c));
  }

  std::vector<Poly> out;
  out.reserve(fs.size());
  for (const Cleared& cl : cleared) {
    std::map<Key, QBig> acc;
    for (size_t i = 0; i < cl.keys.size(); ++i) {
      for (const auto& [k, c] : big_rows[cl.keys[i]]) {
        add_to(acc.try_emplace(k).first->second, mul(cl.coeffs[i], c));
      }
    }
    out.push_back(poly_from_acc(plan.chart, acc,
                                cl.den * pow_int(4, degree) * long(plan.count)));
  }
  return out;
}

Poly reynolds_one(const ActionPlan& plan, const Poly& f) {
  if (f.chart() != plan.chart) {
    throw std::invalid_argument("averaging: polynomial in the wrong chart");
  }
  Poly out(plan.chart);
  for (const Poly& comp : homogeneous_components(f)) {
    out += reynolds_bulk(plan, {comp})[0];
  }
  return out;
}

}  // namespace

Poly act_on_poly_s2_fast(const Rotation3& r, const Poly& f) {
  if (f.chart() != Chart::Real3) {
    throw std::invalid_argument("act_on_poly_s2_fast: polynomial must be real3");
  }
  return act_one(rotation_images(r), f,
                 [&](const Poly& g) { return act_on_poly_s2(r, g); });
}

Poly act_on_poly_s3_fast(const Quaternion& q, const Poly& f) {
  if (f.chart() != Chart::Cplx) {
    throw std::invalid_argument("act_on_poly_s3_fast: polynomial must be cplx");
  }
  return act_one(quaternion_images(q), f,
                 [&](const Poly& g) { return act_on_poly_s3(q, g); });
}

int invariance_count_s2_fast(const Poly& f) { return invariance_count(s2_plan(), f); }

int invariance_count_s3_fast(const Poly& f) { return invariance_count(s3_plan(), f); }

Poly reynolds_average_s2_fast(const Poly& f) { return reynolds_one(s2_plan(), f); }

Poly reynolds_average_s3_fast(const Poly& f) { return reynolds_one(s3_plan(), f); }

std::vector<Poly> reynolds_average_s3_bulk(const std::vector<Poly>& fs) {
  return reynolds_bulk(s3_plan(), fs);
}

}  // namespace pds
