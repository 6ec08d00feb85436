#include "pds/orbifold.hpp"

#include "pds/icosa.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace pds {

namespace {

std::array<Scalar, 3> corner_coords(int order) {
  switch (order) {
    case 5:
      return {Scalar::zero(), Scalar::phi(), Scalar::one()};
    case 3:
      return {Scalar::one(), Scalar::one(), Scalar::one()};
    default:
      return {Scalar::one(), Scalar::phi(), Scalar::phi() - Scalar::one()};
  }
}

// Arc endpoints in blend order: "25" runs from the order-2 to the order-5
// corner, and so on.
std::pair<int, int> arc_orders(Arc a) {
  switch (a) {
    case Arc::TwoFive:
      return {2, 5};
    case Arc::TwoThree:
      return {2, 3};
    default:
      return {3, 5};
  }
}

// The deterministic arc parameter sequence 1/3, 2/5, 3/7, ...: injective,
// strictly inside (0, 1/2], so it never touches a corner.
Rational arc_sequence(int i) { return Rational(i + 1, 2 * i + 3); }

void append_orbit(std::vector<Direction>& out, const Direction& d, int copies) {
  const auto orb = orbit(d);
  for (int i = 0; i < copies; ++i) out.insert(out.end(), orb.begin(), orb.end());
}

}  // namespace

int dim_invariant_harmonics(int l) {
  if (l < 0) throw std::invalid_argument("degree must be non-negative");
  return std::max(0, 1 + l / 2 + l / 3 + l / 5 - l);
}

Direction corner_order5() {
  const auto c = corner_coords(5);
  return Direction::from(c[0], c[1], c[2]);
}

Direction corner_order3() {
  const auto c = corner_coords(3);
  return Direction::from(c[0], c[1], c[2]);
}

Direction corner_order2() {
  const auto c = corner_coords(2);
  return Direction::from(c[0], c[1], c[2]);
}

std::string arc_name(Arc a) {
  switch (a) {
    case Arc::TwoFive:
      return "25";
    case Arc::TwoThree:
      return "23";
    default:
      return "35";
  }
}

Arc arc_from_name(const std::string& name) {
  if (name == "25") return Arc::TwoFive;
  if (name == "23") return Arc::TwoThree;
  if (name == "35") return Arc::ThreeFive;
  throw std::invalid_argument("unknown arc name \"" + name +
                              "\" (expected \"25\", \"23\" or \"35\")");
}

int OrbifoldConfig::degree() const {
  return 6 * c10 + 10 * c6 + 15 * c4 + 30 * int(half_points.size()) +
         60 * int(whole_points.size());
}

CornerCounts forced_corner_counts(int l) {
  if (l < 0) throw std::invalid_argument("degree must be non-negative");
  const int budget = l / 2 + l / 3 + l / 5 - l;
  if (budget < 0) {
    throw std::domain_error("degree " + std::to_string(l) +
                            " admits no invariant mode (it is not expressible "
                            "as 6a + 10b + 15c + 30d)");
  }
  return CornerCounts{l % 5, l % 3, l % 2, budget};
}

Direction arc_point(Arc a, const Rational& t) {
  const auto [oa, ob] = arc_orders(a);
  const auto u = corner_coords(oa), v = corner_coords(ob);
  const Scalar s = Scalar::from_rational(t);
  const Scalar r = Scalar::one() - s;
  return Direction::from(u[0] * r + v[0] * s, u[1] * r + v[1] * s,
                         u[2] * r + v[2] * s);
}

Direction interior_point(const std::array<Rational, 3>& bary) {
  const auto c2 = corner_coords(2), c3 = corner_coords(3), c5 = corner_coords(5);
  std::array<Scalar, 3> w;
  for (int i = 0; i < 3; ++i) {
    w[i] = c2[i] * Scalar::from_rational(bary[0]) +
           c3[i] * Scalar::from_rational(bary[1]) +
           c5[i] * Scalar::from_rational(bary[2]);
  }
  return Direction::from(w[0], w[1], w[2]);
}

MultipoleSet lift_config(const OrbifoldConfig& c) {
  if (c.c10 < 0 || c.c6 < 0 || c.c4 < 0) {
    throw std::domain_error("corner multiplicities must be non-negative");
  }
  if (c.l != c.degree()) {
    throw std::domain_error("configuration degree " + std::to_string(c.degree()) +
                            " does not match its declared degree " +
                            std::to_string(c.l));
  }
  MultipoleSet out;
  append_orbit(out.directions, corner_order5(), c.c10);
  append_orbit(out.directions, corner_order3(), c.c6);
  append_orbit(out.directions, corner_order2(), c.c4);
  for (const HalfPoint& h : c.half_points) {
    const Direction d = arc_point(h.arc, h.t);
    const auto orb = orbit(d);
    if (orb.size() != 30) {
      throw std::domain_error(
          "half point at t = " + rational_to_string(h.t) + " on arc " +
          arc_name(h.arc) + " has orbit size " + std::to_string(orb.size()) +
          ", not 30 — it degenerated onto a corner");
    }
    out.directions.insert(out.directions.end(), orb.begin(), orb.end());
  }
  for (const WholePoint& w : c.whole_points) {
    const Direction d = interior_point(w.bary);
    const auto orb = orbit(d);
    if (orb.size() != 60) {
      throw std::domain_error(
          "interior point has orbit size " + std::to_string(orb.size()) +
          ", not 60 — it degenerated onto a mirror or corner");
    }
    out.directions.insert(out.directions.end(), orb.begin(), orb.end());
  }
  return out;
}

OrbifoldConfig normalize_config(OrbifoldConfig c, ConfigPolicy policy) {
  if (c.c10 < 0 || c.c6 < 0 || c.c4 < 0) {
    throw std::domain_error("corner multiplicities must be non-negative");
  }
  if (c.l != c.degree()) {
    throw std::domain_error("configuration degree " + std::to_string(c.degree()) +
                            " does not match its declared degree " +
                            std::to_string(c.l));
  }
  const bool excess = c.c10 > 4 || c.c6 > 2 || c.c4 > 1;
  if (excess && policy == ConfigPolicy::Reject) {
    throw std::domain_error(
        "corner multiplicities exceed the canonical caps (4, 2, 1)");
  }
  // Each excess bundle carries total weight 1/2 and becomes a movable half
  // point at the next arc-sequence location the config does not use yet.
  int next = 0;
  const auto fresh_half = [&c, &next]() {
    for (;; ++next) {
      const HalfPoint h{Arc::TwoFive, arc_sequence(next)};
      if (std::find(c.half_points.begin(), c.half_points.end(), h) ==
          c.half_points.end()) {
        ++next;
        return h;
      }
    }
  };
  while (c.c10 > 4) {
    c.c10 -= 5;
    c.half_points.push_back(fresh_half());
  }
  while (c.c6 > 2) {
    c.c6 -= 3;
    c.half_points.push_back(fresh_half());
  }
  while (c.c4 > 1) {
    c.c4 -= 2;
    c.half_points.push_back(fresh_half());
  }
  return c;
}

std::vector<OrbifoldConfig> candidate_basis_configs(int l, int count, int offset) {
  const CornerCounts cc = forced_corner_counts(l);
  const int dim = 1 + cc.budget;
  if (count < 1 || count > dim) {
    throw std::invalid_argument("requested " + std::to_string(count) +
                                " configurations of degree " + std::to_string(l) +
                                "; the invariant space has dimension " +
                                std::to_string(dim));
  }
  if (offset < 0) throw std::invalid_argument("offset must be non-negative");

  const int B = cc.budget;
  std::vector<OrbifoldConfig> out;
  out.reserve(size_t(count));
  for (int j = 0; j < count; ++j) {
    OrbifoldConfig cfg;
    cfg.l = l;
    cfg.c10 = cc.c10;
    cfg.c6 = cc.c6;
    cfg.c4 = cc.c4;
    const bool whole_config = (j == count - 1) && (count == B + 1) && (B >= 2);
    const int halfs = whole_config ? B - 2 : B;
    for (int i = 0; i < halfs; ++i) {
      cfg.half_points.push_back({Arc::TwoFive, arc_sequence(offset + j * B + i)});
    }
    if (whole_config) {
      cfg.whole_points.push_back(
          {{Rational(1), Rational(1), Rational(1 + offset)}});
    }
    out.push_back(std::move(cfg));
  }
  return out;
}

std::vector<OrbifoldConfig> enumerate_basis_configs(int l, int count) {
  // Generic locations already give independent modes; the offset loop is a
  // deterministic escape hatch for the rare rank-deficient family.
  for (int offset = 0; offset < 60; ++offset) {
    const auto configs = candidate_basis_configs(l, count, offset);
    std::vector<Poly> modes;
    modes.reserve(configs.size());
    bool degenerate = false;
    for (const auto& cfg : configs) {
      try {
        modes.push_back(config_mode(cfg));
      } catch (const std::domain_error&) {
        degenerate = true;
        break;
      }
    }
    if (!degenerate && exact_rank(modes).rank == count) return configs;
  }
  throw std::runtime_error("no linearly independent configuration family found");
}

std::vector<OrbifoldConfig> enumerate_basis_configs(int l) {
  const int dim = dim_invariant_harmonics(l);
  if (dim == 0) forced_corner_counts(l);  // throws with the real reason
  return enumerate_basis_configs(l, dim);
}

Poly config_mode(const OrbifoldConfig& c) { return maxwell_mode(lift_config(c)); }

}  // namespace pds
