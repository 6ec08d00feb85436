#include "pds/maxwell.hpp"

#include <sstream>
#include <stdexcept>

namespace pds {

Direction Direction::from(const Scalar& vx, const Scalar& vy, const Scalar& vz) {
  std::array<Scalar, 3> raw{vx, vy, vz};
  for (const Scalar& c : raw) {
    if (!c.is_real()) {
      throw std::invalid_argument("direction components must be real");
    }
  }
  for (const Scalar& c : raw) {
    if (!c.is_zero()) {
      const Scalar inv = c.inverse();
      return Direction{{raw[0] * inv, raw[1] * inv, raw[2] * inv}};
    }
  }
  throw std::invalid_argument("direction must be nonzero");
}

Direction Direction::from_ints(long vx, long vy, long vz) {
  return from(Scalar::from_int(vx), Scalar::from_int(vy), Scalar::from_int(vz));
}

std::string Direction::to_string() const {
  std::ostringstream os;
  os << '(' << v[0].to_string() << ", " << v[1].to_string() << ", "
     << v[2].to_string() << ')';
  return os.str();
}

Poly maxwell_mode_raw(const std::vector<std::array<Scalar, 3>>& dirs) {
  const Poly x = Poly::variable(Chart::Real3, 0);
  const Poly y = Poly::variable(Chart::Real3, 1);
  const Poly z = Poly::variable(Chart::Real3, 2);
  const Poly r2 = x * x + y * y + z * z;

  Poly q = Poly::constant(Chart::Real3, Scalar::one());
  long m = 0;
  for (const auto& v : dirs) {
    Poly dir_deriv(Chart::Real3);
    for (int i = 0; i < 3; ++i) dir_deriv += q.differentiate(i).scaled(v[i]);
    const Poly dot = x.scaled(v[0]) + y.scaled(v[1]) + z.scaled(v[2]);
    q = r2 * dir_deriv - dot * q.scaled(Scalar::from_int(2 * m + 1));
    ++m;
  }
  return q;
}

Poly maxwell_mode(const MultipoleSet& s) {
  std::vector<std::array<Scalar, 3>> dirs;
  dirs.reserve(s.directions.size());
  for (const Direction& d : s.directions) dirs.push_back(d.v);
  return maxwell_mode_raw(dirs);
}

bool directions_scale_invariance_check(const MultipoleSet& s,
                                       const std::vector<Scalar>& scales) {
  if (scales.size() != s.directions.size()) {
    throw std::invalid_argument("one scale factor per direction required");
  }
  Scalar product = Scalar::one();
  std::vector<std::array<Scalar, 3>> scaled;
  scaled.reserve(scales.size());
  for (size_t i = 0; i < scales.size(); ++i) {
    const Scalar& c = scales[i];
    if (c.is_zero() || !c.is_real()) {
      throw std::invalid_argument("scale factors must be nonzero and real");
    }
    product *= c;
    const auto& v = s.directions[i].v;
    scaled.push_back({v[0] * c, v[1] * c, v[2] * c});
  }
  return maxwell_mode_raw(scaled) == maxwell_mode(s).scaled(product);
}

}  // namespace pds
