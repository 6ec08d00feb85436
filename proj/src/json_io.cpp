#include "pds/json_io.hpp"

#include <fstream>

#include "pds/icosa.hpp"

namespace pds {
namespace {

using nlohmann::json;

// Small require-helpers so every malformed input dies with a FormatError
// that names the offending field.

const json& require_field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) {
    throw FormatError(std::string(what) + ": expected a JSON object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    throw FormatError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::string require_string(const json& j, const char* what) {
  if (!j.is_string()) {
    throw FormatError(std::string(what) + ": expected a string");
  }
  return j.get<std::string>();
}

long require_count(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw FormatError(std::string(what) + ": expected an integer");
  }
  long n = j.get<long>();
  if (n < 0) {
    throw FormatError(std::string(what) + ": must be nonnegative");
  }
  return n;
}

const json& require_array(const json& j, const char* what) {
  if (!j.is_array()) {
    throw FormatError(std::string(what) + ": expected an array");
  }
  return j;
}

Rational parse_rational(const json& j, const char* what) {
  std::string text = require_string(j, what);
  try {
    return rational_from_string(text);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string(what) + ": " + e.what());
  }
}

json rational_json(const Rational& r) { return json(rational_to_string(r)); }

}  // namespace

// --- Scalars -----------------------------------------------------------

json scalar_to_json(const Scalar& s) {
  return json{{"re_rat", rational_json(s.re_rat)},
              {"re_s5", rational_json(s.re_s5)},
              {"im_rat", rational_json(s.im_rat)},
              {"im_s5", rational_json(s.im_s5)}};
}

Scalar scalar_from_json(const json& j) {
  return Scalar{parse_rational(require_field(j, "re_rat", "scalar"), "scalar re_rat"),
                parse_rational(require_field(j, "re_s5", "scalar"), "scalar re_s5"),
                parse_rational(require_field(j, "im_rat", "scalar"), "scalar im_rat"),
                parse_rational(require_field(j, "im_s5", "scalar"), "scalar im_s5")};
}

// --- Polynomials ---------------------------------------------------------

json poly_to_json(const Poly& f) {
  const int nvars = chart_nvars(f.chart());
  json terms = json::array();
  for (const auto& [mono, coeff] : f.terms()) {
    json exp = json::array();
    for (int v = 0; v < nvars; ++v) exp.push_back(int(mono[v]));
    terms.push_back(json{{"exp", std::move(exp)}, {"coeff", scalar_to_json(coeff)}});
  }
  return json{{"chart", chart_name(f.chart())}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const json& j) {
  std::string chart_text = require_string(require_field(j, "chart", "polynomial"), "polynomial chart");
  Chart chart;
  try {
    chart = chart_from_name(chart_text);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("polynomial chart: ") + e.what());
  }
  const int nvars = chart_nvars(chart);

  Poly f(chart);
  for (const json& term : require_array(require_field(j, "terms", "polynomial"), "polynomial terms")) {
    const json& exp = require_array(require_field(term, "exp", "polynomial term"), "polynomial term exp");
    if (int(exp.size()) != nvars) {
      throw FormatError("polynomial term exp: expected " + std::to_string(nvars) +
                        " exponents for chart " + chart_text + ", got " +
                        std::to_string(exp.size()));
    }
    Mono mono{0, 0, 0, 0};
    for (int v = 0; v < nvars; ++v) {
      if (!exp[v].is_number_integer()) {
        throw FormatError("polynomial term exp: expected an integer exponent");
      }
      long e = exp[v].get<long>();
      if (e < 0 || e > 255) {
        throw FormatError("polynomial term exp: exponent " + std::to_string(e) +
                          " outside [0, 255]");
      }
      mono[v] = uint8_t(e);
    }
    f.add_term(mono, scalar_from_json(require_field(term, "coeff", "polynomial term")));
  }
  return f;
}

// --- Orbifold configurations ----------------------------------------------

json config_to_json(const OrbifoldConfig& c) {
  json halfs = json::array();
  for (const HalfPoint& h : c.half_points) {
    halfs.push_back(json{{"arc", arc_name(h.arc)}, {"t", rational_json(h.t)}});
  }
  json wholes = json::array();
  for (const WholePoint& w : c.whole_points) {
    wholes.push_back(json{{"bary", json::array({rational_json(w.bary[0]),
                                                rational_json(w.bary[1]),
                                                rational_json(w.bary[2])})}});
  }
  return json{{"l", c.l},     {"c10", c.c10},
              {"c6", c.c6},   {"c4", c.c4},
              {"half_points", std::move(halfs)},
              {"whole_points", std::move(wholes)}};
}

OrbifoldConfig config_from_json(const json& j) {
  OrbifoldConfig c;
  c.l = int(require_count(require_field(j, "l", "config"), "config l"));
  c.c10 = int(require_count(require_field(j, "c10", "config"), "config c10"));
  c.c6 = int(require_count(require_field(j, "c6", "config"), "config c6"));
  c.c4 = int(require_count(require_field(j, "c4", "config"), "config c4"));

  for (const json& h : require_array(require_field(j, "half_points", "config"), "config half_points")) {
    std::string arc_text = require_string(require_field(h, "arc", "half point"), "half point arc");
    Arc arc;
    try {
      arc = arc_from_name(arc_text);
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("half point arc: ") + e.what());
    }
    Rational t = parse_rational(require_field(h, "t", "half point"), "half point t");
    if (t <= 0 || t >= 1) {
      throw FormatError("half point t: " + rational_to_string(t) +
                        " is outside the open interval (0, 1)");
    }
    c.half_points.push_back(HalfPoint{arc, t});
  }

  for (const json& w : require_array(require_field(j, "whole_points", "config"), "config whole_points")) {
    const json& bary = require_array(require_field(w, "bary", "whole point"), "whole point bary");
    if (bary.size() != 3) {
      throw FormatError("whole point bary: expected 3 weights, got " +
                        std::to_string(bary.size()));
    }
    WholePoint wp;
    for (int i = 0; i < 3; ++i) {
      wp.bary[i] = parse_rational(bary[i], "whole point bary");
      if (wp.bary[i] <= 0) {
        throw FormatError("whole point bary: weight " +
                          rational_to_string(wp.bary[i]) + " is not positive");
      }
    }
    c.whole_points.push_back(wp);
  }
  return c;
}

// --- Multipole direction sets ----------------------------------------------

json multipole_to_json(const MultipoleSet& s) {
  json out = json::array();
  for (const Direction& d : s.directions) {
    out.push_back(json::array({scalar_to_json(d.v[0]), scalar_to_json(d.v[1]),
                               scalar_to_json(d.v[2])}));
  }
  return out;
}

MultipoleSet multipole_from_json(const json& j) {
  MultipoleSet s;
  for (const json& entry : require_array(j, "multipole set")) {
    const json& triple = require_array(entry, "multipole direction");
    if (triple.size() != 3) {
      throw FormatError("multipole direction: expected 3 components, got " +
                        std::to_string(triple.size()));
    }
    try {
      s.directions.push_back(Direction::from(scalar_from_json(triple[0]),
                                             scalar_from_json(triple[1]),
                                             scalar_from_json(triple[2])));
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("multipole direction: ") + e.what());
    }
  }
  return s;
}

// --- Group tables ----------------------------------------------------------

json group_tables_to_json() {
  const GroupTables& g = icosahedral_groups();
  json rotations = json::array();
  for (const Rotation3& r : g.rotations) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
      rows.push_back(json::array({scalar_to_json(r.m[i][0]),
                                  scalar_to_json(r.m[i][1]),
                                  scalar_to_json(r.m[i][2])}));
    }
    rotations.push_back(std::move(rows));
  }
  json quaternions = json::array();
  for (const Quaternion& q : g.quaternions) {
    quaternions.push_back(json::array({scalar_to_json(q.q[0]), scalar_to_json(q.q[1]),
                                       scalar_to_json(q.q[2]), scalar_to_json(q.q[3])}));
  }
  return json{{"rotations", std::move(rotations)},
              {"quaternions", std::move(quaternions)}};
}

// --- File helpers -----------------------------------------------------------

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path + " for reading");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw FormatError("failed while writing " + path);
}

Poly load_poly(const std::string& path) { return poly_from_json(load_json(path)); }

void save_poly(const std::string& path, const Poly& f) {
  save_json(path, poly_to_json(f));
}

}  // namespace pds
