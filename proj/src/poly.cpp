#include "pds/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pds {

int chart_nvars(Chart c) {
  switch (c) {
    case Chart::Real3: return 3;
    case Chart::Real4: return 4;
    case Chart::Cplx: return 4;
  }
  throw std::logic_error("bad chart");
}

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::Real3: return "real3";
    case Chart::Real4: return "real4";
    case Chart::Cplx: return "cplx";
  }
  throw std::logic_error("bad chart");
}

Chart chart_from_name(const std::string& s) {
  if (s == "real3") return Chart::Real3;
  if (s == "real4") return Chart::Real4;
  if (s == "cplx") return Chart::Cplx;
  throw std::invalid_argument("unknown chart name: " + s);
}

const char* chart_var_name(Chart c, int v) {
  static const char* real_names[4] = {"x", "y", "z", "w"};
  static const char* cplx_names[4] = {"a", "ab", "b", "bb"};
  if (v < 0 || v >= chart_nvars(c)) {
    throw std::invalid_argument("variable index out of range for chart");
  }
  return c == Chart::Cplx ? cplx_names[v] : real_names[v];
}

Poly Poly::constant(Chart chart, const Scalar& c) {
  Poly p(chart);
  p.add_term(Mono{0, 0, 0, 0}, c);
  return p;
}

Poly Poly::variable(Chart chart, int var) {
  if (var < 0 || var >= chart_nvars(chart)) {
    throw std::invalid_argument("variable index out of range for chart");
  }
  Mono m{0, 0, 0, 0};
  m[var] = 1;
  return monomial(chart, m, Scalar::one());
}

Poly Poly::monomial(Chart chart, const Mono& m, const Scalar& c) {
  const int nv = chart_nvars(chart);
  for (int v = nv; v < 4; ++v) {
    if (m[v] != 0) {
      throw std::invalid_argument("monomial uses variables outside chart");
    }
  }
  Poly p(chart);
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  // Leading term has maximal total degree by the grlex ordering.
  return mono_degree(terms_.begin()->first);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = mono_degree(terms_.begin()->first);
  // Grlex-descending: last term has minimal degree.
  return mono_degree(terms_.rbegin()->first) == d;
}

Scalar Poly::coeff(const Mono& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

const Mono& Poly::leading_monomial() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

void Poly::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(chart_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

static void require_same_chart(Chart a, Chart b) {
  if (a != b) throw std::invalid_argument("chart mismatch between polynomials");
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_chart(chart_, o.chart_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_chart(a.chart_, b.chart_);
  Poly r(a.chart_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Mono m;
      for (int v = 0; v < 4; ++v) {
        const int e = int(ma[v]) + int(mb[v]);
        if (e > 255) throw std::domain_error("exponent exceeds supported degree 255");
        m[v] = uint8_t(e);
      }
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(chart_);
  if (c.is_zero()) return r;
  for (const auto& [m, coef] : terms_) {
    r.terms_.emplace_hint(r.terms_.end(), m, coef * c);
  }
  return r;
}

Poly Poly::differentiate(int var) const {
  if (var < 0 || var >= nvars()) {
    throw std::invalid_argument("variable index out of range for chart");
  }
  Poly r(chart_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Mono d = m;
    d[var] -= 1;
    r.add_term(d, c * Scalar::from_int(m[var]));
  }
  return r;
}

Poly Poly::conjugate() const {
  Poly r(chart_);
  for (const auto& [m, c] : terms_) {
    Mono mm = m;
    if (chart_ == Chart::Cplx) {
      std::swap(mm[0], mm[1]);  // a <-> ab
      std::swap(mm[2], mm[3]);  // b <-> bb
    }
    r.add_term(mm, c.conj());
  }
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  const int nv = nvars();
  if (images.size() != size_t(nv)) {
    throw std::invalid_argument("substitute: one image per chart variable required");
  }
  const Chart target = images[0].chart();
  for (const Poly& im : images) {
    if (im.chart() != target) {
      throw std::invalid_argument("substitute: images disagree on target chart");
    }
  }

  // Power cache per variable, grown on demand.
  std::vector<std::vector<Poly>> pows(nv);
  for (int v = 0; v < nv; ++v) pows[v].push_back(Poly::constant(target, Scalar::one()));
  const auto power = [&](int v, int e) -> const Poly& {
    auto& pv = pows[v];
    while (int(pv.size()) <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };

  Poly result(target);
  for (const auto& [m, c] : terms_) {
    // Multiply the needed powers smallest-first to keep intermediates lean.
    std::vector<const Poly*> factors;
    for (int v = 0; v < nv; ++v) {
      if (m[v] > 0) factors.push_back(&power(v, m[v]));
    }
    Poly t = Poly::constant(target, c);
    std::sort(factors.begin(), factors.end(),
              [](const Poly* a, const Poly* b) { return a->term_count() < b->term_count(); });
    for (const Poly* f : factors) t *= *f;
    result += t;
  }
  return result;
}

Poly Poly::laplacian() const {
  Poly r(chart_);
  switch (chart_) {
    case Chart::Real3:
      for (int v = 0; v < 3; ++v) r += differentiate(v).differentiate(v);
      return r;
    case Chart::Real4:
      for (int v = 0; v < 4; ++v) r += differentiate(v).differentiate(v);
      return r;
    case Chart::Cplx: {
      r += differentiate(0).differentiate(1);
      r += differentiate(2).differentiate(3);
      return r.scaled(Scalar::from_int(4));
    }
  }
  throw std::logic_error("bad chart");
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  const int nv = nvars();
  if (point.size() != size_t(nv)) {
    throw std::invalid_argument("eval: point dimension does not match chart");
  }
  std::vector<std::vector<Scalar>> pows(nv, {Scalar::one()});
  const auto power = [&](int v, int e) -> const Scalar& {
    auto& pv = pows[v];
    while (int(pv.size()) <= e) pv.push_back(pv.back() * point[v]);
    return pv[e];
  };
  Scalar acc = Scalar::zero();
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int v = 0; v < nv; ++v) {
      if (m[v] > 0) t *= power(v, m[v]);
    }
    acc += t;
  }
  return acc;
}

std::complex<double> Poly::eval(const std::vector<std::complex<double>>& point) const {
  const int nv = nvars();
  if (point.size() != size_t(nv)) {
    throw std::invalid_argument("eval: point dimension does not match chart");
  }
  std::vector<std::vector<std::complex<double>>> pows(nv, {{1.0, 0.0}});
  const auto power = [&](int v, int e) {
    auto& pv = pows[v];
    while (int(pv.size()) <= e) pv.push_back(pv.back() * point[v]);
    return pv[e];
  };
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (int v = 0; v < nv; ++v) {
      if (m[v] > 0) t *= power(v, m[v]);
    }
    acc += t;
  }
  return acc;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    // Peel off a leading sign when the coefficient is purely one rational
    // component; otherwise parenthesize the full Scalar.
    std::string cs = c.to_string();
    bool neg = false;
    if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
        cs.find(" - ") == std::string::npos) {
      neg = true;
      cs = cs.substr(1);
    }
    const bool composite = cs.find(' ') != std::string::npos;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string vars;
    for (int v = 0; v < nvars(); ++v) {
      if (m[v] == 0) continue;
      if (!vars.empty()) vars += '*';
      vars += chart_var_name(chart_, v);
      if (m[v] > 1) {
        vars += '^';
        vars += std::to_string(int(m[v]));
      }
    }
    if (vars.empty()) {
      if (composite) os << '(' << cs << ')';
      else os << cs;
    } else if (cs == "1") {
      os << vars;
    } else if (composite) {
      os << '(' << cs << ")*" << vars;
    } else {
      os << cs << '*' << vars;
    }
  }
  return os.str();
}

RankResult exact_rank(const std::vector<Poly>& rows) {
  RankResult res;
  if (rows.empty()) return res;
  const Chart chart = rows[0].chart();
  for (const Poly& r : rows) require_same_chart(chart, r.chart());

  // Reduced rows kept as sparse term maps; each has a distinct leading
  // monomial. A candidate is reduced against every stored row whose leading
  // monomial it contains, then kept iff nonzero. Rows with disjoint support
  // cost only a map lookup, so block-structured inputs reduce blockwise.
  std::vector<TermMap> reduced;
  for (size_t i = 0; i < rows.size(); ++i) {
    TermMap r = rows[i].terms();
    for (const TermMap& er : reduced) {
      if (r.empty()) break;
      const auto& [lm, lc] = *er.begin();
      const auto hit = r.find(lm);
      if (hit == r.end()) continue;
      const Scalar factor = hit->second / lc;
      for (const auto& [m, c] : er) {
        const auto [it, inserted] = r.try_emplace(m, Scalar::zero());
        it->second -= factor * c;
        if (it->second.is_zero()) r.erase(it);
      }
    }
    if (!r.empty()) {
      res.independent.push_back(i);
      // Keep reduced rows sorted by grlex-descending leading monomial so a
      // candidate is always reduced top-down (each subtraction can only
      // introduce monomials below the pivot just cleared).
      const auto pos = std::lower_bound(
          reduced.begin(), reduced.end(), r.begin()->first,
          [](const TermMap& row, const Mono& m) {
            return GrlexGreater{}(row.begin()->first, m);
          });
      reduced.insert(pos, std::move(r));
    }
  }
  res.rank = int(reduced.size());
  return res;
}

bool proportional(const Poly& p, const Poly& q, Scalar* ratio) {
  require_same_chart(p.chart(), q.chart());
  if (p.is_zero() || q.is_zero()) {
    if (p.is_zero() && q.is_zero()) {
      if (ratio) *ratio = Scalar::one();
      return true;
    }
    return false;
  }
  if (p.term_count() != q.term_count()) return false;
  const Scalar c = q.terms().begin()->second / p.terms().begin()->second;
  if (q == p.scaled(c)) {
    if (ratio) *ratio = c;
    return true;
  }
  return false;
}

}  // namespace pds
