// Command-line front end for the invariant-mode library.
//
// Subcommands:
//   dim        dimension of an invariant space (single value or CSV table)
//   construct  build, verify, and save a complete mode family
//   lift       pull a sphere polynomial back through the fibration
//   twist      apply the twist ladder operators
//   verify     re-check a saved mode: degree, twist, harmonicity, invariance
//   sample     evaluate a mode at random points or along a fiber circle
//   oracle     independent dimension count by group averaging
//
// Exit codes: 0 success; 1 domain error (mathematically invalid request);
// 2 format error (unreadable, unparsable, or non-canonical input files, and
// malformed invocations).

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pds/fastact.hpp"
#include "pds/hopf.hpp"
#include "pds/json_io.hpp"
#include "pds/modes.hpp"
#include "pds/sampling.hpp"

namespace {

using nlohmann::json;
using pds::Chart;
using pds::ModeFamily;
using pds::OrbifoldConfig;
using pds::Poly;

int exact_cap_from_env() {
  const char* raw = std::getenv("PDS_MAX_EXACT_K");
  if (raw == nullptr || *raw == '\0') return pds::kDefaultMaxExactK;
  try {
    size_t used = 0;
    const int cap = std::stoi(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument("");
    return cap;
  } catch (const std::exception&) {
    throw std::invalid_argument(
        std::string("PDS_MAX_EXACT_K must be an integer, got \"") + raw + "\"");
  }
}

// ---- dim -------------------------------------------------------------------

int run_dim(std::optional<int> k, std::optional<int> l, std::optional<int> table) {
  if (table) {
    std::cout << "k,l,dim_harmonics,dim_modes\n";
    for (int kk = 0; kk <= *table; kk += 2) {
      std::cout << kk << ',' << kk / 2 << ',' << pds::dim_invariant_harmonics(kk / 2)
                << ',' << pds::dim_invariant_modes(kk) << '\n';
    }
    return 0;
  }
  if (l) {
    std::cout << pds::dim_invariant_harmonics(*l) << '\n';
    return 0;
  }
  if (*k % 2 == 1) {
    std::cerr << "note: odd degrees carry no modes (the covering group "
                 "contains the antipodal map)\n";
  }
  std::cout << pds::dim_invariant_modes(*k) << '\n';
  return 0;
}

// ---- construct ---------------------------------------------------------

json report_to_json(const pds::VerificationReport& r) {
  return json{{"method", r.exact ? "exact substitution" : "randomized identity testing"},
              {"exact", r.exact},
              {"s2_invariance_counts", r.s2_counts},
              {"s3_invariance_counts", r.s3_counts},
              {"rank", r.rank}};
}

int run_construct(int l, const std::string& config_path, const std::string& out_dir) {
  if (l < 0) throw std::domain_error("degree must be nonnegative");
  const int k = 2 * l;

  ModeFamily fam;
  if (!config_path.empty()) {
    const OrbifoldConfig cfg = pds::config_from_json(pds::load_json(config_path));
    fam = pds::build_family_from_configs(k, {cfg}, exact_cap_from_env());
  } else {
    if (pds::dim_invariant_harmonics(l) == 0) {
      throw std::domain_error("no invariant harmonics exist at degree " +
                              std::to_string(l));
    }
    fam = pds::build_k_modes(k, exact_cap_from_env());
  }

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw pds::FormatError("cannot create directory " + out_dir);
  const std::filesystem::path dir(out_dir);

  json files = json::array();
  for (size_t c = 0; c < fam.configs.size(); ++c) {
    const std::string tag = std::to_string(c);
    pds::save_json((dir / ("config_" + tag + ".json")).string(),
                   pds::config_to_json(fam.configs[c]));
    pds::save_poly((dir / ("sphere_" + tag + ".json")).string(), fam.sphere_modes[c]);
    pds::save_poly((dir / ("vertical_" + tag + ".json")).string(),
                   fam.vertical_modes[c]);
    json twisted = json::array();
    for (int n = -l; n <= l; ++n) {
      const std::string name = "twisted_" + tag + "_n" + std::to_string(n) + ".json";
      pds::save_poly((dir / name).string(), fam.twisted[c][size_t(n + l)]);
      twisted.push_back(name);
    }
    files.push_back(json{{"config", "config_" + tag + ".json"},
                         {"sphere", "sphere_" + tag + ".json"},
                         {"vertical", "vertical_" + tag + ".json"},
                         {"twisted", std::move(twisted)}});
  }

  const json manifest{{"k", fam.k},
                      {"l", l},
                      {"dim", fam.report.rank},
                      {"families", std::move(files)},
                      {"verification", report_to_json(fam.report)}};
  pds::save_json((dir / "manifest.json").string(), manifest);

  std::cout << "wrote " << fam.configs.size() << " mode famil"
            << (fam.configs.size() == 1 ? "y" : "ies") << " to " << out_dir
            << "; rank " << fam.report.rank << ", verification "
            << (fam.report.exact ? "exact" : "randomized") << '\n';
  return 0;
}

// ---- lift / twist ---------------------------------------------------------

int run_lift(const std::string& in_path, const std::string& out_path) {
  const Poly f = pds::load_poly(in_path);
  const Poly lifted = pds::lift(f);
  pds::save_poly(out_path, lifted);
  std::cout << "degree " << f.degree() << " -> degree " << lifted.degree() << '\n';
  return 0;
}

int run_twist(const std::string& in_path, int n, const std::string& out_path) {
  const Poly f = pds::load_poly(in_path);
  if (f.chart() != Chart::Cplx) {
    throw std::domain_error("twist operators act on cplx-chart polynomials");
  }
  const Poly t = pds::twist_apply(f, n);
  pds::save_poly(out_path, t);
  if (t.is_zero()) {
    std::cout << "result: 0\n";
  } else if (auto tw = pds::twist_of(t)) {
    std::cout << "twist: " << pds::rational_to_string(*tw) << '\n';
  } else {
    std::cout << "twist: mixed\n";
  }
  return 0;
}

// ---- verify -----------------------------------------------------------

int run_verify(const std::string& mode_path, const std::string& group) {
  const Poly f = pds::load_poly(mode_path);

  std::cout << "degree " << f.degree();
  if (f.chart() == Chart::Cplx) {
    if (f.is_zero()) {
      std::cout << ", twist 0";
    } else if (auto tw = pds::twist_of(f)) {
      std::cout << ", twist " << pds::rational_to_string(*tw);
    } else {
      std::cout << ", twist mixed";
    }
  }
  std::cout << '\n';

  const Poly lap = f.laplacian();
  const bool harmonic = lap.is_zero();
  if (harmonic) {
    std::cout << "harmonic: yes\n";
  } else {
    std::cout << "harmonic: no (laplacian = " << lap.to_string() << ")\n";
  }

  std::string which = group;
  if (which.empty()) which = (f.chart() == Chart::Cplx) ? "istar" : "i";
  const bool exact = f.degree() <= exact_cap_from_env();
  int fixed = 0;
  int order = 0;
  if (which == "i") {
    order = 60;
    fixed = exact ? pds::invariance_count_s2_fast(f)
                  : pds::randomized_invariance_count_s2(f);
  } else if (which == "istar") {
    order = 120;
    fixed = exact ? pds::invariance_count_s3_fast(f)
                  : pds::randomized_invariance_count_s3(f);
  } else {
    throw std::invalid_argument("unknown group \"" + which + "\" (use i or istar)");
  }
  std::cout << "invariant: " << fixed << '/' << order
            << (exact ? "" : " (randomized identity testing)") << '\n';

  return (harmonic && fixed == order) ? 0 : 1;
}

// ---- sample -----------------------------------------------------------

int run_sample(const std::string& mode_path, int n, uint64_t seed,
               const std::string& out_path, const std::vector<double>& circle) {
  if (n <= 0) throw std::domain_error("sample count must be positive");
  const Poly f = pds::load_poly(mode_path);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw pds::FormatError("cannot open " + out_path + " for writing");
    out = &file;
  }
  out->precision(17);

  if (f.chart() == Chart::Real3) {
    if (!circle.empty()) {
      throw std::domain_error("--circle applies to cplx-chart modes only");
    }
    std::vector<std::array<double, 3>> pts;
    pts.reserve(size_t(n));
    for (int i = 0; i < n; ++i) pts.push_back(pds::sample_s2(seed, uint64_t(i)));
    const auto vals = pds::evaluate_mode_s2(f, pts);
    *out << "x,y,z,F_re,F_im\n";
    for (size_t i = 0; i < pts.size(); ++i) {
      *out << pts[i][0] << ',' << pts[i][1] << ',' << pts[i][2] << ','
           << vals[i].real() << ',' << vals[i].imag() << '\n';
    }
  } else if (f.chart() == Chart::Cplx) {
    std::vector<std::array<double, 4>> pts;
    if (!circle.empty()) {
      // Walk the fiber circle (e^{it} alpha, e^{it} beta) through the given
      // point, n evenly spaced angles.
      double norm = 0;
      for (double c : circle) norm += c * c;
      if (norm < 1e-12) throw std::domain_error("--circle point must be nonzero");
      const double s = 1.0 / std::sqrt(norm);
      const std::complex<double> alpha(circle[0] * s, circle[1] * s);
      const std::complex<double> beta(circle[2] * s, circle[3] * s);
      for (int j = 0; j < n; ++j) {
        const double t = 2.0 * std::numbers::pi * j / n;
        const std::complex<double> a = std::polar(1.0, t) * alpha;
        const std::complex<double> b = std::polar(1.0, t) * beta;
        pts.push_back({a.real(), a.imag(), b.real(), b.imag()});
      }
    } else {
      pts.reserve(size_t(n));
      for (int i = 0; i < n; ++i) pts.push_back(pds::sample_s3(seed, uint64_t(i)));
    }
    const auto vals = pds::evaluate_mode(f, pts);
    *out << "alpha_re,alpha_im,beta_re,beta_im,F_re,F_im\n";
    for (size_t i = 0; i < pts.size(); ++i) {
      *out << pts[i][0] << ',' << pts[i][1] << ',' << pts[i][2] << ',' << pts[i][3]
           << ',' << vals[i].real() << ',' << vals[i].imag() << '\n';
    }
  } else {
    throw std::domain_error("sampling needs a real3 or cplx chart mode");
  }
  if (out == &file && !file) throw pds::FormatError("failed while writing " + out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariant Laplace eigenmodes on the sphere and its "
               "icosahedral quotients"};
  app.require_subcommand(1);

  // dim
  auto* dim = app.add_subcommand("dim", "Dimension of an invariant space");
  std::optional<int> dim_k, dim_l, dim_table;
  auto* ok = dim->add_option("--k", dim_k, "Mode degree upstairs (even)");
  auto* ol = dim->add_option("--l", dim_l, "Harmonic degree on the base sphere");
  auto* ot = dim->add_option("--table", dim_table, "CSV table for k = 0..MAX");
  ok->excludes(ol)->excludes(ot);
  ol->excludes(ot);

  // construct
  auto* con = app.add_subcommand("construct", "Build, verify, and save a mode family");
  int con_l = 0;
  std::string con_config, con_out;
  con->add_option("--l", con_l, "Harmonic degree on the base sphere")->required();
  con->add_option("--config", con_config, "Configuration JSON (skip enumeration)");
  con->add_option("--out", con_out, "Output directory")->required();

  // lift
  auto* lif = app.add_subcommand("lift", "Pull a sphere polynomial back through the fibration");
  std::string lift_in, lift_out;
  lif->add_option("--in", lift_in, "real3 polynomial JSON")->required();
  lif->add_option("--out", lift_out, "Output polynomial JSON")->required();

  // twist
  auto* twi = app.add_subcommand("twist", "Apply the twist ladder operators");
  std::string twist_in, twist_out;
  int twist_n = 0;
  twi->add_option("--in", twist_in, "cplx polynomial JSON")->required();
  twi->add_option("--n", twist_n, "Signed ladder step count")->required();
  twi->add_option("--out", twist_out, "Output polynomial JSON")->required();

  // verify
  auto* ver = app.add_subcommand("verify", "Re-check degree, twist, harmonicity, invariance");
  std::string ver_mode, ver_group;
  ver->add_option("--mode", ver_mode, "Polynomial JSON")->required();
  ver->add_option("--group", ver_group, "i (60 rotations) or istar (120 quaternions)");

  // sample
  auto* sam = app.add_subcommand("sample", "Evaluate a mode at sample points (CSV)");
  std::string sam_mode, sam_out;
  int sam_n = 100;
  uint64_t sam_seed = 0;
  std::vector<double> sam_circle;
  sam->add_option("--mode", sam_mode, "Polynomial JSON")->required();
  sam->add_option("--n", sam_n, "Number of sample points");
  sam->add_option("--seed", sam_seed, "Sampler seed");
  sam->add_option("--out", sam_out, "CSV path (default stdout)");
  sam->add_option("--circle", sam_circle,
                  "a_re a_im b_re b_im: walk the fiber circle through this point")
      ->expected(4);

  // oracle
  auto* ora = app.add_subcommand("oracle", "Independent dimension count by group averaging");
  int ora_k = 0, ora_cap = 12;
  ora->add_option("--k", ora_k, "Mode degree upstairs (even)")->required();
  ora->add_option("--exact-cap", ora_cap, "Largest k handled exactly");

  // tables
  auto* tab = app.add_subcommand("tables", "Export the exact symmetry-group tables");
  std::string tab_out;
  tab->add_option("--out", tab_out, "Output JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed invocation is a format error
  }

  try {
    if (dim->parsed()) {
      if (!dim_k && !dim_l && !dim_table) {
        throw std::invalid_argument("dim needs one of --k, --l, --table");
      }
      return run_dim(dim_k, dim_l, dim_table);
    }
    if (con->parsed()) return run_construct(con_l, con_config, con_out);
    if (lif->parsed()) return run_lift(lift_in, lift_out);
    if (twi->parsed()) return run_twist(twist_in, twist_n, twist_out);
    if (ver->parsed()) return run_verify(ver_mode, ver_group);
    if (sam->parsed()) return run_sample(sam_mode, sam_n, sam_seed, sam_out, sam_circle);
    if (ora->parsed()) {
      std::cout << pds::reynolds_rank_oracle(ora_k, ora_cap) << '\n';
      return 0;
    }
    if (tab->parsed()) {
      const json t = pds::group_tables_to_json();
      if (tab_out.empty()) {
        std::cout << t.dump(2) << '\n';
      } else {
        pds::save_json(tab_out, t);
        std::cout << "wrote 60 rotations and 120 quaternions to " << tab_out << '\n';
      }
      return 0;
    }
  } catch (const pds::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
