// Command-line front end: one verb per library operation, JSON output,
// deterministic given identical flags and seeds.

#include "hamedge/bending.hpp"
#include "hamedge/catalog.hpp"
#include "hamedge/dh.hpp"
#include "hamedge/errors.hpp"
#include "hamedge/json_io.hpp"
#include "hamedge/report.hpp"
#include "hamedge/triple.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hamedge::json;
using hamedge::Rat;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HAMEDGE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw hamedge::DomainError("HAMEDGE_SEED is not an unsigned integer");
    }
  }
  return 0;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail_with(const hamedge::Error& e) {
  print(json{{"error", e.what()}});
  return kExitFail;
}

hamedge::LengthVector parse_alpha(const std::string& csv, bool zero_indexed) {
  return hamedge::LengthVector(hamedge::parse_rational_list(csv), zero_indexed ? 0 : 1);
}

hamedge::PoincarePoly parse_poly(const std::string& csv) {
  std::vector<hamedge::Int> coeffs;
  for (const Rat& r : hamedge::parse_rational_list(csv)) {
    if (hamedge::denominator(r) != 1)
      throw hamedge::DomainError("polynomial coefficients must be integers");
    coeffs.push_back(hamedge::numerator(r));
  }
  try {
    return hamedge::PoincarePoly(hamedge::Poly(std::move(coeffs)));
  } catch (const hamedge::NegativeBetti&) {
    throw hamedge::DomainError("P0 must have nonnegative coefficients");
  }
}

std::vector<std::string> default_basis(int n) {
  std::vector<std::string> basis;
  basis.reserve(static_cast<size_t>(n));
  for (int k = 1; k <= n; ++k) basis.push_back("e(xi_" + std::to_string(k) + ")");
  return basis;
}

hamedge::H2Class parse_class(const std::string& csv, const std::string& basis_csv) {
  std::vector<Rat> coords = hamedge::parse_rational_list(csv);
  std::vector<std::string> basis;
  if (basis_csv.empty()) {
    basis = default_basis(static_cast<int>(coords.size()));
  } else {
    std::stringstream ss(basis_csv);
    std::string item;
    while (std::getline(ss, item, ',')) basis.push_back(item);
  }
  hamedge::RatVec v(static_cast<Eigen::Index>(coords.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = coords[static_cast<size_t>(k)];
  return hamedge::H2Class(std::move(basis), std::move(v));
}

json config_json(const hamedge::Config& c, std::uint64_t seed) {
  json rho = json::array();
  for (const auto& r : c.rho) rho.push_back({r.x(), r.y(), r.z()});
  json alpha = json::array();
  for (double a : c.alpha) alpha.push_back(a);
  return json{{"alpha", alpha},
              {"seed", seed},
              {"rho", rho},
              {"closure_norm", c.closure().norm()},
              {"max_norm_error", c.max_norm_error()}};
}

struct CliOptions {
  std::string alpha_csv;
  bool zero_indexed = false;
  std::uint64_t seed = 0;
  bool seed_given = false;

  std::string p0_csv;
  int r0 = 1, r1 = 1;
  std::string label;

  std::string family;
  int max_dim = -1;
  std::string format = "json";
  std::string out_path;
  std::string svg_dir;
  bool deterministic = false;
  int threads = 0;

  std::string eps;

  int i = 0, j = 0;
  int samples = 100000;
  int refine_steps = 200;
  double theta = 0.0;
  double closure_tol = 1e-10;
  std::string svg_file;
  bool gauge = false;

  std::string omega_csv, e_csv, basis_csv;
  std::string c1_csv, c2_csv;
  std::string lam1, lam2, s, ell;
};

int run_triple_check(const CliOptions& opt) {
  hamedge::PoincarePoly p0 = parse_poly(opt.p0_csv);
  if (opt.r0 < 1 || opt.r1 < 1) throw hamedge::DomainError("codimensions must be positive");

  hamedge::SimpleTriple triple;
  try {
    triple = hamedge::solve_triple(p0, opt.r0, opt.r1, opt.label);
  } catch (const hamedge::Error& e) {
    print(json{{"error", e.what()}, {"status", "fail"}});
    return kExitFail;
  }
  const hamedge::CheckReport report = hamedge::suite_check(triple);
  print(json{{"triple", hamedge::triple_to_json(triple)},
             {"checks", hamedge::report_to_json(report)}});
  return report.all_passed() ? kExitPass : kExitFail;
}

int run_catalog_verify(const CliOptions& opt) {
  hamedge::CatalogFilter filter;
  if (!opt.family.empty()) filter.family = opt.family;
  if (opt.max_dim >= 0) filter.max_dim = opt.max_dim;
  filter.seed = opt.seed;
  filter.threads = opt.threads;

  const hamedge::Report report = hamedge::run_catalog(filter);

  if (!opt.svg_dir.empty())
    hamedge::report_emit(report, hamedge::ReportFormat::svg_dir, opt.svg_dir, opt.deterministic);

  if (!opt.out_path.empty()) {
    hamedge::report_emit(report,
                         opt.format == "csv" ? hamedge::ReportFormat::csv
                                             : hamedge::ReportFormat::json,
                         opt.out_path, opt.deterministic);
  } else if (opt.format == "csv") {
    std::cout << hamedge::report_to_csv(report);
  } else {
    print(hamedge::report_to_json(report, opt.deterministic));
  }
  return report.all_passed() ? kExitPass : kExitFail;
}

int run_polygon(const std::string& verb, const CliOptions& opt) {
  const hamedge::LengthVector alpha = parse_alpha(opt.alpha_csv, opt.zero_indexed);

  if (verb == "generic") {
    const bool generic = hamedge::is_generic(alpha);
    print(json{{"alpha", alpha.str()}, {"n", alpha.size()}, {"generic", generic}});
    return generic ? kExitPass : kExitFail;
  }
  if (verb == "margin") {
    try {
      const Rat margin = hamedge::genericity_margin(alpha);
      print(json{{"alpha", alpha.str()}, {"margin", hamedge::format_rational(margin)}});
      return kExitPass;
    } catch (const hamedge::NotGeneric& e) {
      return fail_with(e);
    }
  }
  if (verb == "classify") {
    const hamedge::ChamberResult res = hamedge::classify_chamber(alpha);
    json j{{"alpha", alpha.str()},
           {"kind", hamedge::to_string(res.kind)},
           {"detail", res.detail}};
    const bool classified =
        res.kind == hamedge::ChamberKind::CPn3 || res.kind == hamedge::ChamberKind::CutOfCPn2;
    if (classified) j["ell"] = hamedge::format_rational(res.ell);
    if (res.kind == hamedge::ChamberKind::CutOfCPn2)
      j["slice_size"] = hamedge::format_rational(res.slice_size);
    print(j);
    return classified ? kExitPass : kExitFail;
  }
  if (verb == "tiny") {
    const Rat eps = hamedge::parse_rational(opt.eps);
    try {
      const hamedge::LengthVector out = hamedge::add_tiny_edge(alpha, eps);
      print(json{{"alpha", out.str()},
                 {"index_origin", out.index_origin()},
                 {"generic", hamedge::is_generic(out)}});
      return kExitPass;
    } catch (const hamedge::NotTiny& e) {
      return fail_with(e);
    }
  }
  throw hamedge::DomainError("unknown polygon verb");
}

int run_bend(const std::string& verb, const CliOptions& opt) {
  const hamedge::LengthVector alpha = parse_alpha(opt.alpha_csv, opt.zero_indexed);

  try {
    hamedge::SampleOptions sopt;
    sopt.closure_tol = opt.closure_tol;
    if (verb == "sample") {
      hamedge::Config c = hamedge::sample_config(alpha, opt.seed, sopt);
      if (opt.gauge) c = hamedge::gauge_fix(c);
      print(config_json(c, opt.seed));
      return kExitPass;
    }
    if (verb == "flow") {
      const hamedge::Config c = hamedge::sample_config(alpha, opt.seed, sopt);
      const double before = hamedge::phi(c, opt.i, opt.j);
      const hamedge::Config bent = hamedge::bend(c, opt.i, opt.j, opt.theta);
      const double after = hamedge::phi(bent, opt.i, opt.j);
      print(json{{"theta", opt.theta},
                 {"phi_before", before},
                 {"phi_after", after},
                 {"delta_phi", after - before},
                 {"closure_before", c.closure().norm()},
                 {"closure_after", bent.closure().norm()},
                 {"seed", opt.seed}});
      return kExitPass;
    }
    if (verb == "interval") {
      hamedge::EstimateOptions eopt;
      eopt.refine_steps = opt.refine_steps;
      eopt.threads = opt.threads;
      eopt.sample = sopt;
      const hamedge::RatInterval analytic = hamedge::phi_image_analytic(alpha, opt.i, opt.j);
      const hamedge::Interval mc =
          hamedge::estimate_phi_image(alpha, opt.i, opt.j, opt.samples, opt.seed, eopt);
      if (!opt.svg_file.empty()) {
        hamedge::IntervalPlot plot;
        plot.name = "phi(" + std::to_string(opt.i) + "," + std::to_string(opt.j) + ") on " +
                    alpha.str();
        plot.lo = mc.lo;
        plot.hi = mc.hi;
        plot.analytic_lo = hamedge::to_double(analytic.lo);
        plot.analytic_hi = hamedge::to_double(analytic.hi);
        std::ofstream os(opt.svg_file, std::ios::binary);
        if (!os) throw hamedge::IOFailure("cannot open " + opt.svg_file);
        os << hamedge::svg_interval_plot(plot);
      }
      print(json{{"lo", mc.lo},
                 {"hi", mc.hi},
                 {"analytic_lo", hamedge::to_double(analytic.lo)},
                 {"analytic_hi", hamedge::to_double(analytic.hi)},
                 {"samples", opt.samples},
                 {"seed", opt.seed}});
      return kExitPass;
    }
  } catch (const hamedge::NotGeneric& e) {
    return fail_with(e);
  } catch (const hamedge::NonConvergence& e) {
    return fail_with(e);
  } catch (const hamedge::UndefinedAxis& e) {
    return fail_with(e);
  }
  throw hamedge::DomainError("unknown bend verb");
}

int run_dh(const std::string& verb, const CliOptions& opt) {
  if (verb == "depend") {
    const hamedge::H2Class omega = parse_class(opt.omega_csv, opt.basis_csv);
    const hamedge::H2Class e = parse_class(opt.e_csv, opt.basis_csv);
    try {
      const std::optional<Rat> s = hamedge::linear_dependence(omega, e);
      json j{{"omega", hamedge::h2_to_json(omega)},
             {"e", hamedge::h2_to_json(e)},
             {"dependent", s.has_value()}};
      if (s) j["s"] = hamedge::format_rational(*s);
      print(j);
      return s ? kExitPass : kExitFail;
    } catch (const hamedge::ZeroOmega& err) {
      return fail_with(err);
    }
  }
  if (verb == "scale") {
    const Rat s = hamedge::parse_rational(opt.s);
    const Rat ell = hamedge::parse_rational(opt.ell);
    try {
      const Rat factor = hamedge::scale_factor(s, ell);
      print(json{{"s", hamedge::format_rational(s)},
                 {"ell", hamedge::format_rational(ell)},
                 {"factor", hamedge::format_rational(factor)}});
      return kExitPass;
    } catch (const hamedge::DegeneratePath& e) {
      return fail_with(e);
    }
  }
  if (verb == "euler") {
    const hamedge::H2Class c1 = parse_class(opt.c1_csv, opt.basis_csv);
    const hamedge::H2Class c2 = parse_class(opt.c2_csv, opt.basis_csv);
    const Rat lam1 = hamedge::parse_rational(opt.lam1);
    const Rat lam2 = hamedge::parse_rational(opt.lam2);
    try {
      const hamedge::H2Class slope = hamedge::euler_from_slope(c1, lam1, c2, lam2);
      print(json{{"slope", hamedge::h2_to_json(slope)}});
      return kExitPass;
    } catch (const hamedge::DegenerateSamples& e) {
      return fail_with(e);
    }
  }
  throw hamedge::DomainError("unknown dh verb");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant toolkit for Hamiltonian torus actions with two fixed components"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hamedge 0.1.0");

  CliOptions opt;

  auto* triple = app.add_subcommand("triple", "polynomial triple operations");
  triple->require_subcommand(1);
  auto* triple_check = triple->add_subcommand("check", "solve for P1, P and run the suite");
  triple_check->add_option("--p0", opt.p0_csv, "P0 coefficients, comma-separated integers")
      ->required();
  triple_check->add_option("--r0", opt.r0, "half-codimension of the first fixed set")->required();
  triple_check->add_option("--r1", opt.r1, "half-codimension of the second fixed set")
      ->required();
  triple_check->add_option("--label", opt.label, "catalog label");

  auto* catalog = app.add_subcommand("catalog", "generated example catalog");
  catalog->require_subcommand(1);
  auto* catalog_verify = catalog->add_subcommand("verify", "re-derive and check every entry");
  catalog_verify->add_option("--family", opt.family,
                             "cp|grassmann|quadric|sphere|product|polygon-cp|polygon-cut");
  catalog_verify->add_option("--max-dim", opt.max_dim, "keep entries of dimension <= N");
  catalog_verify
      ->add_option("--seed", opt.seed, "seed recorded in the report")
      ->each([&opt](const std::string&) { opt.seed_given = true; });
  catalog_verify->add_flag("--deterministic", opt.deterministic, "suppress the timestamp");
  catalog_verify->add_option("--format", opt.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  catalog_verify->add_option("--out", opt.out_path, "output file (default stdout)");
  catalog_verify->add_option("--svg-dir", opt.svg_dir, "write interval plots here");
  catalog_verify->add_option("--threads", opt.threads, "work-pool size (0 = auto)");

  auto* polygon = app.add_subcommand("polygon", "exact length-vector combinatorics");
  polygon->require_subcommand(1);
  std::vector<CLI::App*> polygon_verbs;
  for (const char* verb : {"generic", "margin", "classify", "tiny"}) {
    auto* sub = polygon->add_subcommand(verb);
    sub->add_option("--alpha", opt.alpha_csv, "side lengths, e.g. 1,1,1,2 or 1/4,1,1,1,2")
        ->required();
    sub->add_flag("--zero-indexed", opt.zero_indexed, "first entry is edge 0 (tiny edge)");
    polygon_verbs.push_back(sub);
  }
  polygon_verbs[3]->add_option("--eps", opt.eps, "tiny edge length")->required();

  auto* bendcmd = app.add_subcommand("bend", "polygon configuration simulator");
  bendcmd->require_subcommand(1);
  for (const char* verb : {"interval", "flow", "sample"}) {
    auto* sub = bendcmd->add_subcommand(verb);
    sub->add_option("--alpha", opt.alpha_csv, "side lengths")->required();
    sub->add_flag("--zero-indexed", opt.zero_indexed);
    sub->add_option("--seed", opt.seed)->each([&opt](const std::string&) {
      opt.seed_given = true;
    });
    sub->add_option("--closure-tol", opt.closure_tol, "closure tolerance for sampling");
    if (std::string(verb) != "sample") {
      sub->add_option("--i", opt.i, "first edge of the bending pair")->required();
      sub->add_option("--j", opt.j, "second edge of the bending pair")->required();
    }
    if (std::string(verb) == "interval") {
      sub->add_option("--samples", opt.samples);
      sub->add_option("--refine-steps", opt.refine_steps);
      sub->add_option("--threads", opt.threads);
      sub->add_option("--svg", opt.svg_file, "write an interval plot");
    }
    if (std::string(verb) == "flow") sub->add_option("--theta", opt.theta)->required();
    if (std::string(verb) == "sample")
      sub->add_flag("--gauge", opt.gauge, "gauge-fix the sampled configuration");
  }

  auto* dh = app.add_subcommand("dh", "reduced-class lines");
  dh->require_subcommand(1);
  auto* dh_depend = dh->add_subcommand("depend", "rank-one test e = s * omega");
  dh_depend->add_option("--omega", opt.omega_csv, "omega coordinates")->required();
  dh_depend->add_option("--e", opt.e_csv, "Euler-class coordinates")->required();
  dh_depend->add_option("--basis", opt.basis_csv, "basis labels (default e(xi_k))");
  auto* dh_scale = dh->add_subcommand("scale", "rescaling factor 1 + s*ell");
  dh_scale->add_option("--s", opt.s)->required();
  dh_scale->add_option("--ell", opt.ell)->required();
  auto* dh_euler = dh->add_subcommand("euler", "slope from two path samples");
  dh_euler->add_option("--c1", opt.c1_csv)->required();
  dh_euler->add_option("--lam1", opt.lam1)->required();
  dh_euler->add_option("--c2", opt.c2_csv)->required();
  dh_euler->add_option("--lam2", opt.lam2)->required();
  dh_euler->add_option("--basis", opt.basis_csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (!opt.seed_given) opt.seed = default_seed();

    if (triple_check->parsed()) return run_triple_check(opt);
    if (catalog_verify->parsed()) return run_catalog_verify(opt);
    for (auto* sub : polygon_verbs)
      if (sub->parsed()) return run_polygon(sub->get_name(), opt);
    for (auto* sub : bendcmd->get_subcommands())
      if (sub->parsed()) return run_bend(sub->get_name(), opt);
    for (auto* sub : dh->get_subcommands())
      if (sub->parsed()) return run_dh(sub->get_name(), opt);
    std::cerr << "no subcommand dispatched\n";
    return kExitUsage;
  } catch (const hamedge::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hamedge::BadIndices& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hamedge::NonPositiveLength& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hamedge::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hamedge::SizeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hamedge::Error& e) {
    print(json{{"error", e.what()}});
    return kExitFail;
  }
}
