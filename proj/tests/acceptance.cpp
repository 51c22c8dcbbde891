// Acceptance suite: every criterion runs at its stated tolerance and
// prints one [PASS]/[FAIL] line.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamedge/bending.hpp"
#include "hamedge/catalog.hpp"
#include "hamedge/dh.hpp"
#include "hamedge/errors.hpp"
#include "hamedge/json_io.hpp"
#include "hamedge/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

using namespace hamedge;

namespace {

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void expect(bool cond, const std::string& what) {
    CHECK_MESSAGE(cond, "criterion ", number_, ": ", what);
    if (!cond) ok_ = false;
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void budget(double seconds) {
    std::ostringstream os;
    os << "runtime " << elapsed() << " s exceeds " << seconds << " s";
    expect(elapsed() < seconds, os.str());
  }

  ~Criterion() {
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok_ ? "PASS" : "FAIL", number_,
                title_.c_str(), elapsed());
    std::fflush(stdout);
  }

 private:
  int number_;
  std::string title_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

LengthVector lv(std::initializer_list<const char*> tokens, int origin = 1) {
  std::vector<Rat> v;
  for (const char* t : tokens) v.push_back(parse_rational(t));
  return LengthVector(std::move(v), origin);
}

// Exhaustive enumerator over all 2^n sign vectors; test-only oracle.
void oracle_walk(const std::vector<Rat>& a, size_t idx, const Rat& sum, Rat& best) {
  if (idx == a.size()) {
    const Rat v = abs(sum);
    if (v < best) best = v;
    return;
  }
  oracle_walk(a, idx + 1, Rat(sum + a[idx]), best);
  oracle_walk(a, idx + 1, Rat(sum - a[idx]), best);
}

Rat oracle_min_abs(const std::vector<Rat>& a) {
  Rat best = Rat(1);
  for (const Rat& x : a) best += abs(x);
  oracle_walk(a, 0, Rat(0), best);
  return best;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("criterion 1: cohomology identity suite over the generated catalog") {
  Criterion c(1, "cohomology identity suite over the generated catalog");

  int cp = 0, grassmann = 0, quadric = 0, sphere = 0, product = 0;
  for (const auto& entry : build_catalog()) {
    const auto* t = std::get_if<SimpleTriple>(&entry.expected);
    if (!t) continue;
    if (entry.family == "cp") ++cp;
    if (entry.family == "grassmann") ++grassmann;
    if (entry.family == "quadric") ++quadric;
    if (entry.family == "sphere") ++sphere;
    if (entry.family == "product") ++product;

    // both difference-of-products equations
    c.expect(Poly::one_minus_t(2 * t->r1) * t->p1.poly() ==
                 Poly::one_minus_t(2 * t->r0) * t->p0.poly(),
             entry.name + ": first solve equation");
    c.expect(Poly::one_minus_t(2 * t->r1) * t->p.poly() ==
                 Poly::one_minus_t(2 * (t->r0 + t->r1)) * t->p0.poly(),
             entry.name + ": second solve equation");
    // both fixed-set equalities
    c.expect(t->p.poly() == t->p0.poly() + t->p1.poly().shifted(2 * t->r1),
             entry.name + ": lower fixed-set equality");
    c.expect(t->p.poly() == t->p0.poly().shifted(2 * t->r0) + t->p1.poly(),
             entry.name + ": upper fixed-set equality");

    const CheckReport suite = suite_check(*t);
    c.expect(suite.failures() == 0, entry.name + ": suite reports a failure");
  }
  c.expect(cp == 54, "projective family size");
  c.expect(grassmann == 28, "grassmannian family size");
  c.expect(quadric == 7, "quadric family size");
  c.expect(sphere == 1, "sphere entry");
  c.expect(product == 5, "five product entries");
  c.budget(5.0);
}

TEST_CASE("criterion 2: constraint-suite soundness on a random division-consistent corpus") {
  Criterion c(2, "constraint-suite soundness on 1000 division-consistent triples");

  std::mt19937_64 rng(20260810);
  std::uniform_int_distribution<int> deg_dist(0, 16);
  std::uniform_int_distribution<int> coeff_dist(0, 5);
  std::uniform_int_distribution<int> r_dist(1, 5);

  int solved = 0;
  long attempts = 0;
  while (solved < 1000 && attempts < 2000000) {
    ++attempts;
    const int deg = deg_dist(rng);
    std::vector<Int> coeffs(static_cast<size_t>(deg) + 1);
    for (auto& x : coeffs) x = coeff_dist(rng);
    coeffs[0] = std::max(1, coeff_dist(rng));
    if (coeffs.back() == 0) coeffs.back() = 1;
    const PoincarePoly p0{Poly(std::move(coeffs))};
    const int r0 = r_dist(rng), r1 = r_dist(rng);

    SimpleTriple t;
    try {
      t = solve_triple(p0, r0, r1);
    } catch (const Error&) {
      continue;
    }
    ++solved;

    const bool bound = t.dim() <= t.dim0() + t.dim1() + 2;
    const bool h1 = t.p0.coeff(1) == t.p.coeff(1) && t.p1.coeff(1) == t.p.coeff(1);
    const bool parity = (t.p0.poly().has_odd_term() == t.p1.poly().has_odd_term()) &&
                        (t.p0.poly().has_odd_term() == t.p.poly().has_odd_term());
    const bool equal_codim = r0 != r1 || t.p0 == t.p1;
    if (!(bound && h1 && parity && equal_codim)) {
      const std::string dump = triple_to_json(t).dump(2);
      std::ofstream("criterion2_counterexample.json") << dump << "\n";
      std::fprintf(stderr, "counterexample dumped:\n%s\n", dump.c_str());
      c.expect(false, "counterexample found (see criterion2_counterexample.json)");
    }
  }
  c.expect(solved == 1000, "corpus size reached");
}

TEST_CASE("criterion 3: genericity oracle agreement") {
  Criterion c(3, "genericity and margin agree with the naive enumerator");

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> n_dist(2, 12);
  std::uniform_int_distribution<int> num(1, 20);
  std::uniform_int_distribution<int> den(1, 8);

  int disagreements = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = n_dist(rng);
    std::vector<Rat> v(static_cast<size_t>(n));
    for (auto& x : v) x = Rat(num(rng), den(rng));
    const LengthVector alpha(v);

    const Rat oracle = oracle_min_abs(alpha.entries());
    if (is_generic(alpha) != (oracle != 0)) ++disagreements;
    if (oracle != 0 && genericity_margin(alpha) != oracle) ++disagreements;
  }
  c.expect(disagreements == 0, "enumerator disagreement");
}

TEST_CASE("criterion 4: bending conservation") {
  Criterion c(4, "bending conserves the moment value, closure, and period");

  const LengthVector vectors[] = {lv({"1", "1", "1", "2"}), lv({"2", "4", "6", "9"}),
                                  lv({"1/4", "1", "1", "1", "2"}, 0)};
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);

  double worst_dphi = 0, worst_closure = 0, worst_period = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const LengthVector& alpha = vectors[trial % 3];
    const int origin = alpha.index_origin();
    const int n = alpha.size();
    const Config cfg = sample_config(alpha, 40000 + static_cast<std::uint64_t>(trial));

    std::uniform_int_distribution<int> pick(0, n - 1);
    int i = pick(rng), j = pick(rng);
    if (i == j) j = (j + 1) % n;
    const double theta = angle(rng);

    const Config bent = bend(cfg, i + origin, j + origin, theta);
    worst_dphi = std::max(worst_dphi, std::abs(phi(bent, i + origin, j + origin) -
                                               phi(cfg, i + origin, j + origin)));
    worst_closure = std::max(worst_closure, std::abs(bent.closure().norm() -
                                                     cfg.closure().norm()));

    const Config around = bend(cfg, i + origin, j + origin, 2.0 * M_PI);
    for (int k = 0; k < n; ++k)
      worst_period = std::max(worst_period, (around.rho[k] - cfg.rho[k]).norm());
  }
  c.expect(worst_dphi <= 1e-10, "|delta phi| <= 1e-10");
  c.expect(worst_closure <= 1e-10, "closure drift <= 1e-10");
  c.expect(worst_period <= 1e-10, "2*pi return error <= 1e-10");
  c.budget(10.0);
}

TEST_CASE("criterion 5: moment-image intervals from sampling plus refinement") {
  Criterion c(5, "sampled moment intervals reproduce the analytic ones");

  struct Case {
    LengthVector alpha;
    int i, j;
    double expected_length;
  };
  const Case cases[] = {
      {lv({"1", "1", "1", "2"}), 4, 3, 1.0},
      {lv({"2", "4", "6", "9"}), 4, 3, 3.0},
      {lv({"1/4", "1", "1", "1", "2"}, 0), 2, 0, 0.5},
  };

  for (const Case& k : cases) {
    const RatInterval analytic = phi_image_analytic(k.alpha, k.i, k.j);
    const double alo = to_double(analytic.lo), ahi = to_double(analytic.hi);
    const Interval mc = estimate_phi_image(k.alpha, k.i, k.j, 100000, 7);

    std::ostringstream tag;
    tag << k.alpha.str() << " pair (" << k.i << "," << k.j << ")";
    c.expect(std::abs(mc.lo - alo) <= 1e-3 * std::abs(alo),
             tag.str() + ": lower endpoint within 1e-3 relative");
    c.expect(std::abs(mc.hi - ahi) <= 1e-3 * std::abs(ahi),
             tag.str() + ": upper endpoint within 1e-3 relative");
    c.expect(std::abs(mc.length() - k.expected_length) <= 1e-3 * k.expected_length,
             tag.str() + ": interval length");
    c.expect(mc.lo >= alo - 1e-9 && mc.hi <= ahi + 1e-9,
             tag.str() + ": samples stay inside the analytic interval");
  }
  c.budget(60.0);
}

TEST_CASE("criterion 6: perturbations inside the margin keep genericity") {
  Criterion c(6, "tiny-edge margin is safe on a 21-point grid");

  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> n_dist(3, 8);
  std::uniform_int_distribution<int> num(1, 15);
  std::uniform_int_distribution<int> den(1, 6);

  int tested = 0, failures = 0;
  while (tested < 100) {
    const int n = n_dist(rng);
    std::vector<Rat> v(static_cast<size_t>(n));
    for (auto& x : v) x = Rat(num(rng), den(rng));
    const LengthVector alpha(v);
    if (!is_generic(alpha)) continue;
    ++tested;

    const Rat margin = genericity_margin(alpha);
    const Rat eps = std::min(Rat(margin * Rat(99, 100)), Rat(alpha.pos(0) * Rat(99, 100)));
    for (int j = 1; j <= alpha.size(); ++j)
      for (int g = 0; g <= 20; ++g) {
        const Rat delta = eps * Rat(g - 10, 10);
        if (!is_generic(perturb(alpha, j, delta))) ++failures;
      }
  }
  c.expect(failures == 0, "a perturbation inside the margin lost genericity");
}

TEST_CASE("criterion 7: slope recovery and rescaling on reduced-class lines") {
  Criterion c(7, "slope recovery is exact; rescaling matches");

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim_dist(1, 6);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> lam_num(0, 24);

  std::vector<std::string> labels;
  for (int k = 1; k <= 6; ++k) labels.push_back("e(xi_" + std::to_string(k) + ")");

  int exact = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = dim_dist(rng);
    RatVec base(n), slope(n);
    for (int k = 0; k < n; ++k) {
      base(k) = Rat(num(rng), den(rng));
      slope(k) = Rat(num(rng), den(rng));
    }
    const std::vector<std::string> basis(labels.begin(), labels.begin() + n);
    const DHPath path(H2Class(basis, base), H2Class(basis, slope), Rat(9, 2));
    Rat a = Rat(lam_num(rng), 6);
    Rat b = Rat(lam_num(rng), 6);
    if (a == b) b += Rat(1, 6);
    const H2Class recovered =
        euler_from_slope(dh_class_at(path, a), a, dh_class_at(path, b), b);
    if (recovered.coords == slope) ++exact;
  }
  c.expect(exact == 1000, "exact recovery on every random path");

  // the quadrilateral line: perturbing one side moves the class along the
  // unit vector of that side
  const std::vector<std::string> basis4(labels.begin(), labels.begin() + 4);
  const H2Class omega0 = omega0_from_lengths(lv({"1", "1", "1", "2"}), basis4);
  RatVec shifted = omega0.coords;
  shifted(1) += Rat(1, 4);
  const H2Class slope =
      euler_from_slope(omega0, Rat(0), H2Class(basis4, shifted), Rat(1, 4));
  RatVec unit(4);
  unit << Rat(0), Rat(1), Rat(0), Rat(0);
  c.expect(slope.coords == unit, "polygon slope is the unit class of the perturbed side");

  c.expect(scale_factor(Rat(1, 2), Rat(3)) == Rat(5, 2), "scale factor 1 + s*ell");
  bool degenerate = false;
  try {
    scale_factor(Rat(-1), Rat(2));
  } catch (const DegeneratePath&) {
    degenerate = true;
  }
  c.expect(degenerate, "vanishing class is rejected");
  c.expect(linear_dependence(omega0, H2Class(basis4, RatVec(Rat(1, 2) * omega0.coords))) ==
               Rat(1, 2),
           "rank-one test recovers s");
}

TEST_CASE("criterion 8: deterministic reports") {
  Criterion c(8, "catalog verify --deterministic --seed 7 is byte-identical");

  const std::string out1 = "acceptance_report_1.json";
  const std::string out2 = "acceptance_report_2.json";
  const std::string base = std::string(HAMEDGE_CLI_PATH) +
                           " catalog verify --deterministic --seed 7 --out ";
  const int status1 = std::system((base + out1).c_str());
  const int status2 = std::system((base + out2).c_str());
  c.expect(WIFEXITED(status1) && WEXITSTATUS(status1) == 0, "first run exits 0");
  c.expect(WIFEXITED(status2) && WEXITSTATUS(status2) == 0, "second run exits 0");

  const std::string a = slurp(out1), b = slurp(out2);
  c.expect(!a.empty(), "report written");
  c.expect(a == b, "byte-identical reports");
  c.expect(json::parse(a)["seed"] == 7, "seed recorded");
}
