#include "hamedge/triple.hpp"

#include "hamedge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hamedge {

namespace {

bool is_cp_poly(const Poly& p) {
  if (p.is_zero() || p.degree() % 2 != 0) return false;
  return p == static_cast<const Poly&>(cp_poincare(p.degree() / 2));
}

std::string eq_detail(const Poly& got, const Poly& want) {
  return "got " + got.str() + ", want " + want.str();
}

}  // namespace

SimpleTriple solve_triple(const PoincarePoly& p0, int r0, int r1, std::string label) {
  if (p0.is_zero()) throw DomainError("solve_triple: P0 must be nonzero");
  if (r0 < 1 || r1 < 1) throw DomainError("solve_triple: codimensions must be positive");

  const Poly den = Poly::one_minus_t(2 * r1);
  const Poly p1_raw = exact_div(Poly::one_minus_t(2 * r0) * p0.poly(), den);
  const Poly p_raw = exact_div(Poly::one_minus_t(2 * (r0 + r1)) * p0.poly(), den);
  PoincarePoly p1(p1_raw);
  PoincarePoly p(p_raw);

  // A closed symplectic manifold of dimension 2m has b_{2k} >= 1 for all
  // k <= m, so the total polynomial may not skip an even degree. Given the
  // division equations this reduces to r1 <= m0 + 1.
  if (2 * r1 > p0.degree() + 2)
    throw DimensionBound("solve_triple: fixed-set codimension 2*" + std::to_string(r1) +
                         " exceeds deg(P0) + 2 = " + std::to_string(p0.degree() + 2));

  return SimpleTriple{p0, std::move(p1), std::move(p), r0, r1, std::move(label)};
}

bool CheckReport::all_passed() const { return failures() == 0; }

int CheckReport::failures() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.status == CheckStatus::fail) ++n;
  return n;
}

const CheckEntry* CheckReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

CheckReport suite_check(const SimpleTriple& t) {
  CheckReport report;
  auto add = [&report](std::string name, bool ok, std::string detail,
                       CheckStatus bad = CheckStatus::fail) {
    report.entries.push_back({std::move(name), ok ? CheckStatus::pass : bad, std::move(detail)});
  };

  const Poly& p0 = t.p0.poly();
  const Poly& p1 = t.p1.poly();
  const Poly& p = t.p.poly();

  {
    const Poly want = p0 + p1.shifted(2 * t.r1);
    add("morse_bott_0", p == want, p == want ? "" : eq_detail(p, want));
  }
  {
    const Poly want = p0.shifted(2 * t.r0) + p1;
    add("morse_bott_1", p == want, p == want ? "" : eq_detail(p, want));
  }

  const bool extremal = t.dim() == t.dim0() + t.dim1() + 2;
  {
    const bool ok = t.dim() <= t.dim0() + t.dim1() + 2;
    std::ostringstream os;
    os << "dim M = " << t.dim() << ", dim M0 + dim M1 + 2 = " << t.dim0() + t.dim1() + 2;
    add("dim_bound", ok, os.str());
  }

  {
    const bool ok = p0.coeff(1) == p.coeff(1) && p1.coeff(1) == p.coeff(1);
    add("h1_equal", ok,
        "b1(M0)=" + p0.coeff(1).str() + " b1(M)=" + p.coeff(1).str() +
            " b1(M1)=" + p1.coeff(1).str());
  }

  {
    const bool o0 = p0.has_odd_term(), o1 = p1.has_odd_term(), om = p.has_odd_term();
    add("odd_parity", o0 == o1 && o1 == om,
        std::string("odd terms: M0=") + (o0 ? "yes" : "no") + " M1=" + (o1 ? "yes" : "no") +
            " M=" + (om ? "yes" : "no"));
  }

  add("equal_codim", t.r0 != t.r1 || p0 == p1,
      t.r0 == t.r1 ? "r0 == r1 forces P0 == P1" : "codimensions differ");

  {
    const bool ok = is_palindromic(p0, p0.degree()) && is_palindromic(p1, p1.degree()) &&
                    is_palindromic(p, p.degree());
    add("duality", ok, ok ? "" : "a Betti sequence is not palindromic");
  }

  {
    bool ok = true;
    std::string detail = "P is not a projective-space polynomial";
    if (is_cp_poly(p)) {
      ok = is_cp_poly(p0) && is_cp_poly(p1) && extremal;
      detail = ok ? "P, P0, P1 projective with extremal dimensions"
                  : "P projective but fixed sets are not, or dimensions not extremal";
    }
    add("cp_recognizer", ok, detail);
  }

  {
    bool ok = true;
    std::string detail = "not extremal";
    if (extremal) {
      const int d = t.dim();
      ok = d % 2 == 0 &&
           (p == static_cast<const Poly&>(cp_poincare(d / 2)) ||
            p == static_cast<const Poly&>(quadric_poincare(d / 2)));
      detail = ok ? "extremal; P matches a projective or quadric polynomial"
                  : "extremal but P matches neither the projective nor the quadric polynomial";
    }
    add("extremal_flag", ok, detail, CheckStatus::warn);
  }

  {
    std::string detail;
    if (t.r0 == 1 || t.r1 == 1)
      detail = "weight manifold: a fixed component has codimension two";
    else if (extremal && t.dim0() != t.dim1())
      detail = "weight manifold: extremal dimensions with dim M0 != dim M1";
    else if (extremal)
      detail = "not guaranteed: extremal but dim M0 == dim M1";
    else
      detail = "not determined by dimension data";
    add("weight_flag", true, std::move(detail));
  }

  return report;
}

SimpleTriple product_with(const SimpleTriple& t, const PoincarePoly& q, std::string label) {
  if (q.is_zero()) throw DomainError("product_with: factor must be nonzero");
  if (q.degree() % 2 != 0)
    throw DomainError("product_with: factor must have even top degree");
  SimpleTriple out;
  out.p0 = PoincarePoly(t.p0.poly() * q.poly());
  out.p1 = PoincarePoly(t.p1.poly() * q.poly());
  out.p = PoincarePoly(t.p.poly() * q.poly());
  out.r0 = t.r0;
  out.r1 = t.r1;
  out.label = label.empty() ? t.label + " x factor" : std::move(label);
  return out;
}

SimpleTriple weight_cut_model(const PoincarePoly& p0, int r0, std::string label) {
  if (p0.is_zero()) throw DomainError("weight_cut_model: P0 must be nonzero");
  if (r0 < 1) throw DomainError("weight_cut_model: rank must be positive");
  SimpleTriple out;
  out.p0 = p0;
  out.p1 = PoincarePoly(p0.poly() * cp_poincare(r0 - 1).poly());
  out.p = PoincarePoly(p0.poly() * cp_poincare(r0).poly());
  out.r0 = r0;
  out.r1 = 1;
  out.label = std::move(label);
  return out;
}

SimpleTriple grassmann_triple(int r, int k) {
  if (r < 2 || k < 1 || k > r - 1)
    throw DomainError("grassmann_triple: need r >= 2 and 1 <= k <= r-1");
  SimpleTriple out;
  out.p = gauss_binomial(r, k);
  // Pascal decomposition [r,k] = [r-1,k] + q^{r-k} [r-1,k-1] is exactly the
  // Morse-Bott equality; codimension bookkeeping fixes which summand sits
  // at which end of the moment segment.
  out.p0 = gauss_binomial(r - 1, k);
  out.r0 = k;
  out.p1 = gauss_binomial(r - 1, k - 1);
  out.r1 = r - k;
  std::ostringstream os;
  os << "grassmann(" << r << "," << k << ")";
  out.label = os.str();
  return out;
}

std::pair<Character, Rat> residual_character(const std::vector<Rat>& direction) {
  if (direction.empty()) throw ZeroDirection("residual_character: empty direction");

  Int den_lcm = 1;
  for (const Rat& x : direction) den_lcm = lcm(den_lcm, denominator(x));

  std::vector<Int> scaled(direction.size());
  Int g = 0;
  for (size_t i = 0; i < direction.size(); ++i) {
    scaled[i] = numerator(direction[i]) * (den_lcm / denominator(direction[i]));
    g = gcd(g, scaled[i]);
  }
  if (g == 0) throw ZeroDirection("residual_character: zero direction");

  Character chi;
  chi.components.resize(scaled.size());
  for (size_t i = 0; i < scaled.size(); ++i) chi.components[i] = scaled[i] / g;
  chi.primitive = true;
  return {std::move(chi), Rat(g, den_lcm)};
}

}  // namespace hamedge
