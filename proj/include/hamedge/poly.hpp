#pragma once

#include "hamedge/numeric.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace hamedge {

// Integer-coefficient polynomial in one variable t, indexed by cohomological
// degree. This is the raw arithmetic value: coefficients may be negative
// (e.g. 1 - t^{2r}) and no positivity is enforced. Trailing zeros are
// trimmed; the zero polynomial has an empty coefficient list.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);
  Poly(std::initializer_list<Int> coeffs);

  static Poly constant(Int c);
  static Poly monomial(Int c, int degree);
  // 1 - t^e, the factor appearing in the fixed-set equations.
  static Poly one_minus_t(int e);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  // Coefficient of t^d; zero outside the stored range.
  Int coeff(int d) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool nonnegative() const;
  bool has_odd_term() const;

  // Multiplication by t^k.
  Poly shifted(int k) const;

  std::string str() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Int& c, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Int> coeffs_;
};

// Exact division in Z[t]: returns q with q*den == num, or nullopt when no
// such integer polynomial exists. Division by zero is a DomainError.
std::optional<Poly> try_exact_div(const Poly& num, const Poly& den);

// Throwing variant; NotDivisible signals that the candidate data cannot
// come from a manifold triple.
Poly exact_div(const Poly& num, const Poly& den);

// coeffs[d] == coeffs[top_degree - d] for all d (Poincare duality shape).
bool is_palindromic(const Poly& p, int top_degree);

// A polynomial checked to have only nonnegative coefficients, i.e. a
// plausible Poincare polynomial. Construction throws NegativeBetti
// otherwise; arithmetic happens on the underlying raw value.
class PoincarePoly {
 public:
  PoincarePoly();  // the zero polynomial
  explicit PoincarePoly(Poly p);
  PoincarePoly(std::initializer_list<Int> coeffs);

  const Poly& poly() const { return poly_; }
  operator const Poly&() const { return poly_; }

  int degree() const { return poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }
  Int coeff(int d) const { return poly_.coeff(d); }
  std::string str() const { return poly_.str(); }

  friend bool operator==(const PoincarePoly& a, const PoincarePoly& b) {
    return a.poly_ == b.poly_;
  }
  friend bool operator!=(const PoincarePoly& a, const PoincarePoly& b) { return !(a == b); }

 private:
  Poly poly_;
};

// Poincare polynomial of CP^n: 1 + t^2 + ... + t^{2n}.
PoincarePoly cp_poincare(int n);

// Gaussian binomial [r choose k]_q evaluated at q = t^2; the Poincare
// polynomial of the Grassmannian of complex k-planes in C^r. Computed by
// the Pascal recursion, which never leaves Z[t].
PoincarePoly gauss_binomial(int r, int k);

// Poincare polynomial of the oriented two-plane Grassmannian of R^{m+2}
// (the real quadric of real dimension 2m): sum of t^{2i} for i = 0..m,
// with the middle coefficient doubled when m is even.
PoincarePoly quadric_poincare(int m);

}  // namespace hamedge
