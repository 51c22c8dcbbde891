#include "hamedge/poly.hpp"

#include "hamedge/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace hamedge {

Poly::Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(Int c) { return Poly(std::vector<Int>{std::move(c)}); }

Poly Poly::monomial(Int c, int degree) {
  if (degree < 0) throw DomainError("monomial: negative degree");
  std::vector<Int> v(static_cast<size_t>(degree) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

Poly Poly::one_minus_t(int e) {
  if (e <= 0) throw DomainError("one_minus_t: exponent must be positive");
  std::vector<Int> v(static_cast<size_t>(e) + 1);
  v[0] = 1;
  v.back() = -1;
  return Poly(std::move(v));
}

Int Poly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(d)];
}

bool Poly::nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
}

bool Poly::has_odd_term() const {
  for (size_t d = 1; d < coeffs_.size(); d += 2)
    if (coeffs_[d] != 0) return true;
  return false;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw DomainError("shifted: negative shift");
  if (is_zero()) return {};
  std::vector<Int> v(coeffs_.size() + static_cast<size_t>(k));
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
  return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t d = 0; d < v.size(); ++d) {
    if (d < a.coeffs_.size()) v[d] += a.coeffs_[d];
    if (d < b.coeffs_.size()) v[d] += b.coeffs_[d];
  }
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Int> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t d = 0; d < v.size(); ++d) {
    if (d < a.coeffs_.size()) v[d] += a.coeffs_[d];
    if (d < b.coeffs_.size()) v[d] -= b.coeffs_[d];
  }
  return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Int& c, const Poly& p) {
  std::vector<Int> v(p.coeffs_);
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t d = 0; d < coeffs_.size(); ++d) {
    const Int& c = coeffs_[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Int a = abs(c);
    if (d == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str();
      os << "t";
      if (d > 1) os << "^" << d;
    }
  }
  return os.str();
}

std::optional<Poly> try_exact_div(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DomainError("exact_div: division by zero polynomial");
  if (num.is_zero()) return Poly{};
  const int dd = den.degree();
  if (num.degree() < dd) return std::nullopt;

  std::vector<Int> rem(num.coeffs());
  const Int& lead = den.coeff(dd);
  std::vector<Int> q(static_cast<size_t>(num.degree() - dd) + 1);
  for (int d = num.degree(); d >= dd; --d) {
    Int& r = rem[static_cast<size_t>(d)];
    if (r == 0) continue;
    Int c = r / lead;
    if (c * lead != r) return std::nullopt;
    q[static_cast<size_t>(d - dd)] = c;
    for (int k = 0; k <= dd; ++k) rem[static_cast<size_t>(d - dd + k)] -= c * den.coeff(k);
  }
  for (const Int& r : rem)
    if (r != 0) return std::nullopt;
  return Poly(std::move(q));
}

Poly exact_div(const Poly& num, const Poly& den) {
  auto q = try_exact_div(num, den);
  if (!q) throw NotDivisible("(" + num.str() + ") is not divisible by (" + den.str() + ")");
  return *std::move(q);
}

bool is_palindromic(const Poly& p, int top_degree) {
  if (p.degree() > top_degree) return false;
  for (int d = 0; d <= top_degree; ++d)
    if (p.coeff(d) != p.coeff(top_degree - d)) return false;
  return true;
}

PoincarePoly::PoincarePoly() = default;

PoincarePoly::PoincarePoly(Poly p) : poly_(std::move(p)) {
  if (!poly_.nonnegative())
    throw NegativeBetti("negative coefficient in " + poly_.str());
}

PoincarePoly::PoincarePoly(std::initializer_list<Int> coeffs) : PoincarePoly(Poly(coeffs)) {}

PoincarePoly cp_poincare(int n) {
  if (n < 0) throw DomainError("cp_poincare: n must be nonnegative");
  std::vector<Int> v(static_cast<size_t>(2 * n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<size_t>(2 * i)] = 1;
  return PoincarePoly(Poly(std::move(v)));
}

PoincarePoly gauss_binomial(int r, int k) {
  if (r < 0 || k < 0 || k > r)
    throw DomainError("gauss_binomial: need 0 <= k <= r");
  // Row-by-row Pascal table in q = t^2:
  //   [m, j] = [m-1, j] + q^{m-j} [m-1, j-1]
  // stays inside Z[t] throughout, unlike q-factorial division.
  std::vector<Poly> row(static_cast<size_t>(k) + 1);
  row[0] = Poly::constant(1);
  for (int m = 1; m <= r; ++m) {
    for (int j = std::min(k, m); j >= 1; --j)
      row[static_cast<size_t>(j)] =
          row[static_cast<size_t>(j)] + row[static_cast<size_t>(j - 1)].shifted(2 * (m - j));
  }
  return PoincarePoly(row[static_cast<size_t>(k)]);
}

PoincarePoly quadric_poincare(int m) {
  if (m < 1) throw DomainError("quadric_poincare: m must be positive");
  std::vector<Int> v(static_cast<size_t>(2 * m) + 1);
  for (int i = 0; i <= m; ++i) v[static_cast<size_t>(2 * i)] = 1;
  if (m % 2 == 0) v[static_cast<size_t>(m)] += 1;
  return PoincarePoly(Poly(std::move(v)));
}

}  // namespace hamedge
