#include "hamedge/polygon.hpp"

#include "hamedge/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace hamedge {

namespace {

constexpr int kGenericityCap = 30;

// Scales the entries to a common denominator so the Gray-code walk runs on
// integers. Returns the scaled entries; genericity and the argmin of
// |signed sum| are invariant under the scaling.
std::vector<Int> integer_scaled(const std::vector<Rat>& alpha, Int* scale_out) {
  Int den_lcm = 1;
  for (const Rat& a : alpha) den_lcm = lcm(den_lcm, denominator(a));
  std::vector<Int> out(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i)
    out[i] = numerator(alpha[i]) * (den_lcm / denominator(alpha[i]));
  if (scale_out) *scale_out = den_lcm;
  return out;
}

// Walks all sign vectors with the first sign fixed to +1 (the eps <-> -eps
// symmetry halves the work) and returns the minimum |signed sum|.
Int min_abs_signed_sum(const std::vector<Int>& v) {
  const int n = static_cast<int>(v.size());
  Int sum = 0;
  for (const Int& x : v) sum += x;

  Int best = abs(sum);
  if (n <= 1 || best == 0) return best;

  // Gray code over the signs of entries 1..n-1; flipping entry i changes
  // the sum by -2*sign_i*v[i].
  std::vector<int> sign(static_cast<size_t>(n), 1);
  const std::uint64_t steps = (std::uint64_t{1} << (n - 1)) - 1;
  for (std::uint64_t g = 1; g <= steps; ++g) {
    const int bit = std::countr_zero(g);
    const size_t idx = static_cast<size_t>(bit) + 1;
    if (sign[idx] > 0)
      sum -= 2 * v[idx];
    else
      sum += 2 * v[idx];
    sign[idx] = -sign[idx];
    Int a = abs(sum);
    if (a < best) {
      best = std::move(a);
      if (best == 0) return best;
    }
  }
  return best;
}

}  // namespace

LengthVector::LengthVector(std::vector<Rat> entries, int index_origin)
    : alpha_(std::move(entries)), index_origin_(index_origin) {
  if (alpha_.empty()) throw DomainError("length vector must be nonempty");
  if (index_origin_ != 0 && index_origin_ != 1)
    throw DomainError("index origin must be 0 or 1");
  for (const Rat& a : alpha_)
    if (a <= 0) throw NonPositiveLength("side lengths must be positive");
  std::sort(alpha_.begin(), alpha_.end());
}

int LengthVector::check_pos(int position) const {
  if (position < 0 || position >= size())
    throw BadIndices("index out of range for length vector of size " + std::to_string(size()));
  return position;
}

const Rat& LengthVector::at(int index) const { return alpha_[static_cast<size_t>(to_pos(index))]; }

Rat LengthVector::sum() const {
  Rat s = 0;
  for (const Rat& a : alpha_) s += a;
  return s;
}

std::string LengthVector::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << format_rational(alpha_[static_cast<size_t>(i)]);
  }
  os << ")";
  return os.str();
}

bool is_generic(const LengthVector& alpha) {
  if (alpha.size() > kGenericityCap)
    throw TooLarge("genericity enumeration capped at n = " + std::to_string(kGenericityCap));
  return min_abs_signed_sum(integer_scaled(alpha.entries(), nullptr)) != 0;
}

Rat genericity_margin(const LengthVector& alpha) {
  if (alpha.size() > kGenericityCap)
    throw TooLarge("genericity enumeration capped at n = " + std::to_string(kGenericityCap));
  Int scale;
  const Int m = min_abs_signed_sum(integer_scaled(alpha.entries(), &scale));
  if (m == 0) throw NotGeneric("margin is zero: " + alpha.str() + " is not generic");
  return Rat(m, scale);
}

LengthVector perturb(const LengthVector& alpha, int j, const Rat& delta) {
  const int pos = alpha.to_pos(j);
  std::vector<Rat> v = alpha.entries();
  v[static_cast<size_t>(pos)] += delta;
  if (v[static_cast<size_t>(pos)] <= 0)
    throw NonPositiveLength("perturbation makes entry " + std::to_string(j) + " nonpositive");
  return LengthVector(std::move(v), alpha.index_origin());
}

LengthVector add_tiny_edge(const LengthVector& alpha, const Rat& eps) {
  if (eps <= 0) throw NotTiny("tiny edge must have positive length");
  if (eps > alpha.pos(0))
    throw NotTiny("tiny edge exceeds the shortest side");
  const Rat margin = genericity_margin(alpha);
  if (eps >= margin)
    throw NotTiny("tiny edge must be strictly below the genericity margin " +
                  format_rational(margin));
  std::vector<Rat> v;
  v.reserve(static_cast<size_t>(alpha.size()) + 1);
  v.push_back(eps);
  for (const Rat& a : alpha.entries()) v.push_back(a);
  return LengthVector(std::move(v), 0);
}

std::string to_string(ChamberKind k) {
  switch (k) {
    case ChamberKind::CPn3: return "cpn3";
    case ChamberKind::CutOfCPn2: return "cut-of-cpn2";
    case ChamberKind::Unclassified: return "unclassified";
    case ChamberKind::NonGeneric: return "non-generic";
  }
  return "unknown";
}

ChamberResult chamber_cpn(const LengthVector& alpha) {
  const int n = alpha.size();
  if (n < 4) throw DomainError("chamber_cpn: need at least four sides");
  if (!is_generic(alpha)) throw NotGeneric("chamber_cpn: " + alpha.str() + " is not generic");

  const Rat an = alpha.pos(n - 1);
  const Rat a1 = alpha.pos(0);
  const Rat total = alpha.sum();
  const Rat head = total - an;          // alpha_1 + ... + alpha_{n-1}
  const Rat mid_sum = total - a1 - an;  // alpha_2 + ... + alpha_{n-1}

  ChamberResult res;
  if (!(an < head)) {
    res.kind = ChamberKind::Unclassified;
    res.detail = "longest side dominates: closure inequality fails";
    return res;
  }
  if (!(an + a1 > mid_sum)) {
    res.kind = ChamberKind::Unclassified;
    res.detail = "second chamber inequality fails";
    return res;
  }
  res.kind = ChamberKind::CPn3;
  res.ell = head - an;
  res.detail = "projective chamber, ell = " + format_rational(res.ell);
  return res;
}

ChamberResult chamber_cut(const LengthVector& alpha) {
  const int count = alpha.size();
  if (count < 5) throw DomainError("chamber_cut: need at least five sides");
  if (!is_generic(alpha)) throw NotGeneric("chamber_cut: " + alpha.str() + " is not generic");

  // Entries are (alpha_0, ..., alpha_n) with the tiny candidate first.
  const int n = count - 1;
  const Rat a0 = alpha.pos(0);
  const Rat a1 = alpha.pos(1);
  const Rat an = alpha.pos(n);
  const Rat total = alpha.sum();

  ChamberResult res;
  res.kind = ChamberKind::Unclassified;

  // The tail must sit in the projective chamber with alpha_0 tiny for it.
  std::vector<Rat> tail(alpha.entries().begin() + 1, alpha.entries().end());
  LengthVector beta(std::move(tail), 1);
  if (!is_generic(beta)) {
    res.detail = "tail " + beta.str() + " is not generic, so no edge is tiny for it";
    return res;
  }
  if (a0 >= genericity_margin(beta)) {
    res.detail = "leading edge is not tiny for the tail " + beta.str();
    return res;
  }
  if (chamber_cpn(beta).kind != ChamberKind::CPn3) {
    res.detail = "tail is outside the projective chamber";
    return res;
  }
  if (!(an + a0 < total - an)) {
    res.detail = "longest side dominates: closure inequality fails";
    return res;
  }
  const Rat mid_sum = total - a0 - a1 - an;  // alpha_2 + ... + alpha_{n-1}
  if (!(an + a1 > mid_sum)) {
    res.detail = "second chamber inequality fails";
    return res;
  }

  res.kind = ChamberKind::CutOfCPn2;
  res.ell = total - an - an;
  res.slice_size = res.ell - 2 * a0;
  res.detail = "cut chamber, ell = " + format_rational(res.ell) +
               ", slice = " + format_rational(res.slice_size);
  return res;
}

ChamberResult classify_chamber(const LengthVector& alpha) {
  ChamberResult res;
  if (!is_generic(alpha)) {
    res.kind = ChamberKind::NonGeneric;
    res.detail = alpha.str() + " admits an aligned configuration";
    return res;
  }
  if (alpha.index_origin() == 0) {
    if (alpha.size() >= 5) return chamber_cut(alpha);
    res.detail = "too few sides for the cut chamber";
    return res;
  }
  if (alpha.size() >= 4) return chamber_cpn(alpha);
  res.detail = "too few sides for the projective chamber";
  return res;
}

RatInterval phi_image_analytic(const LengthVector& alpha, int i, int j) {
  if (i == j) throw BadIndices("phi_image_analytic: need i != j");
  const int pi = alpha.to_pos(i);
  const int pj = alpha.to_pos(j);
  const int n = alpha.size();
  if (n < 3) throw BadIndices("phi_image_analytic: need at least one complementary edge");

  const Rat& ai = alpha.pos(pi);
  const Rat& aj = alpha.pos(pj);
  Rat rest_sum = 0;
  Rat rest_max = 0;
  for (int k = 0; k < n; ++k) {
    if (k == pi || k == pj) continue;
    rest_sum += alpha.pos(k);
    rest_max = std::max(rest_max, alpha.pos(k));
  }

  const Rat pair_lo = abs(Rat(ai - aj));
  const Rat chain_lo = 2 * rest_max - rest_sum;
  const Rat pair_hi = ai + aj;

  RatInterval out;
  out.lo = std::max(pair_lo, chain_lo);
  out.hi = std::min(pair_hi, rest_sum);
  out.empty = out.lo > out.hi;
  return out;
}

}  // namespace hamedge
