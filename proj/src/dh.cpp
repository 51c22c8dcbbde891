#include "hamedge/dh.hpp"

#include "hamedge/errors.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace hamedge {

H2Class::H2Class(std::vector<std::string> basis_labels, RatVec coordinates)
    : basis(std::move(basis_labels)), coords(std::move(coordinates)) {
  if (static_cast<Eigen::Index>(basis.size()) != coords.size())
    throw SizeMismatch("H2Class: " + std::to_string(basis.size()) + " labels vs " +
                       std::to_string(coords.size()) + " coordinates");
  std::set<std::string> seen(basis.begin(), basis.end());
  if (seen.size() != basis.size()) throw DomainError("H2Class: duplicate basis labels");
}

bool H2Class::is_zero() const {
  for (Eigen::Index k = 0; k < coords.size(); ++k)
    if (coords(k) != 0) return false;
  return true;
}

std::string H2Class::str() const {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index k = 0; k < coords.size(); ++k) {
    if (coords(k) == 0) continue;
    if (!first) os << " + ";
    os << format_rational(coords(k)) << "*" << basis[static_cast<size_t>(k)];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

DHPath::DHPath(H2Class base_class, H2Class slope_class, Rat t_size)
    : base(std::move(base_class)), slope(std::move(slope_class)), ell(std::move(t_size)) {
  if (!base.same_basis(slope)) throw SizeMismatch("DHPath: base and slope bases differ");
  if (ell <= 0) throw DomainError("DHPath: the moment interval must have positive length");
}

H2Class dh_class_at(const DHPath& path, const Rat& lam) {
  if (lam < 0 || lam > path.ell)
    throw OutOfDomain("dh_class_at: lambda = " + format_rational(lam) + " outside [0, " +
                      format_rational(path.ell) + "]");
  return H2Class(path.base.basis, path.base.coords + lam * path.slope.coords);
}

H2Class euler_from_slope(const H2Class& c1, const Rat& lam1, const H2Class& c2, const Rat& lam2) {
  if (!c1.same_basis(c2)) throw SizeMismatch("euler_from_slope: bases differ");
  if (lam1 == lam2) throw DegenerateSamples("euler_from_slope: equal sample parameters");
  const Rat inv = Rat(1) / (lam2 - lam1);
  return H2Class(c1.basis, inv * (c2.coords - c1.coords));
}

H2Class omega0_from_lengths(const LengthVector& alpha, std::vector<std::string> basis) {
  if (static_cast<int>(basis.size()) != alpha.size())
    throw SizeMismatch("omega0_from_lengths: " + std::to_string(basis.size()) + " labels for " +
                       std::to_string(alpha.size()) + " sides");
  RatVec coords(alpha.size());
  for (int k = 0; k < alpha.size(); ++k) coords(k) = alpha.pos(k);
  return H2Class(std::move(basis), std::move(coords));
}

std::optional<Rat> linear_dependence(const H2Class& omega0, const H2Class& e) {
  if (!omega0.same_basis(e)) throw SizeMismatch("linear_dependence: bases differ");
  if (omega0.is_zero()) throw ZeroOmega("linear_dependence: omega0 is zero");

  Eigen::Index pivot = 0;
  while (omega0.coords(pivot) == 0) ++pivot;
  const Rat s = e.coords(pivot) / omega0.coords(pivot);
  for (Eigen::Index k = 0; k < omega0.coords.size(); ++k)
    if (e.coords(k) != s * omega0.coords(k)) return std::nullopt;
  return s;
}

Rat scale_factor(const Rat& s, const Rat& ell) {
  if (ell <= 0) throw DomainError("scale_factor: ell must be positive");
  // 1 + lambda*s is affine in lambda, so positivity on [0, ell] reduces to
  // the endpoints; the left endpoint gives 1 > 0.
  const Rat factor = 1 + s * ell;
  if (factor <= 0)
    throw DegeneratePath("scale_factor: 1 + lambda*s vanishes on the interval (factor " +
                         format_rational(factor) + ")");
  return factor;
}

}  // namespace hamedge
