#pragma once

#include "hamedge/numeric.hpp"
#include "hamedge/polygon.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace hamedge {

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// A degree-two cohomology class written in a labeled rational basis. No
// relations between basis classes are imposed.
struct H2Class {
  std::vector<std::string> basis;
  RatVec coords;

  H2Class() = default;
  H2Class(std::vector<std::string> basis_labels, RatVec coordinates);

  bool is_zero() const;
  bool same_basis(const H2Class& other) const { return basis == other.basis; }
  std::string str() const;

  friend bool operator==(const H2Class& a, const H2Class& b) {
    return a.basis == b.basis && a.coords == b.coords;
  }
};

// The affine family of reduced symplectic classes over a moment interval:
// lambda |-> base + lambda * slope for lambda in [0, ell]. The slope is the
// Euler class of the level circle bundle.
struct DHPath {
  H2Class base;
  H2Class slope;
  Rat ell;

  DHPath(H2Class base_class, H2Class slope_class, Rat t_size);
};

// Evaluates the path; throws OutOfDomain for lambda outside [0, ell].
H2Class dh_class_at(const DHPath& path, const Rat& lam);

// Recovers the slope from two samples: (c2 - c1) / (lam2 - lam1), exact.
H2Class euler_from_slope(const H2Class& c1, const Rat& lam1, const H2Class& c2, const Rat& lam2);

// The reduced class of a polygon space at lambda = 0: coordinates are the
// side lengths over the given basis labels.
H2Class omega0_from_lengths(const LengthVector& alpha, std::vector<std::string> basis);

// Rank-one test: returns s with e = s * omega0 when the two classes are
// linearly dependent, nullopt otherwise. omega0 must be nonzero.
std::optional<Rat> linear_dependence(const H2Class& omega0, const H2Class& e);

// The rescaling factor 1 + s*ell carried by the far fixed component when
// the Euler class is s times the symplectic class. Requires 1 + lambda*s
// to stay positive on [0, ell]; otherwise the path would pass through a
// vanishing class (DegeneratePath).
Rat scale_factor(const Rat& s, const Rat& ell);

}  // namespace hamedge
