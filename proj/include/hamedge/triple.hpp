#pragma once

#include "hamedge/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hamedge {

// Candidate data for a closed symplectic manifold with a Hamiltonian torus
// action whose fixed set has exactly two components: the three Poincare
// polynomials plus the half-codimensions r0, r1 of the fixed components.
// Dimension bookkeeping is derived: dim = deg(P0) + 2*r0, and the two
// fixed-set dimensions follow.
struct SimpleTriple {
  PoincarePoly p0, p1, p;
  int r0 = 1;
  int r1 = 1;
  std::string label;

  int dim0() const { return p0.degree(); }
  int dim() const { return dim0() + 2 * r0; }
  int dim1() const { return dim() - 2 * r1; }
};

// Solves the two fixed-set equations for P1 and P given P0 and the
// half-codimensions:
//   (1 - t^{2 r1}) P1 = (1 - t^{2 r0}) P0
//   (1 - t^{2 r1}) P  = (1 - t^{2(r0+r1)}) P0
// Throws NotDivisible when no polynomial solution exists, NegativeBetti
// when the solution has a negative coefficient, and DimensionBound when
// the solution would force a zero Betti number below the top degree
// (impossible for a closed symplectic manifold, which has nonvanishing
// classes [w]^k in every even degree). Each error means the input data
// cannot be realized.
SimpleTriple solve_triple(const PoincarePoly& p0, int r0, int r1, std::string label = {});

enum class CheckStatus { pass, warn, fail };

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool all_passed() const;  // no entry with status fail
  int failures() const;
  const CheckEntry* find(const std::string& name) const;
};

// Runs the full consistency suite on a triple. Never throws: violations
// become report entries. Checks, in order:
//   morse_bott_0   P == P0 + t^{2 r1} P1
//   morse_bott_1   P == t^{2 r0} P0 + P1
//   dim_bound      dim M <= dim M0 + dim M1 + 2
//   h1_equal       coefficient of t^1 agrees across P0, P1, P
//   odd_parity     P0 has odd terms <=> P1 does <=> P does
//   equal_codim    r0 == r1 implies P0 == P1
//   duality        each polynomial palindromic at its own top degree
//   cp_recognizer  if P is a projective-space polynomial, so are P0, P1,
//                  and the dimensions are extremal
//   extremal_flag  if dim M == dim M0 + dim M1 + 2, warn unless P is the
//                  projective-space or quadric polynomial of that dimension
//   weight_flag    informational: whether the normal bundles are forced to
//                  be single weight bundles
CheckReport suite_check(const SimpleTriple& t);

// Crossing with a fixed symplectic factor of Poincare polynomial q: all
// three polynomials are multiplied, the codimensions are unchanged.
// q must be nonzero with even top degree.
SimpleTriple product_with(const SimpleTriple& t, const PoincarePoly& q, std::string label = {});

// The rank-r0 cut model over a base with Poincare polynomial p0: the level
// hypersurface has codimension two (r1 = 1), and additively
//   P1 = P0 * cp(r0 - 1),  P = P0 * cp(r0).
SimpleTriple weight_cut_model(const PoincarePoly& p0, int r0, std::string label = {});

// The Grassmannian of complex k-planes in C^r with the last-coordinate
// circle action. Fixed-set polynomials are the two Pascal summands of
// [r choose k]_q; labels are assigned by codimension bookkeeping.
SimpleTriple grassmann_triple(int r, int k);

// Element of the weight lattice of the torus.
struct Character {
  std::vector<Int> components;
  bool primitive = false;  // gcd of components == 1

  friend bool operator==(const Character& a, const Character& b) {
    return a.components == b.components;
  }
};

// Extracts from a nonzero rational direction the unique primitive integer
// vector chi that is a positive multiple of it, together with the scale
// lambda > 0 such that direction = lambda * chi.
std::pair<Character, Rat> residual_character(const std::vector<Rat>& direction);

}  // namespace hamedge
