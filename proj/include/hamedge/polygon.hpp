#pragma once

#include "hamedge/numeric.hpp"

#include <string>
#include <vector>

namespace hamedge {

// Side lengths of a spatial polygon: positive rationals kept in
// nondecreasing order. Indices are 1-based by default; vectors carrying an
// extra tiny edge use the 0-based convention, with the tiny edge at
// position 0.
class LengthVector {
 public:
  explicit LengthVector(std::vector<Rat> entries, int index_origin = 1);

  int size() const { return static_cast<int>(alpha_.size()); }
  int index_origin() const { return index_origin_; }

  // Entry at a user-facing index (respects the index origin).
  const Rat& at(int index) const;
  // Entry at a 0-based position.
  const Rat& pos(int position) const { return alpha_[check_pos(position)]; }
  const std::vector<Rat>& entries() const { return alpha_; }
  Rat sum() const;

  int to_pos(int index) const { return check_pos(index - index_origin_); }

  std::string str() const;

  friend bool operator==(const LengthVector& a, const LengthVector& b) {
    return a.alpha_ == b.alpha_;
  }

 private:
  int check_pos(int position) const;
  std::vector<Rat> alpha_;
  int index_origin_;
};

// True iff no signed combination sum(eps_i * alpha_i) with eps_i = +-1
// vanishes. Exact arithmetic; enumeration uses the eps <-> -eps symmetry
// (2^{n-1} sums via a Gray code). Throws TooLarge for n > 30.
bool is_generic(const LengthVector& alpha);

// Minimum of |sum(eps_i * alpha_i)| over all sign vectors. Any single-entry
// perturbation strictly below this margin keeps the vector generic.
// Throws NotGeneric when the margin is zero.
Rat genericity_margin(const LengthVector& alpha);

// alpha with entry j shifted by delta, re-sorted into nondecreasing order.
// Throws NonPositiveLength when alpha_j + delta <= 0.
LengthVector perturb(const LengthVector& alpha, int j, const Rat& delta);

// Prepends a tiny edge: (eps, alpha_1, ..., alpha_n), 0-indexed. Requires
// eps < genericity_margin(alpha) and eps <= alpha_1; the result is generic.
LengthVector add_tiny_edge(const LengthVector& alpha, const Rat& eps);

enum class ChamberKind { CPn3, CutOfCPn2, Unclassified, NonGeneric };

std::string to_string(ChamberKind k);

struct ChamberResult {
  ChamberKind kind = ChamberKind::Unclassified;
  Rat ell;         // residual circle size, when classified
  Rat slice_size;  // CutOfCPn2 only
  std::string detail;
};

// Chamber test for the projective model: alpha_n < sum_{i<n} alpha_i and
// alpha_n + alpha_1 > sum_{i=2}^{n-1} alpha_i. On success the polygon space
// is the projective space of complex dimension n-3 scaled by
// ell = alpha_1 + ... + alpha_{n-1} - alpha_n. Requires n >= 4 and a
// generic vector (NotGeneric otherwise).
ChamberResult chamber_cpn(const LengthVector& alpha);

// Chamber test for the cut model on a 0-indexed vector (alpha_0, ...,
// alpha_n): alpha_n + alpha_0 < sum_{i<n} alpha_i and
// alpha_n + alpha_1 > sum_{i=2}^{n-1} alpha_i, with the tail
// (alpha_1..alpha_n) in the projective chamber and alpha_0 tiny for it.
// On success ell = alpha_0 + ... + alpha_{n-1} - alpha_n and the cut slice
// has size ell - 2 alpha_0.
ChamberResult chamber_cut(const LengthVector& alpha);

// CLI-facing classification: reports NonGeneric instead of throwing, and
// dispatches on the index origin.
ChamberResult classify_chamber(const LengthVector& alpha);

struct RatInterval {
  Rat lo, hi;
  bool empty = false;
  Rat length() const { return empty ? Rat(0) : Rat(hi - lo); }
};

// The achievable values of |rho_i + rho_j| over closed configurations:
//   [ max(|a_i - a_j|, 2*max_{k != i,j} a_k - sum_{k != i,j} a_k),
//     min(a_i + a_j, sum_{k != i,j} a_k) ]
// from the triangle constraints on the pair and on the complementary
// chain. Indices follow the vector's origin; needs at least one
// complementary edge.
RatInterval phi_image_analytic(const LengthVector& alpha, int i, int j);

}  // namespace hamedge
