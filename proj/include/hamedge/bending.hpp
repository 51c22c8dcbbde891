#pragma once

#include "hamedge/polygon.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace hamedge {

// A closed spatial polygon: n vectors with prescribed norms and
// (near-)zero sum. Value type; all simulator operations return copies.
struct Config {
  std::vector<Eigen::Vector3d> rho;
  std::vector<double> alpha;  // target norms
  int index_origin = 1;
  double closure_tol = 1e-10;
  double norm_tol = 1e-10;

  int n() const { return static_cast<int>(rho.size()); }
  Eigen::Vector3d closure() const;
  double max_norm_error() const;
  bool within_tolerances() const;

  int to_pos(int index) const;
};

struct SampleOptions {
  double closure_tol = 1e-10;
  int max_iters = 10000;
  int max_restarts = 32;
};

// Draws a random closed configuration with the given side lengths:
// random unit directions, then alternating closure correction and
// re-projection onto the target norms. Deterministic given the seed;
// restarts derive fresh streams. Requires a generic length vector with at
// least three sides.
Config sample_config(const LengthVector& alpha, std::uint64_t seed,
                     const SampleOptions& options = {});

// Rotates the configuration so the first edge points along +z and the
// first non-parallel edge lies in the xz-halfplane with x >= 0. Pairwise
// inner products are preserved.
Config gauge_fix(const Config& c);

// Moment value of the bending circle action on the pair (i, j).
double phi(const Config& c, int i, int j);

// Rotates rho_i and rho_j by theta about their sum. The axis degenerates
// exactly where the bending flow is singular (UndefinedAxis).
Config bend(const Config& c, int i, int j, double theta);

// True iff the complementary edges {rho_k : k != i, j} span a
// one-dimensional space up to the tolerance (second singular value
// relative to the first).
bool is_critical(const Config& c, int i, int j, double tol);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
};

struct EstimateOptions {
  int refine_steps = 200;  // golden-section searches per sample
  int golden_iters = 16;
  int threads = 0;  // 0 = hardware concurrency
  SampleOptions sample;
};

// Monte-Carlo estimate of the image of the bending moment map: samples
// n_samples configurations (per-sample streams derived from seed + index)
// and pushes each toward both ends of the image with golden-section line
// searches along single-bend directions. The reduction is a min/max, so
// the result is independent of the thread partition.
Interval estimate_phi_image(const LengthVector& alpha, int i, int j, int n_samples,
                            std::uint64_t seed, const EstimateOptions& options = {});

}  // namespace hamedge
