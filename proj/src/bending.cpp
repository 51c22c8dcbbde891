#include "hamedge/bending.hpp"

#include "hamedge/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>
#include <utility>

namespace hamedge {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double unit_double(std::mt19937_64& rng) {
  // 53 random bits in [0, 1); avoids distribution objects so streams are
  // identical across standard library implementations.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  const double z = 2.0 * unit_double(rng) - 1.0;
  const double phi_angle = kTwoPi * unit_double(rng);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi_angle), r * std::sin(phi_angle), z};
}

// Axis-angle rotation of v about the unit vector u.
Eigen::Vector3d rotate_about(const Eigen::Vector3d& u, double cos_t, double sin_t,
                             const Eigen::Vector3d& v) {
  return v * cos_t + u.cross(v) * sin_t + u * (u.dot(v) * (1.0 - cos_t));
}

double phi_pos(const Config& c, int pi, int pj) {
  return (c.rho[static_cast<size_t>(pi)] + c.rho[static_cast<size_t>(pj)]).norm();
}

struct BendMove {
  int k, l;
};

// Single-bend moves that can change phi_{pi,pj}: pairs sharing exactly one
// index with {pi, pj}.
std::vector<BendMove> bend_moves(int n, int pi, int pj) {
  std::vector<BendMove> moves;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      const int shared = (k == pi || k == pj ? 1 : 0) + (l == pi || l == pj ? 1 : 0);
      if (shared == 1) moves.push_back({k, l});
    }
  return moves;
}

// Golden-section maximization of f over [lo, hi]; returns the argmax.
template <typename F>
double golden_max(F&& f, double lo, double hi, int iters) {
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? x1 : x2;
}

// Pushes phi_{pi,pj} up (direction +1) or down (-1) with line searches
// along the given bend moves, mutating the configuration.
void refine(Config& c, int pi, int pj, const std::vector<BendMove>& moves, int direction,
            int steps, int golden_iters) {
  const double sign = static_cast<double>(direction);
  for (int s = 0; s < steps; ++s) {
    const BendMove mv = moves[static_cast<size_t>(s) % moves.size()];
    Eigen::Vector3d axis = c.rho[static_cast<size_t>(mv.k)] + c.rho[static_cast<size_t>(mv.l)];
    const double na = axis.norm();
    if (na <= 1e-12) continue;  // singular bend
    const Eigen::Vector3d u = axis / na;

    const int shared = (mv.k == pi || mv.k == pj) ? mv.k : mv.l;
    const int other = (shared == pi) ? pj : pi;
    const Eigen::Vector3d v = c.rho[static_cast<size_t>(shared)];
    const Eigen::Vector3d w = u.cross(v);
    const Eigen::Vector3d rest = c.rho[static_cast<size_t>(other)];
    const double ud = u.dot(v);

    auto objective = [&](double theta) {
      const double ct = std::cos(theta), st = std::sin(theta);
      const Eigen::Vector3d moved = v * ct + w * st + u * (ud * (1.0 - ct));
      return sign * (moved + rest).norm();
    };

    const double current = objective(0.0);
    const double theta = golden_max(objective, 0.0, kTwoPi, golden_iters);
    if (objective(theta) > current) {
      const double ct = std::cos(theta), st = std::sin(theta);
      c.rho[static_cast<size_t>(mv.k)] = rotate_about(u, ct, st, c.rho[static_cast<size_t>(mv.k)]);
      c.rho[static_cast<size_t>(mv.l)] = rotate_about(u, ct, st, c.rho[static_cast<size_t>(mv.l)]);
    }
  }
}

}  // namespace

Eigen::Vector3d Config::closure() const {
  Eigen::Vector3d s = Eigen::Vector3d::Zero();
  for (const auto& r : rho) s += r;
  return s;
}

double Config::max_norm_error() const {
  double worst = 0.0;
  for (size_t k = 0; k < rho.size(); ++k)
    worst = std::max(worst, std::abs(rho[k].norm() - alpha[k]));
  return worst;
}

bool Config::within_tolerances() const {
  return closure().norm() <= closure_tol && max_norm_error() <= norm_tol;
}

int Config::to_pos(int index) const {
  const int position = index - index_origin;
  if (position < 0 || position >= n())
    throw BadIndices("edge index " + std::to_string(index) + " out of range");
  return position;
}

Config sample_config(const LengthVector& alpha, std::uint64_t seed, const SampleOptions& options) {
  const int n = alpha.size();
  if (n < 3) throw DomainError("sample_config: need at least three sides");
  if (!is_generic(alpha)) throw NotGeneric("sample_config: " + alpha.str() + " is not generic");

  Config cfg;
  cfg.index_origin = alpha.index_origin();
  cfg.closure_tol = options.closure_tol;
  cfg.alpha.resize(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) cfg.alpha[static_cast<size_t>(k)] = to_double(alpha.pos(k));
  cfg.rho.resize(static_cast<size_t>(n));

  std::uint64_t sd = seed;
  for (int restart = 0; restart < options.max_restarts; ++restart, sd = splitmix64(sd)) {
    std::mt19937_64 rng(sd);
    for (int k = 0; k < n; ++k)
      cfg.rho[static_cast<size_t>(k)] = cfg.alpha[static_cast<size_t>(k)] * random_unit(rng);

    for (int iter = 0; iter < options.max_iters; ++iter) {
      const Eigen::Vector3d s = cfg.closure();
      if (s.norm() <= options.closure_tol) return cfg;
      const Eigen::Vector3d shift = s / n;
      for (int k = 0; k < n; ++k) {
        Eigen::Vector3d& r = cfg.rho[static_cast<size_t>(k)];
        r -= shift;
        const double nr = r.norm();
        if (nr < 1e-14)
          r = cfg.alpha[static_cast<size_t>(k)] * random_unit(rng);
        else
          r *= cfg.alpha[static_cast<size_t>(k)] / nr;
      }
    }
  }
  throw NonConvergence("sample_config: no closed configuration after " +
                       std::to_string(options.max_restarts) + " restarts");
}

Config gauge_fix(const Config& c) {
  if (c.n() < 2) throw DomainError("gauge_fix: need at least two edges");
  const Eigen::Vector3d& first = c.rho[0];
  const double nw = first.norm();
  if (nw <= 1e-300) throw DegenerateFrame("gauge_fix: first edge vanishes");
  const Eigen::Vector3d w = first / nw;

  Eigen::Vector3d perp = Eigen::Vector3d::Zero();
  bool found = false;
  for (int k = 1; k < c.n(); ++k) {
    const Eigen::Vector3d& r = c.rho[static_cast<size_t>(k)];
    const Eigen::Vector3d q = r - w * w.dot(r);
    if (q.norm() > 1e-12 * (r.norm() + 1.0)) {
      perp = q;
      found = true;
      break;
    }
  }
  if (!found) throw DegenerateFrame("gauge_fix: all edges parallel to the first");

  const Eigen::Vector3d u = perp.normalized();
  const Eigen::Vector3d v = w.cross(u);

  Config out = c;
  for (auto& r : out.rho) r = Eigen::Vector3d(u.dot(r), v.dot(r), w.dot(r));
  return out;
}

double phi(const Config& c, int i, int j) {
  if (i == j) throw BadIndices("phi: need i != j");
  return phi_pos(c, c.to_pos(i), c.to_pos(j));
}

Config bend(const Config& c, int i, int j, double theta) {
  if (i == j) throw BadIndices("bend: need i != j");
  const size_t pi = static_cast<size_t>(c.to_pos(i));
  const size_t pj = static_cast<size_t>(c.to_pos(j));

  const Eigen::Vector3d axis = c.rho[pi] + c.rho[pj];
  const double na = axis.norm();
  if (na <= 1e-12)
    throw UndefinedAxis("bend: rho_i + rho_j vanishes; the flow is singular here");
  const Eigen::Vector3d u = axis / na;

  Config out = c;
  const double ct = std::cos(theta), st = std::sin(theta);
  out.rho[pi] = rotate_about(u, ct, st, c.rho[pi]);
  out.rho[pj] = rotate_about(u, ct, st, c.rho[pj]);
  return out;
}

bool is_critical(const Config& c, int i, int j, double tol) {
  if (i == j) throw BadIndices("is_critical: need i != j");
  const int pi = c.to_pos(i);
  const int pj = c.to_pos(j);
  const int rest = c.n() - 2;
  if (rest < 1) throw BadIndices("is_critical: no complementary edges");
  if (rest == 1) return true;  // a single vector spans at most a line

  Eigen::MatrixXd m(3, rest);
  int col = 0;
  for (int k = 0; k < c.n(); ++k) {
    if (k == pi || k == pj) continue;
    m.col(col++) = c.rho[static_cast<size_t>(k)];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  return sv(1) <= tol * (sv(0) + 1e-300);
}

Interval estimate_phi_image(const LengthVector& alpha, int i, int j, int n_samples,
                            std::uint64_t seed, const EstimateOptions& options) {
  if (n_samples <= 0) throw DomainError("estimate_phi_image: need a positive sample count");
  if (i == j) throw BadIndices("estimate_phi_image: need i != j");
  const int pi = alpha.to_pos(i);
  const int pj = alpha.to_pos(j);
  const int n = alpha.size();
  if (n < 3) throw DomainError("estimate_phi_image: need at least three sides");

  const std::vector<BendMove> moves = bend_moves(n, pi, pj);
  const int up_steps = options.refine_steps / 2;
  const int down_steps = options.refine_steps - up_steps;

  unsigned hw = std::thread::hardware_concurrency();
  int threads = options.threads > 0 ? options.threads : static_cast<int>(hw ? hw : 1);
  threads = std::min<int>(threads, n_samples);

  std::vector<double> mins(static_cast<size_t>(threads));
  std::vector<double> maxs(static_cast<size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));

  auto worker = [&](int t, int lo, int hi) {
    double local_min = std::numeric_limits<double>::infinity();
    double local_max = -std::numeric_limits<double>::infinity();
    try {
      for (int s = lo; s < hi; ++s) {
        Config c = sample_config(alpha, seed + static_cast<std::uint64_t>(s), options.sample);
        const double initial = phi_pos(c, pi, pj);
        local_min = std::min(local_min, initial);
        local_max = std::max(local_max, initial);

        Config ascend = c;
        refine(ascend, pi, pj, moves, +1, up_steps, options.golden_iters);
        local_max = std::max(local_max, phi_pos(ascend, pi, pj));

        refine(c, pi, pj, moves, -1, down_steps, options.golden_iters);
        local_min = std::min(local_min, phi_pos(c, pi, pj));
      }
    } catch (...) {
      errors[static_cast<size_t>(t)] = std::current_exception();
    }
    mins[static_cast<size_t>(t)] = local_min;
    maxs[static_cast<size_t>(t)] = local_max;
  };

  if (threads == 1) {
    worker(0, 0, n_samples);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    const int chunk = (n_samples + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int lo = t * chunk;
      const int hi = std::min(n_samples, lo + chunk);
      pool.emplace_back(worker, t, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  for (auto& err : errors)
    if (err) std::rethrow_exception(err);

  Interval out;
  out.lo = *std::min_element(mins.begin(), mins.end());
  out.hi = *std::max_element(maxs.begin(), maxs.end());
  return out;
}

}  // namespace hamedge
