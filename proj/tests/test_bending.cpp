#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hamedge/bending.hpp"
#include "hamedge/errors.hpp"

#include <cmath>
#include <random>

using namespace hamedge;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

LengthVector lv(std::initializer_list<const char*> tokens, int origin = 1) {
  std::vector<Rat> v;
  for (const char* t : tokens) v.push_back(parse_rational(t));
  return LengthVector(std::move(v), origin);
}

Eigen::MatrixXd gram(const Config& c) {
  const int n = c.n();
  Eigen::MatrixXd g(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g(a, b) = c.rho[a].dot(c.rho[b]);
  return g;
}

// Hand-built closed configuration: rho_i and rho_j realize a prescribed
// pair sum v with the prescribed norms (two-bar linkage).
std::pair<Eigen::Vector3d, Eigen::Vector3d> linkage(const Eigen::Vector3d& v, double len_a,
                                                    double len_b, const Eigen::Vector3d& normal) {
  const double d = v.norm();
  const double along = (d * d + len_a * len_a - len_b * len_b) / (2.0 * d);
  const double off = std::sqrt(std::max(0.0, len_a * len_a - along * along));
  const Eigen::Vector3d vhat = v / d;
  const Eigen::Vector3d nhat = (normal - vhat * vhat.dot(normal)).normalized();
  const Eigen::Vector3d a = along * vhat + off * nhat;
  return {a, v - a};
}

}  // namespace

TEST_CASE("sampling the rigid triangle") {
  const Config c = sample_config(lv({"1", "1", "1"}), 3);
  CHECK(c.within_tolerances());
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) CHECK(phi(c, i, j) == doctest::Approx(1.0).epsilon(1e-9));
  // equilateral: pairwise angles at 120 degrees
  CHECK(c.rho[0].dot(c.rho[1]) == doctest::Approx(-0.5).epsilon(1e-8));
}

TEST_CASE("sampling respects tolerances and is deterministic") {
  const Config a = sample_config(lv({"1", "1", "1", "2"}), 42);
  CHECK(a.closure().norm() <= 1e-10);
  CHECK(a.max_norm_error() <= 1e-10);
  CHECK(a.within_tolerances());

  const Config b = sample_config(lv({"1", "1", "1", "2"}), 42);
  for (int k = 0; k < 4; ++k) CHECK(a.rho[k] == b.rho[k]);

  const Config c = sample_config(lv({"1", "1", "1", "2"}), 43);
  CHECK((a.rho[0] - c.rho[0]).norm() > 1e-6);
}

TEST_CASE("sampling rejects bad input") {
  CHECK_THROWS_AS(sample_config(lv({"1", "1", "1", "1"}), 0), NotGeneric);
  CHECK_THROWS_AS(sample_config(lv({"1", "2"}), 0), DomainError);
}

TEST_CASE("gauge fixing") {
  const Config c = sample_config(lv({"1", "1", "1", "2"}), 7);
  const Config g = gauge_fix(c);

  CHECK(g.rho[0].x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.rho[0].y() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.rho[0].z() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.rho[1].y() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.rho[1].x() >= 0.0);

  CHECK((gram(c) - gram(g)).cwiseAbs().maxCoeff() <= 1e-12);

  const Config gg = gauge_fix(g);
  for (int k = 0; k < g.n(); ++k) CHECK((gg.rho[k] - g.rho[k]).norm() <= 1e-12);

  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      CHECK(std::abs(phi(c, i, j) - phi(g, i, j)) <= 1e-12);

  const Config triangle = gauge_fix(sample_config(lv({"1", "1", "1"}), 1));
  CHECK((triangle.rho[0] - Eigen::Vector3d(0, 0, 1)).norm() <= 1e-12);

  Config degenerate;
  degenerate.alpha = {1, 1};
  degenerate.rho = {Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(0, 0, -1)};
  CHECK_THROWS_AS(gauge_fix(degenerate), DegenerateFrame);
}

TEST_CASE("phi basics") {
  const Config c = sample_config(lv({"1", "1", "1", "2"}), 19);
  const double f = phi(c, 4, 3);
  CHECK(f >= 1.0 - 1e-9);
  CHECK(f <= 2.0 + 1e-9);
  CHECK_THROWS_AS(phi(c, 2, 2), BadIndices);
  CHECK_THROWS_AS(phi(c, 0, 1), BadIndices);

  Config anti;
  anti.alpha = {1, 1, 1, 1};
  anti.rho = {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(-1, 0, 0), Eigen::Vector3d(0, 1, 0),
              Eigen::Vector3d(0, -1, 0)};
  CHECK(phi(anti, 1, 2) == doctest::Approx(0.0));
  CHECK_THROWS_AS(bend(anti, 1, 2, 0.3), UndefinedAxis);
}

TEST_CASE("bending conserves the geometry it must") {
  std::mt19937 rng(71);
  std::uniform_real_distribution<double> angle(-8.0, 8.0);
  const LengthVector vectors[] = {lv({"1", "1", "1", "2"}), lv({"2", "4", "6", "9"}),
                                  lv({"1/4", "1", "1", "1", "2"}, 0)};
  for (int trial = 0; trial < 200; ++trial) {
    const LengthVector& alpha = vectors[trial % 3];
    const int origin = alpha.index_origin();
    const Config c = sample_config(alpha, 1000 + trial);
    const int n = c.n();
    std::uniform_int_distribution<int> pick(0, n - 1);
    int i = pick(rng), j = pick(rng);
    if (i == j) j = (j + 1) % n;
    const double theta = angle(rng);

    const Config b = bend(c, i + origin, j + origin, theta);

    CHECK(std::abs(phi(b, i + origin, j + origin) - phi(c, i + origin, j + origin)) <= 1e-10);
    CHECK((b.closure() - c.closure()).norm() <= 1e-10);
    CHECK(((b.rho[i] + b.rho[j]) - (c.rho[i] + c.rho[j])).norm() <= 1e-10);
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(b.rho[k].norm() - c.rho[k].norm()) <= 1e-10);
      if (k != i && k != j) CHECK((b.rho[k] - c.rho[k]).norm() == 0.0);
    }
  }
}

TEST_CASE("bending is a circle action") {
  const Config c = sample_config(lv({"1", "1", "1", "2"}), 5);

  const Config same = bend(c, 4, 3, 0.0);
  for (int k = 0; k < 4; ++k) CHECK((same.rho[k] - c.rho[k]).norm() == 0.0);

  const Config full = bend(c, 4, 3, kTwoPi);
  for (int k = 0; k < 4; ++k) CHECK((full.rho[k] - c.rho[k]).norm() <= 1e-10);

  std::mt19937 rng(73);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double t1 = angle(rng), t2 = angle(rng);
    const Config once = bend(c, 4, 3, t1 + t2);
    const Config twice = bend(bend(c, 4, 3, t1), 4, 3, t2);
    for (int k = 0; k < 4; ++k) CHECK((once.rho[k] - twice.rho[k]).norm() <= 1e-10);
  }
}

TEST_CASE("criticality detection") {
  // complementary edges stacked along the z-axis
  Config collinear;
  collinear.alpha = {1, 1, 2, 1, 1};
  collinear.rho = {Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(0, 0, 1),
                   Eigen::Vector3d(0, 0, -2), Eigen::Vector3d(1, 0, 0),
                   Eigen::Vector3d(-1, 0, 0)};
  CHECK(is_critical(collinear, 4, 5, 1e-8));

  // complementary pair at right angles is maximally non-critical
  Config square;
  square.alpha = {1, 1, 1, 2};
  square.rho = {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0), Eigen::Vector3d(0, 0, 0),
                Eigen::Vector3d(0, 0, 0)};
  auto [r3, r4] = linkage(Eigen::Vector3d(-1, -1, 0), 1.0, 2.0, Eigen::Vector3d(0, 0, 1));
  square.rho[2] = r3;
  square.rho[3] = r4;
  CHECK(square.closure().norm() <= 1e-12);
  CHECK(std::abs(square.rho[2].norm() - 1.0) <= 1e-12);
  CHECK(std::abs(square.rho[3].norm() - 2.0) <= 1e-12);
  CHECK(!is_critical(square, 4, 3, 1e-6));

  // a single complementary edge always spans a line
  const Config triangle = sample_config(lv({"1", "1", "1"}), 2);
  CHECK(is_critical(triangle, 1, 2, 1e-12));
}

TEST_CASE("quadrilateral criticality happens exactly at the interval ends") {
  for (const LengthVector& alpha : {lv({"1", "1", "1", "2"}), lv({"2", "4", "6", "9"})}) {
    const RatInterval analytic = phi_image_analytic(alpha, 4, 3);
    const double lo = to_double(analytic.lo), hi = to_double(analytic.hi);
    for (int s = 0; s < 200; ++s) {
      const Config c = sample_config(alpha, 5000 + s);
      const double f = phi(c, 4, 3);
      if (f - lo > 1e-3 && hi - f > 1e-3) CHECK(!is_critical(c, 4, 3, 1e-8));
    }
  }

  // an endpoint configuration: the complementary edges are parallel
  Config end;
  end.alpha = {1, 1, 1, 2};
  end.rho = {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 0, 0),
             Eigen::Vector3d(0, 0, 0)};
  auto [r3, r4] = linkage(Eigen::Vector3d(-2, 0, 0), 1.0, 2.0, Eigen::Vector3d(0, 0, 1));
  end.rho[2] = r3;
  end.rho[3] = r4;
  CHECK(end.closure().norm() <= 1e-12);
  CHECK(phi(end, 4, 3) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(is_critical(end, 4, 3, 1e-8));
}

TEST_CASE("interval estimation approaches the analytic image") {
  EstimateOptions opts;
  opts.threads = 2;
  {
    const Interval mc = estimate_phi_image(lv({"1", "1", "1", "2"}), 4, 3, 1500, 7, opts);
    CHECK(mc.lo == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(mc.hi == doctest::Approx(2.0).epsilon(2e-3));
    CHECK(mc.lo >= 1.0 - 1e-9);
    CHECK(mc.hi <= 2.0 + 1e-9);
  }
  {
    const Interval mc =
        estimate_phi_image(lv({"1/4", "1", "1", "1", "2"}, 0), 2, 0, 1500, 7, opts);
    CHECK(mc.lo == doctest::Approx(0.75).epsilon(2e-3));
    CHECK(mc.hi == doctest::Approx(1.25).epsilon(2e-3));
    CHECK(mc.lo >= 0.75 - 1e-9);
    CHECK(mc.hi <= 1.25 + 1e-9);
  }
  // thread partition does not change the reduction
  EstimateOptions serial = opts;
  serial.threads = 1;
  const Interval two = estimate_phi_image(lv({"1", "1", "1", "2"}), 4, 3, 64, 11, opts);
  const Interval one = estimate_phi_image(lv({"1", "1", "1", "2"}), 4, 3, 64, 11, serial);
  CHECK(two.lo == one.lo);
  CHECK(two.hi == one.hi);

  CHECK_THROWS_AS(estimate_phi_image(lv({"1", "1", "1", "2"}), 4, 3, 0, 1), DomainError);
  CHECK_THROWS_AS(estimate_phi_image(lv({"1", "1", "1", "1"}), 4, 3, 10, 1), NotGeneric);
}
