#include <gtest/gtest.h>

#include <functional>
#include <limits>
#include <random>

#include "boostdms/models.hpp"

using namespace boostdms;

namespace {

InterpolationSet make_set(const std::vector<Vec>& pts, const std::function<double(const Vec&)>& f, double radius) {
  InterpolationSet s;
  s.center = pts.front();
  s.radius = radius;
  s.points = pts;
  s.values.resize(static_cast<Eigen::Index>(pts.size()), 1);
  for (std::size_t j = 0; j < pts.size(); ++j) s.values(static_cast<Eigen::Index>(j), 0) = f(pts[j]);
  return s;
}

struct RandomQuadratic {
  double c;
  Vec g;
  Eigen::MatrixXd H;
  double operator()(const Vec& x) const { return c + g.dot(x) + 0.5 * x.dot(H * x); }
};

RandomQuadratic random_quadratic(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  RandomQuadratic q{d(rng), Vec(n), Eigen::MatrixXd(n, n)};
  for (int i = 0; i < n; ++i) q.g[i] = d(rng);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) q.H(i, j) = q.H(j, i) = d(rng);
  return q;
}

std::vector<Vec> random_ball_points(const Vec& center, double radius, std::size_t count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec> pts{center};
  while (pts.size() < count) {
    Vec y = center;
    for (Eigen::Index i = 0; i < y.size(); ++i) y[i] += radius * u(rng);
    pts.push_back(y);
  }
  return pts;
}

}  // namespace

TEST(Models, BasisSizeAndRegime) {
  EXPECT_EQ(quadratic_basis_size(1), 3u);
  EXPECT_EQ(quadratic_basis_size(2), 6u);
  EXPECT_EQ(quadratic_basis_size(10), 66u);
  EXPECT_EQ(regime_for(4, 2), ModelRegime::MinimumFrobenius);
  EXPECT_EQ(regime_for(6, 2), ModelRegime::Determined);
  EXPECT_EQ(regime_for(9, 2), ModelRegime::Regression);
}

TEST(Models, OneDimensionalSquareIsDetermined) {
  const auto set = make_set({Vec::Constant(1, 0.0), Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)},
                            [](const Vec& y) { return y[0] * y[0]; }, 1.0);
  const auto m = build_model(set, set.values.col(0));
  ASSERT_TRUE(m);
  EXPECT_NEAR(m->g[0], 0.0, 1e-14);
  EXPECT_NEAR(m->H(0, 0), 2.0, 1e-14);
  EXPECT_NEAR(eval_model(*m, Vec::Constant(1, 0.5)), 0.25, 1e-14);
}

TEST(Models, ConstantData) {
  std::mt19937_64 rng(1);
  const auto pts = random_ball_points(Vec::Zero(3), 0.5, 7, rng);
  const auto set = make_set(pts, [](const Vec&) { return 4.25; }, 0.5);
  const auto m = build_model(set, set.values.col(0));
  ASSERT_TRUE(m);
  EXPECT_EQ(m->f_center, 4.25);
  EXPECT_LE(m->g.norm(), 1e-12);
  EXPECT_LE(m->H.norm(), 1e-12);
}

TEST(Models, MinimumFrobeniusOnLinearDataHasZeroHessian) {
  const std::vector<Vec> pts{Vec{{0.0, 0.0}}, Vec{{0.1, 0.0}}, Vec{{0.0, 0.1}}, Vec{{-0.1, 0.05}}};
  const auto set = make_set(pts, [](const Vec& y) { return 1.0 + 3.0 * y[0] - 2.0 * y[1]; }, 0.2);
  ASSERT_EQ(regime_for(set.size(), 2), ModelRegime::MinimumFrobenius);
  const auto m = build_model(set, set.values.col(0));
  ASSERT_TRUE(m);
  EXPECT_LE(m->H.norm(), 1e-8);
  EXPECT_NEAR(m->g[0], 3.0, 1e-10);
  EXPECT_NEAR(m->g[1], -2.0, 1e-10);
}

TEST(Models, ModelAtCenterIsExact) {
  std::mt19937_64 rng(2);
  for (int n : {1, 2, 4}) {
    const auto q = random_quadratic(n, rng);
    const Vec c = Vec::Constant(n, 0.3);
    const auto pts = random_ball_points(c, 0.2, quadratic_basis_size(n) + 2, rng);
    const auto set = make_set(pts, q, 0.2);
    const auto m = build_model(set, set.values.col(0));
    ASSERT_TRUE(m);
    EXPECT_EQ((*m)(c), q(c));
    EXPECT_EQ(m->H, m->H.transpose());
  }
}

// Property: every regime reproduces an exact quadratic when it has enough data,
// and the interpolating regimes reproduce their data.
class ModelExactness : public ::testing::TestWithParam<int> {};

TEST_P(ModelExactness, DeterminedAndRegressionRecoverQuadratic) {
  const int n = GetParam();
  std::mt19937_64 rng(100 + n);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto q = random_quadratic(n, rng);
    const Vec c = Vec::Constant(n, 0.5 * u(rng));
    const double r = 0.25;
    for (std::size_t p : {quadratic_basis_size(n), 2 * quadratic_basis_size(n)}) {
      const auto pts = random_ball_points(c, r, p, rng);
      const auto set = make_set(pts, q, r);
      const auto m = build_model(set, set.values.col(0));
      ASSERT_TRUE(m) << "n=" << n << " p=" << p;
      double scale = 1.0;
      for (const auto& y : pts) scale = std::max(scale, std::abs(q(y)));
      for (const auto& y : pts) EXPECT_LE(std::abs((*m)(y) - q(y)), 1e-8 * scale);
      for (int k = 0; k < 100; ++k) {
        Vec y = c;
        for (int i = 0; i < n; ++i) y[i] += r * u(rng);
        EXPECT_LE(std::abs((*m)(y) - q(y)), 1e-8 * std::max(1.0, std::abs(q(y))));
      }
    }
  }
}

TEST_P(ModelExactness, MinimumFrobeniusInterpolatesAndIsFlatOnLinearData) {
  const int n = GetParam();
  std::mt19937_64 rng(200 + n);
  std::normal_distribution<double> d;
  for (int trial = 0; trial < 10; ++trial) {
    Vec a(n);
    for (int i = 0; i < n; ++i) a[i] = d(rng);
    const double b = d(rng);
    const auto lin = [&](const Vec& y) { return b + a.dot(y); };
    const std::size_t p = std::max<std::size_t>(n + 2, quadratic_basis_size(n) - 1);
    const auto pts = random_ball_points(Vec::Zero(n), 0.1, p, rng);
    const auto set = make_set(pts, lin, 0.1);
    const auto m = build_model(set, set.values.col(0));
    ASSERT_TRUE(m);
    EXPECT_LE(m->H.norm(), 1e-8);
    for (const auto& y : pts) EXPECT_NEAR((*m)(y), lin(y), 1e-9 * (1 + std::abs(lin(y))));
  }
}

INSTANTIATE_TEST_SUITE_P(Dimensions, ModelExactness, ::testing::Values(1, 2, 3, 5, 8));

TEST(Models, DegenerateGeometryIsReported) {
  // Every point on one line: no quadratic in two variables is determined.
  std::vector<Vec> pts;
  for (int j = 0; j < 6; ++j) pts.push_back(Vec{{0.1 * j, 0.1 * j}});
  const auto set = make_set(pts, [](const Vec& y) { return y[0] * y[1]; }, 1.0);
  EXPECT_FALSE(build_model(set, set.values.col(0)));
}

TEST(Models, TooFewPointsThrow) {
  const auto set = make_set({Vec::Zero(2), Vec::Ones(2)}, [](const Vec&) { return 0.0; }, 1.0);
  EXPECT_THROW(ModelFactory::factor(set), std::invalid_argument);
}

TEST(Models, RebuildIsBitReproducible) {
  std::mt19937_64 rng(5);
  const auto q = random_quadratic(3, rng);
  const auto pts = random_ball_points(Vec::Zero(3), 0.3, 12, rng);
  const auto set = make_set(pts, q, 0.3);
  const auto a = build_model(set, set.values.col(0));
  const auto b = build_model(set, set.values.col(0));
  ASSERT_TRUE(a && b);
  EXPECT_EQ(a->g, b->g);
  EXPECT_EQ(a->H, b->H);
}

TEST(Models, SharedFactorizationMatchesPerComponentBuilds) {
  std::mt19937_64 rng(6);
  const auto q1 = random_quadratic(2, rng);
  const auto q2 = random_quadratic(2, rng);
  auto set = make_set(random_ball_points(Vec::Zero(2), 0.3, 6, rng), q1, 0.3);
  set.values.conservativeResize(Eigen::NoChange, 2);
  for (std::size_t j = 0; j < set.size(); ++j) set.values(static_cast<Eigen::Index>(j), 1) = q2(set.points[j]);
  const auto all = build_models(set);
  ASSERT_EQ(all.size(), 2u);
  for (int c = 0; c < 2; ++c) {
    const auto one = build_model(set, set.values.col(c));
    ASSERT_TRUE(all[static_cast<std::size_t>(c)] && one);
    EXPECT_EQ(all[static_cast<std::size_t>(c)]->g, one->g);
    EXPECT_EQ(all[static_cast<std::size_t>(c)]->H, one->H);
  }
}

TEST(Models, SelectPointsOrdersByDistanceThenCacheOrder) {
  EvalCache cache(1e-3);
  cache.record(Vec::Constant(1, 0.0), ObjVector{{0.0, 0.0}});
  cache.record(Vec::Constant(1, 0.5), ObjVector{{1.0, 1.0}});
  cache.record(Vec::Constant(1, 2.0), ObjVector{{2.0, 2.0}});
  cache.record(Vec::Constant(1, -0.5), ObjVector{{3.0, 3.0}});
  cache.record(Vec::Constant(1, 0.25), ObjVector{{std::numeric_limits<double>::infinity(), 0.0}});
  const auto set = select_points(cache, Vec::Constant(1, 0.0), 1.0, 10);
  ASSERT_EQ(set.size(), 3u);
  EXPECT_EQ(set.points[0][0], 0.0);
  EXPECT_EQ(set.points[1][0], 0.5);  // tie with -0.5, cached earlier
  EXPECT_EQ(set.points[2][0], -0.5);
  EXPECT_EQ(set.values(2, 0), 3.0);

  const auto capped = select_points(cache, Vec::Constant(1, 0.0), 1.0, 2);
  EXPECT_EQ(capped.size(), 2u);
  EXPECT_THROW(select_points(cache, Vec::Constant(1, 0.25), 1.0, 5), std::invalid_argument);
}
