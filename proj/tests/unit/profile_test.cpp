#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "boostdms/profile.hpp"

using namespace boostdms;

namespace {

double rho_at(const std::vector<ProfilePoint>& curve, double tau) {
  double rho = 0.0;
  for (const auto& p : curve) {
    if (p.tau <= tau) rho = p.rho;
  }
  return rho;
}

}  // namespace

TEST(Profile, TwoSolversOneProblem) {
  const auto prof = performance_profile({{1.0, 2.0}}, false);
  ASSERT_EQ(prof.curves.size(), 2u);
  EXPECT_EQ(prof.problems_used, 1u);
  EXPECT_EQ(rho_at(prof.curves[0], 1.0), 1.0);
  EXPECT_EQ(rho_at(prof.curves[1], 1.0), 0.0);
  EXPECT_EQ(rho_at(prof.curves[1], 2.0), 1.0);
  ASSERT_EQ(prof.curves[1].size(), 2u);
  EXPECT_EQ(prof.curves[1][1].tau, 2.0);
}

TEST(Profile, IdenticalValuesTie) {
  const auto prof = performance_profile({{3.0, 3.0}, {0.5, 0.5}}, false);
  for (const auto& c : prof.curves) EXPECT_EQ(rho_at(c, 1.0), 1.0);
}

TEST(Profile, InversionForHigherIsBetter) {
  // Purity 1.0 vs 0.5 becomes cost 1 vs 2.
  const auto prof = performance_profile({{1.0, 0.5}}, true);
  EXPECT_EQ(rho_at(prof.curves[0], 1.0), 1.0);
  EXPECT_EQ(rho_at(prof.curves[1], 1.999), 0.0);
  EXPECT_EQ(rho_at(prof.curves[1], 2.0), 1.0);
}

TEST(Profile, ZeroMinimumAndFailures) {
  const MetricTable t{{0.0, 0.3}, {std::nullopt, std::nullopt}, {2.0, std::nullopt}};
  const auto prof = performance_profile(t, false);
  EXPECT_EQ(prof.problems_used, 2u);
  EXPECT_EQ(prof.dropped_problems, std::vector<std::size_t>{1});
  EXPECT_EQ(rho_at(prof.curves[0], 1.0), 1.0);
  EXPECT_EQ(rho_at(prof.curves[1], 1e300), 0.0);
  // Purity 0 inverts to an infinite cost, which never counts.
  const auto inv = performance_profile({{0.0, 0.5}}, true);
  EXPECT_EQ(rho_at(inv.curves[0], 1e300), 0.0);
  EXPECT_EQ(rho_at(inv.curves[1], 1.0), 1.0);
}

TEST(Profile, RaggedTableRejected) {
  EXPECT_THROW(performance_profile({{1.0, 2.0}, {1.0}}, false), std::invalid_argument);
}

// Properties on random tables: rho is a nondecreasing step function in
// [0, 1], some solver is best on each problem, and the last step counts
// exactly the problems a solver finished.
TEST(Profile, RandomTableProperties) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::bernoulli_distribution fail(0.2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t problems = 1 + trial % 12;
    const std::size_t solvers = 2 + trial % 4;
    MetricTable t(problems, std::vector<std::optional<double>>(solvers));
    for (auto& row : t)
      for (auto& v : row)
        if (!fail(rng)) v = std::floor(u(rng));  // floors give ties and zeros
    const bool invert = trial % 2 == 1;
    const auto prof = performance_profile(t, invert);
    ASSERT_EQ(prof.problems_used + prof.dropped_problems.size(), problems);
    if (prof.problems_used == 0) continue;
    double best_sum = 0.0;
    for (std::size_t s = 0; s < solvers; ++s) {
      const auto& c = prof.curves[s];
      for (std::size_t k = 0; k < c.size(); ++k) {
        EXPECT_GE(c[k].rho, 0.0);
        EXPECT_LE(c[k].rho, 1.0);
        EXPECT_GE(c[k].tau, 1.0);
        if (k) {
          EXPECT_GT(c[k].tau, c[k - 1].tau);
          EXPECT_GE(c[k].rho, c[k - 1].rho);
        }
      }
      best_sum += rho_at(c, 1.0) * static_cast<double>(prof.problems_used);
      std::size_t finished = 0;
      for (std::size_t p = 0; p < problems; ++p) {
        if (std::find(prof.dropped_problems.begin(), prof.dropped_problems.end(), p) != prof.dropped_problems.end())
          continue;
        if (!t[p][s]) continue;
        const double cost = invert ? 1.0 / *t[p][s] : *t[p][s];
        if (!std::isfinite(cost)) continue;
        double row_best = std::numeric_limits<double>::infinity();
        for (const auto& v : t[p]) {
          if (v && std::isfinite(invert ? 1.0 / *v : *v)) row_best = std::min(row_best, invert ? 1.0 / *v : *v);
        }
        if (row_best > 0 || cost == 0) ++finished;
      }
      EXPECT_DOUBLE_EQ(c.empty() ? 0.0 : c.back().rho * static_cast<double>(prof.problems_used),
                       static_cast<double>(finished));
    }
    EXPECT_GE(best_sum, static_cast<double>(prof.problems_used) - 1e-9);
  }
}
