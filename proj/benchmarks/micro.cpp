#include <benchmark/benchmark.h>

#include <random>

#include "boostdms/archive.hpp"
#include "boostdms/metrics.hpp"
#include "boostdms/models.hpp"
#include "boostdms/subsolve.hpp"

using namespace boostdms;

namespace {

// Points on the unit simplex surface: mutually nondominated.
std::vector<ObjVector> simplex_front(std::size_t size, int q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> e;
  std::vector<ObjVector> pts;
  for (std::size_t i = 0; i < size; ++i) {
    ObjVector p(q);
    for (int c = 0; c < q; ++c) p[c] = e(rng);
    pts.push_back(p / p.sum());
  }
  return pts;
}

InterpolationSet ball_set(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  InterpolationSet s;
  s.center = Vec::Zero(n);
  s.radius = 1.0;
  s.values.resize(static_cast<Eigen::Index>(count), 2);
  for (std::size_t j = 0; j < count; ++j) {
    Vec y = j == 0 ? Vec::Zero(n) : Vec::NullaryExpr(n, [&] { return u(rng); });
    s.values(static_cast<Eigen::Index>(j), 0) = y.squaredNorm();
    s.values(static_cast<Eigen::Index>(j), 1) = (y.array() - 1.0).square().sum();
    s.points.push_back(std::move(y));
  }
  return s;
}

}  // namespace

static void BM_DominatedVolume(benchmark::State& state) {
  const auto q = static_cast<int>(state.range(0));
  const auto pts = simplex_front(static_cast<std::size_t>(state.range(1)), q, 1);
  const Vec upper = Vec::Constant(q, 1.1);
  for (auto _ : state) benchmark::DoNotOptimize(dominated_volume(pts, upper));
}
BENCHMARK(BM_DominatedVolume)->ArgsProduct({{2, 3, 4}, {10, 100, 400}});

static void BM_ArchiveInsert(benchmark::State& state) {
  const auto pts = simplex_front(static_cast<std::size_t>(state.range(0)), 2, 2);
  for (auto _ : state) {
    Archive a(1e-9);
    for (std::size_t i = 0; i < pts.size(); ++i) a.insert({Vec::Constant(1, static_cast<double>(i)), pts[i], 1.0});
    benchmark::DoNotOptimize(a.size());
  }
}
BENCHMARK(BM_ArchiveInsert)->Arg(100)->Arg(1000);

static void BM_BuildModels(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto set = ball_set(n, 2 * quadratic_basis_size(n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_models(set));
}
BENCHMARK(BM_BuildModels)->Arg(2)->Arg(5)->Arg(10)->Arg(30);

static void BM_TrustRegion(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(4);
  std::normal_distribution<double> d;
  const Eigen::MatrixXd a = Eigen::MatrixXd::NullaryExpr(n, n, [&] { return d(rng); });
  const Eigen::MatrixXd H = a + a.transpose();
  const Vec g = Vec::NullaryExpr(n, [&] { return d(rng); });
  for (auto _ : state) benchmark::DoNotOptimize(solve_trust_region(g, H, 0.5));
}
BENCHMARK(BM_TrustRegion)->Arg(2)->Arg(10)->Arg(30);

static void BM_Chebyshev(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto set = ball_set(n, 2 * quadratic_basis_size(n), 5);
  const auto models = build_models(set);
  ChebyshevSubproblem p{{*models[0], *models[1]}, Vec::Constant(n, 0.1), 0.5, Vec::Constant(n, -2.0),
                        Vec::Constant(n, 2.0)};
  for (auto _ : state) benchmark::DoNotOptimize(min_chebyshev(p));
}
BENCHMARK(BM_Chebyshev)->Arg(2)->Arg(10)->Arg(30);
