#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "boostdms/executor.hpp"

using namespace boostdms;
using namespace std::chrono_literals;

namespace {

std::vector<Vec> line_points(int count) {
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i) pts.push_back(Vec::Constant(2, 0.01 * i));
  return pts;
}

// Uneven per-point cost so completion order differs from input order.
Problem jittery() {
  return Problem("jitter", Vec::Zero(2), Vec::Ones(2), 2, [](const Vec& x) {
    const auto k = static_cast<int>(std::lround(x[0] * 100));
    std::this_thread::sleep_for(std::chrono::microseconds((k * 7919) % 13 * 100));
    return ObjVector{{x[0], x[0] * x[0]}};
  });
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST(Executor, EmptyBatch) {
  BatchExecutor ex({4, 0us});
  ex.set_budget(5);
  const Problem p = jittery();
  EXPECT_TRUE(ex.evaluate_batch({}, p).empty());
  EXPECT_EQ(*ex.remaining_budget(), 5u);
}

TEST(Executor, ResultsInInputOrderForAnyWorkerCount) {
  const Problem p = jittery();
  const auto pts = line_points(40);
  BatchExecutor seq({1, 0us});
  const auto expected = seq.evaluate_batch(pts, p);
  for (int w : {2, 3, 8}) {
    BatchExecutor ex({w, 0us});
    for (int round = 0; round < 3; ++round) {
      const auto got = ex.evaluate_batch(pts, p);
      ASSERT_EQ(got.size(), expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], expected[i]) << "workers " << w;
    }
  }
}

TEST(Executor, EachPointEvaluatedOnce) {
  std::atomic<int> calls{0};
  Problem p("count", Vec::Zero(1), Vec::Ones(1), 2, [&](const Vec& x) {
    calls.fetch_add(1);
    return ObjVector{{x[0], 1 - x[0]}};
  });
  BatchExecutor ex({8, 0us});
  std::vector<Vec> pts;
  for (int i = 0; i < 100; ++i) pts.push_back(Vec::Constant(1, i / 100.0));
  ex.evaluate_batch(pts, p);
  EXPECT_EQ(calls.load(), 100);
  EXPECT_EQ(ex.evaluations(), 100u);
  EXPECT_EQ(ex.batches(), 1u);
}

TEST(Executor, BudgetIsEnforcedBeforeDispatch) {
  std::atomic<int> calls{0};
  Problem p("count", Vec::Zero(1), Vec::Ones(1), 2, [&](const Vec& x) {
    calls.fetch_add(1);
    return ObjVector{{x[0], 1 - x[0]}};
  });
  BatchExecutor ex({4, 0us});
  ex.set_budget(3);
  const std::vector<Vec> one{Vec::Constant(1, 0.5)};
  std::vector<Vec> four;
  for (int i = 0; i < 4; ++i) four.push_back(Vec::Constant(1, i * 0.1));
  EXPECT_THROW(ex.evaluate_batch(four, p), BudgetExceeded);
  EXPECT_EQ(calls.load(), 0);
  four.pop_back();
  ex.evaluate_batch(four, p);
  EXPECT_EQ(*ex.remaining_budget(), 0u);
  EXPECT_THROW(ex.evaluate_batch(one, p), BudgetExceeded);
  EXPECT_EQ(calls.load(), 3);
}

TEST(Executor, NaNBecomesInfinityAndIsCounted) {
  Problem p("nan", Vec::Zero(1), Vec::Ones(1), 2, [](const Vec& x) {
    return ObjVector{{x[0] > 0.5 ? std::nan("") : x[0], 1.0}};
  });
  for (int w : {1, 4}) {
    BatchExecutor ex({w, 0us});
    const std::vector<Vec> pts{Vec::Constant(1, 0.2), Vec::Constant(1, 0.8), Vec::Constant(1, 0.9)};
    const auto got = ex.evaluate_batch(pts, p);
    EXPECT_EQ(got[0][0], 0.2);
    EXPECT_TRUE(std::isinf(got[1][0]) && std::isinf(got[1][1]));
    EXPECT_TRUE(std::isinf(got[2][1]));
    EXPECT_EQ(ex.nan_coercions(), 2u);
  }
}

TEST(Executor, EvaluatorExceptionPropagates) {
  Problem p("throw", Vec::Zero(1), Vec::Ones(1), 2, [](const Vec& x) -> ObjVector {
    if (x[0] > 0.5) throw std::runtime_error("boom");
    return ObjVector{{x[0], 0.0}};
  });
  for (int w : {1, 4}) {
    BatchExecutor ex({w, 0us});
    const std::vector<Vec> pts{Vec::Constant(1, 0.1), Vec::Constant(1, 0.9)};
    EXPECT_THROW(ex.evaluate_batch(pts, p), std::runtime_error);
    // The pool stays usable afterwards.
    EXPECT_EQ(ex.evaluate_batch(std::vector<Vec>{Vec::Constant(1, 0.1)}, p).size(), 1u);
  }
}

TEST(Executor, InjectedDelayParallelizes) {
  const Problem p("flat", Vec::Zero(2), Vec::Ones(2), 2, [](const Vec& x) { return ObjVector{{x[0], x[1]}}; });
  const auto pts = line_points(16);
  const auto delay = 50ms;

  BatchExecutor seq({1, delay});
  auto t0 = std::chrono::steady_clock::now();
  seq.evaluate_batch(pts, p);
  const double sequential = seconds_since(t0);
  EXPECT_GE(sequential, 16 * 0.05);

  BatchExecutor par({8, delay});
  t0 = std::chrono::steady_clock::now();
  par.evaluate_batch(pts, p);
  const double parallel = seconds_since(t0);
  // Two waves of 8; allow 50% overhead.
  EXPECT_LE(parallel, 2 * 0.05 * 1.5);
  EXPECT_LE(parallel, 0.5 * sequential);
}

TEST(Executor, RejectsBadOptions) {
  EXPECT_THROW(BatchExecutor({0, 0us}), std::invalid_argument);
  EXPECT_THROW(BatchExecutor({1, -1us}), std::invalid_argument);
}
