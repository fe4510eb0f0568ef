#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "boostdms/problem.hpp"

namespace boostdms {

/// Thrown when a batch would exceed the remaining evaluation budget.
class BudgetExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Evaluates batches of points on a fixed pool of worker threads.
///
/// Work is handed out one point at a time to whichever worker is free, so
/// uneven evaluation costs balance out. Results always come back in input
/// order. Each call blocks until the whole batch is done. With one worker
/// the points are evaluated in the calling thread, in order.
class BatchExecutor {
 public:
  struct Options {
    int workers = 1;
    /// Sleep added to every evaluation (models expensive simulations).
    std::chrono::microseconds delay{0};
  };

  BatchExecutor();
  explicit BatchExecutor(Options options);
  ~BatchExecutor();

  BatchExecutor(const BatchExecutor&) = delete;
  BatchExecutor& operator=(const BatchExecutor&) = delete;

  /// Evaluates every point exactly once. NaN-containing results become
  /// all-+inf vectors and are counted in nan_coercions(). Throws
  /// BudgetExceeded (before evaluating anything) if the batch is larger than
  /// the remaining budget; rethrows the first evaluator exception.
  std::vector<ObjVector> evaluate_batch(std::span<const Vec> points, const Problem& problem);

  /// Caps the total number of further evaluations; nullopt removes the cap.
  void set_budget(std::optional<std::size_t> remaining) { budget_ = remaining; }
  std::optional<std::size_t> remaining_budget() const { return budget_; }

  int workers() const { return options_.workers; }
  std::chrono::microseconds delay() const { return options_.delay; }
  std::size_t evaluations() const { return evaluations_; }
  std::size_t batches() const { return batches_; }
  std::size_t nan_coercions() const { return nan_coercions_.load(); }

 private:
  struct Batch {
    std::span<const Vec> points;
    const Problem* problem = nullptr;
    std::vector<ObjVector>* results = nullptr;
    std::atomic<std::size_t> next{0};
    std::size_t pending = 0;  // guarded by mutex_
    std::exception_ptr error;  // guarded by mutex_
  };

  void worker_loop();
  void drain(Batch& batch);
  ObjVector evaluate_one(const Vec& x, const Problem& problem);

  Options options_;
  std::optional<std::size_t> budget_;
  std::size_t evaluations_ = 0;
  std::size_t batches_ = 0;
  std::atomic<std::size_t> nan_coercions_{0};

  std::mutex mutex_;
  std::condition_variable work_cv_;
  std::condition_variable done_cv_;
  Batch* current_ = nullptr;
  std::size_t generation_ = 0;
  std::size_t in_batch_ = 0;  // workers currently holding current_
  bool stopping_ = false;
  std::vector<std::jthread> threads_;
};

}  // namespace boostdms
