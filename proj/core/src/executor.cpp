#include "boostdms/executor.hpp"

#include <stdexcept>
#include <string>

namespace boostdms {

BatchExecutor::BatchExecutor() : BatchExecutor(Options{}) {}

BatchExecutor::BatchExecutor(Options options) : options_(options) {
  if (options_.workers < 1) throw std::invalid_argument("BatchExecutor: workers must be >= 1");
  if (options_.delay.count() < 0) throw std::invalid_argument("BatchExecutor: delay must be >= 0");
  if (options_.workers > 1) {
    threads_.reserve(static_cast<std::size_t>(options_.workers));
    for (int w = 0; w < options_.workers; ++w) threads_.emplace_back([this] { worker_loop(); });
  }
}

BatchExecutor::~BatchExecutor() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  work_cv_.notify_all();
}

ObjVector BatchExecutor::evaluate_one(const Vec& x, const Problem& problem) {
  if (options_.delay.count() > 0) std::this_thread::sleep_for(options_.delay);
  ObjVector f = problem.evaluate(x);
  if (coerce_objectives(f)) nan_coercions_.fetch_add(1);
  return f;
}

std::vector<ObjVector> BatchExecutor::evaluate_batch(std::span<const Vec> points, const Problem& problem) {
  if (budget_ && points.size() > *budget_) {
    throw BudgetExceeded("batch of " + std::to_string(points.size()) + " points exceeds remaining budget of " +
                         std::to_string(*budget_));
  }
  std::vector<ObjVector> results(points.size());
  if (points.empty()) return results;

  if (threads_.empty()) {
    for (std::size_t i = 0; i < points.size(); ++i) results[i] = evaluate_one(points[i], problem);
  } else {
    Batch batch;
    batch.points = points;
    batch.problem = &problem;
    batch.results = &results;
    batch.pending = points.size();
    {
      std::lock_guard lock(mutex_);
      current_ = &batch;
      ++generation_;
    }
    work_cv_.notify_all();
    std::unique_lock lock(mutex_);
    done_cv_.wait(lock, [&] { return batch.pending == 0 && in_batch_ == 0; });
    current_ = nullptr;
    if (batch.error) std::rethrow_exception(batch.error);
  }

  evaluations_ += points.size();
  ++batches_;
  if (budget_) *budget_ -= points.size();
  return results;
}

void BatchExecutor::worker_loop() {
  std::size_t seen = 0;
  for (;;) {
    Batch* batch = nullptr;
    {
      std::unique_lock lock(mutex_);
      work_cv_.wait(lock, [&] { return stopping_ || generation_ != seen; });
      if (stopping_) return;
      seen = generation_;
      batch = current_;
      if (batch == nullptr) continue;
      ++in_batch_;
    }
    drain(*batch);
    {
      std::lock_guard lock(mutex_);
      --in_batch_;
    }
    done_cv_.notify_all();
  }
}

void BatchExecutor::drain(Batch& batch) {
  for (;;) {
    const std::size_t i = batch.next.fetch_add(1);
    if (i >= batch.points.size()) return;
    std::exception_ptr error;
    try {
      (*batch.results)[i] = evaluate_one(batch.points[i], *batch.problem);
    } catch (...) {
      error = std::current_exception();
    }
    std::lock_guard lock(mutex_);
    if (error && !batch.error) batch.error = error;
    --batch.pending;
  }
}

}  // namespace boostdms
