#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "boostdms/archive.hpp"
#include "boostdms/eval_cache.hpp"
#include "boostdms/executor.hpp"
#include "boostdms/problem.hpp"

namespace boostdms {

/// What the search and poll steps need to spend evaluations.
struct EvalContext {
  const Problem& problem;
  EvalCache& cache;
  BatchExecutor& executor;
  std::size_t max_evals;

  std::size_t remaining() const {
    return cache.eval_count() >= max_evals ? 0 : max_evals - cache.eval_count();
  }
};

struct MergeResult {
  bool changed = false;
  std::size_t evaluated = 0;
  /// Position (in the submitted list) of the first point that changed the archive.
  std::optional<std::size_t> first_change;
};

/// Positions of the points that are neither cache hits nor duplicates
/// (within the cache tolerance) of an earlier point in the same list.
std::vector<std::size_t> fresh_point_indices(const EvalCache& cache, std::span<const Vec> points);

/// The points selected by fresh_point_indices, in order.
std::vector<Vec> drop_known_points(const EvalCache& cache, std::vector<Vec> points);

/// Evaluates `points` as one batch (truncated to the remaining budget),
/// records every result in the cache, then offers each finite-valued point to
/// the archive one by one in list order with stepsize `alpha`.
MergeResult evaluate_and_merge(EvalContext& ctx, std::span<const Vec> points, double alpha, Archive& archive);

}  // namespace boostdms
