#include "boostdms/evaluation.hpp"

#include <algorithm>
#include <utility>

namespace boostdms {

std::vector<std::size_t> fresh_point_indices(const EvalCache& cache, std::span<const Vec> points) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (cache.lookup(points[i]) != nullptr) continue;
    const bool repeated = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return max_norm_distance(points[k], points[i]) < cache.dup_tol();
    });
    if (!repeated) kept.push_back(i);
  }
  return kept;
}

std::vector<Vec> drop_known_points(const EvalCache& cache, std::vector<Vec> points) {
  std::vector<Vec> kept;
  for (std::size_t i : fresh_point_indices(cache, points)) kept.push_back(std::move(points[i]));
  return kept;
}

MergeResult evaluate_and_merge(EvalContext& ctx, std::span<const Vec> points, double alpha, Archive& archive) {
  MergeResult result;
  const auto batch = points.first(std::min(points.size(), ctx.remaining()));
  if (batch.empty()) return result;

  std::vector<ObjVector> values = ctx.executor.evaluate_batch(batch, ctx.problem);
  result.evaluated = batch.size();
  for (std::size_t i = 0; i < batch.size(); ++i) {
    ctx.cache.record(batch[i], values[i]);
    if (!all_finite(values[i])) continue;
    if (archive.insert({batch[i], values[i], alpha})) {
      result.changed = true;
      if (!result.first_change) result.first_change = i;
    }
  }
  return result;
}

}  // namespace boostdms
