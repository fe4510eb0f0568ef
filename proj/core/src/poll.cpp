#include "boostdms/poll.hpp"

#include <utility>

namespace boostdms {

std::vector<Vec> generate_poll_points(const ArchiveEntry& center, const Vec& lb, const Vec& ub,
                                      const EvalCache& cache) {
  std::vector<Vec> points;
  const Eigen::Index n = center.x.size();
  points.reserve(static_cast<std::size_t>(2 * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (double sign : {1.0, -1.0}) {
      Vec p = center.x;
      p[i] += sign * center.alpha;
      if (p[i] < lb[i] || p[i] > ub[i]) continue;
      points.push_back(std::move(p));
    }
  }
  return drop_known_points(cache, std::move(points));
}

PollOutcome run_poll(const ArchiveEntry& center, Archive& archive, EvalContext& ctx) {
  const std::vector<Vec> points = generate_poll_points(center, ctx.problem.lb(), ctx.problem.ub(), ctx.cache);
  const MergeResult merged = evaluate_and_merge(ctx, points, center.alpha, archive);
  return {merged.changed, merged.evaluated};
}

}  // namespace boostdms
