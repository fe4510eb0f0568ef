#include "boostdms/initialize.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "boostdms/evaluation.hpp"

namespace boostdms {

std::vector<Vec> initial_points(const Problem& problem) {
  const int n = problem.n();
  std::vector<Vec> points;
  points.reserve(static_cast<std::size_t>(n) + 1);
  if (n == 1) {
    points.push_back(problem.lb());
  } else {
    for (int j = 0; j < n; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(n - 1);
      Vec x = problem.lb() + t * (problem.ub() - problem.lb());
      x = x.cwiseMax(problem.lb()).cwiseMin(problem.ub());
      points.push_back(std::move(x));
    }
  }
  points.push_back(problem.centroid());
  return points;
}

InitialState initialize(const Problem& problem, double alpha0, double dup_tol, BatchExecutor& executor) {
  if (!(alpha0 > 0)) throw std::invalid_argument("initialize: alpha0 must be positive");
  InitialState state{Archive(dup_tol), EvalCache(dup_tol)};
  std::vector<Vec> points = drop_known_points(state.cache, initial_points(problem));
  const std::size_t allowed = std::min(points.size(), executor.remaining_budget().value_or(points.size()));
  EvalContext ctx{problem, state.cache, executor, allowed};
  evaluate_and_merge(ctx, points, alpha0, state.archive);
  if (state.archive.empty()) {
    throw InitializationFailed("problem '" + problem.name() + "': every initial point has an infinite objective value");
  }
  return state;
}

InitialState initialize(const Problem& problem, double alpha0, double dup_tol) {
  BatchExecutor sequential;
  return initialize(problem, alpha0, dup_tol, sequential);
}

}  // namespace boostdms
