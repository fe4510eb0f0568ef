#pragma once

#include <stdexcept>
#include <vector>

#include "boostdms/archive.hpp"
#include "boostdms/eval_cache.hpp"
#include "boostdms/executor.hpp"
#include "boostdms/problem.hpp"

namespace boostdms {

class InitializationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InitialState {
  Archive archive;
  EvalCache cache;
};

/// Line sampling plus centroid: lb + j/(n-1) (ub - lb) for j = 0..n-1 (only
/// lb when n = 1), followed by (lb + ub)/2. May contain repeats.
std::vector<Vec> initial_points(const Problem& problem);

/// Evaluates the initial points (one batch, repeats dropped) and builds the
/// starting archive with stepsize alpha0. Throws InitializationFailed when no
/// initial point has a finite objective vector.
InitialState initialize(const Problem& problem, double alpha0, double dup_tol, BatchExecutor& executor);
InitialState initialize(const Problem& problem, double alpha0, double dup_tol = 1e-3);

}  // namespace boostdms
