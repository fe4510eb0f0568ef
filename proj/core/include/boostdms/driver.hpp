#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "boostdms/archive.hpp"
#include "boostdms/executor.hpp"
#include "boostdms/problem.hpp"
#include "boostdms/search.hpp"
#include "boostdms/selection.hpp"

namespace boostdms {

struct StopRule {
  std::size_t max_evals = 20000;
  double min_alpha = 1e-3;
};

struct DriverOptions {
  SelectionKind selection = SelectionKind::GammaMaxGap;
  SearchStrategy search;
  StopRule stop;
  double alpha0 = 1.0;
  /// Cache / archive duplicate tolerance; defaults to stop.min_alpha.
  std::optional<double> dup_tol;
  std::uint64_t seed = 0;
};

/// Search-step counters accumulated over a run.
struct SearchStats {
  std::size_t attempts = 0;          // search steps started
  std::size_t with_models = 0;       // steps where the ball held n + 2 points
  std::size_t successes = 0;
  std::vector<std::size_t> successes_by_level;  // index l-1
  std::size_t evals = 0;
};

struct RunReport {
  Archive archive{1e-3};
  std::size_t evals = 0;
  std::size_t iterations = 0;
  std::vector<bool> iteration_success;
  double wall_seconds = 0.0;
  SearchStats search;
  std::size_t poll_steps = 0;
  std::size_t poll_evals = 0;
  std::size_t nan_coercions = 0;
};

/// Called after initialization (iteration 0) and after every iteration k
/// (argument k + 1) with the current archive and evaluation count.
using IterationObserver = std::function<void(std::size_t iteration, const Archive& archive, std::size_t evals)>;

/// The direct multisearch loop: select iterate(s), search around each, poll
/// the ones whose search failed, halve the stepsize of unsuccessfully polled
/// centers still in the archive. Stops once the evaluation budget is spent or
/// every archive stepsize is below stop.min_alpha. The executor's budget is
/// set for the duration of the run. Throws InitializationFailed.
RunReport run(const Problem& problem, const DriverOptions& options, BatchExecutor& executor,
              const IterationObserver& observer = {});

}  // namespace boostdms
