#include "boostdms/driver.hpp"

#include <chrono>
#include <utility>

#include "boostdms/initialize.hpp"
#include "boostdms/poll.hpp"

namespace boostdms {

RunReport run(const Problem& problem, const DriverOptions& options, BatchExecutor& executor,
              const IterationObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  const StopRule& stop = options.stop;
  const double dup_tol = options.dup_tol.value_or(stop.min_alpha);
  const std::size_t nan_before = executor.nan_coercions();

  struct BudgetGuard {
    BatchExecutor& exec;
    ~BudgetGuard() { exec.set_budget(std::nullopt); }
  } guard{executor};
  executor.set_budget(stop.max_evals);

  InitialState state = initialize(problem, options.alpha0, dup_tol, executor);
  Archive& archive = state.archive;
  EvalContext ctx{problem, state.cache, executor, stop.max_evals};

  RunReport report;
  report.search.successes_by_level.assign(static_cast<std::size_t>(problem.q()), 0);
  SearchOptions search_options;
  search_options.seed = options.seed;
  if (observer) observer(0, archive, state.cache.eval_count());

  std::size_t k = 0;
  while (ctx.remaining() > 0 && !archive.all_alpha_below(stop.min_alpha)) {
    const std::vector<std::size_t> picked = select_iterates(archive, options.selection, k, stop.min_alpha);
    if (picked.empty()) break;
    std::vector<ArchiveEntry> centers;
    centers.reserve(picked.size());
    for (std::size_t i : picked) centers.push_back(archive[i]);

    bool success = false;
    std::vector<bool> needs_poll(centers.size(), true);
    for (std::size_t c = 0; c < centers.size() && ctx.remaining() > 0; ++c) {
      const SearchOutcome outcome = run_search(centers[c], archive, ctx, options.search, search_options);
      ++report.search.attempts;
      report.search.evals += outcome.evals_used;
      if (outcome.models_built) ++report.search.with_models;
      if (outcome.success) {
        ++report.search.successes;
        ++report.search.successes_by_level[static_cast<std::size_t>(*outcome.level_of_success - 1)];
        needs_poll[c] = false;
        success = true;
      }
    }

    for (std::size_t c = 0; c < centers.size() && ctx.remaining() > 0; ++c) {
      if (!needs_poll[c]) continue;
      const PollOutcome outcome = run_poll(centers[c], archive, ctx);
      ++report.poll_steps;
      report.poll_evals += outcome.evals_used;
      if (outcome.success) {
        success = true;
        continue;
      }
      // A center dominated away by another center's trial points keeps no entry to update.
      if (auto i = archive.find(centers[c].x)) archive.set_alpha(*i, 0.5 * centers[c].alpha);
    }

    report.iteration_success.push_back(success);
    ++k;
    if (observer) observer(k, archive, state.cache.eval_count());
  }

  report.archive = std::move(state.archive);
  report.evals = state.cache.eval_count();
  report.iterations = k;
  report.nan_coercions = executor.nan_coercions() - nan_before;
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace boostdms
