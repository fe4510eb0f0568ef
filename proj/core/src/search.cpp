#include "boostdms/search.hpp"

#include <future>
#include <stdexcept>
#include <utility>

#include "boostdms/models.hpp"
#include "boostdms/subsolve.hpp"

namespace boostdms {

namespace {

struct TrialPoints {
  std::vector<Vec> points;
  std::vector<int> levels;

  void append(std::vector<Vec> pts, int level) {
    for (auto& p : pts) {
      points.push_back(std::move(p));
      levels.push_back(level);
    }
  }
};

// Runs fn(i) for i in [0, count), concurrently when asked; results in index order.
template <typename Fn>
auto map_tasks(std::size_t count, bool concurrent, Fn fn) {
  using Result = decltype(fn(std::size_t{0}));
  std::vector<Result> out;
  out.reserve(count);
  if (!concurrent || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
  }
  std::vector<std::future<Result>> futures;
  futures.reserve(count);
  for (std::size_t i = 0; i < count; ++i) futures.push_back(std::async(std::launch::async, fn, i));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

class LevelSolver {
 public:
  LevelSolver(const std::vector<std::optional<QuadraticModel>>& models, const Problem& problem, double radius,
              const SearchStrategy& strategy, std::uint64_t seed)
      : models_(models), problem_(problem), radius_(radius), strategy_(strategy), seed_(seed) {}

  /// Solutions of every level-l subproblem whose models are all usable.
  std::vector<Vec> solve(int level, std::size_t& solved) const {
    std::vector<std::vector<int>> usable;
    for (auto& combo : combinations(static_cast<int>(models_.size()), level)) {
      bool ok = true;
      for (int i : combo) ok = ok && models_[static_cast<std::size_t>(i)].has_value();
      if (ok) usable.push_back(std::move(combo));
    }
    solved = usable.size();
    const bool concurrent =
        level == 1 ? (strategy_.parallel == ParallelModels::Level1 || strategy_.parallel == ParallelModels::All)
                   : (strategy_.parallel == ParallelModels::Level2Plus || strategy_.parallel == ParallelModels::All);
    return map_tasks(usable.size(), concurrent, [&](std::size_t j) -> Vec {
      const auto& combo = usable[j];
      if (combo.size() == 1) {
        return min_single_model(*models_[static_cast<std::size_t>(combo[0])], radius_, problem_.lb(), problem_.ub());
      }
      ChebyshevSubproblem sub;
      for (int i : combo) sub.models.push_back(*models_[static_cast<std::size_t>(i)]);
      sub.center = sub.models.front().center;
      sub.radius = radius_;
      sub.lb = problem_.lb();
      sub.ub = problem_.ub();
      sub.seed = seed_;
      return min_chebyshev(sub);
    });
  }

 private:
  const std::vector<std::optional<QuadraticModel>>& models_;
  const Problem& problem_;
  double radius_;
  const SearchStrategy& strategy_;
  std::uint64_t seed_;
};

// Evaluates the fresh trial points as one batch and merges them.
void evaluate_trials(const TrialPoints& trials, double alpha, Archive& archive, EvalContext& ctx,
                     SearchOutcome& outcome) {
  std::vector<Vec> batch;
  std::vector<int> levels;
  for (std::size_t i : fresh_point_indices(ctx.cache, trials.points)) {
    batch.push_back(trials.points[i]);
    levels.push_back(trials.levels[i]);
  }
  const MergeResult merged = evaluate_and_merge(ctx, batch, alpha, archive);
  outcome.evals_used += merged.evaluated;
  if (merged.changed) {
    outcome.success = true;
    outcome.level_of_success = levels[*merged.first_change];
  }
}

}  // namespace

std::vector<std::vector<int>> combinations(int q, int l) {
  std::vector<std::vector<int>> out;
  if (l < 1 || l > q) return out;
  std::vector<int> c(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) c[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.push_back(c);
    int i = l - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == q - l + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

SearchOutcome run_search(const ArchiveEntry& center, Archive& archive, EvalContext& ctx, const SearchStrategy& strategy,
                         const SearchOptions& options) {
  SearchOutcome outcome;
  const Problem& problem = ctx.problem;
  const int n = problem.n();
  const int q = problem.q();
  outcome.subproblems_per_level.assign(static_cast<std::size_t>(q), 0);
  if (ctx.remaining() == 0) return outcome;

  const double radius = options.radius_factor * center.alpha;
  const std::size_t cap = options.cap_factor * quadratic_basis_size(n);
  const InterpolationSet set = select_points(ctx.cache, center.x, radius, cap);
  if (set.size() < static_cast<std::size_t>(n) + 2) return outcome;
  outcome.models_built = true;

  std::vector<std::optional<QuadraticModel>> models(static_cast<std::size_t>(q));
  if (auto factory = ModelFactory::factor(set)) {
    const bool concurrent = strategy.parallel == ParallelModels::Level1 || strategy.parallel == ParallelModels::All;
    models = map_tasks(static_cast<std::size_t>(q), concurrent, [&](std::size_t i) {
      return factory->fit(set.values.col(static_cast<Eigen::Index>(i)));
    });
  }
  bool any_model = false;
  for (const auto& m : models) any_model = any_model || m.has_value();
  if (!any_model) return outcome;

  const LevelSolver solver(models, problem, radius, strategy, options.seed);
  auto level_points = [&](int level) {
    TrialPoints t;
    t.append(solver.solve(level, outcome.subproblems_per_level[static_cast<std::size_t>(level - 1)]), level);
    return t;
  };

  switch (strategy.batching) {
    case EvalBatching::WithinLevels:
      for (int level = 1; level <= q && !outcome.success && ctx.remaining() > 0; ++level) {
        evaluate_trials(level_points(level), center.alpha, archive, ctx, outcome);
      }
      break;
    case EvalBatching::TwoBatches: {
      evaluate_trials(level_points(1), center.alpha, archive, ctx, outcome);
      if (outcome.success || ctx.remaining() == 0 || q < 2) break;
      TrialPoints rest;
      for (int level = 2; level <= q; ++level) {
        TrialPoints t = level_points(level);
        rest.points.insert(rest.points.end(), t.points.begin(), t.points.end());
        rest.levels.insert(rest.levels.end(), t.levels.begin(), t.levels.end());
      }
      evaluate_trials(rest, center.alpha, archive, ctx, outcome);
      break;
    }
    case EvalBatching::NoLevels: {
      TrialPoints all;
      for (int level = 1; level <= q; ++level) {
        TrialPoints t = level_points(level);
        all.points.insert(all.points.end(), t.points.begin(), t.points.end());
        all.levels.insert(all.levels.end(), t.levels.begin(), t.levels.end());
      }
      evaluate_trials(all, center.alpha, archive, ctx, outcome);
      break;
    }
  }
  return outcome;
}

}  // namespace boostdms
