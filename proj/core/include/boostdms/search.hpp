#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "boostdms/archive.hpp"
#include "boostdms/evaluation.hpp"

namespace boostdms {

/// How trial points of the search step are grouped into parallel batches.
enum class EvalBatching {
  WithinLevels,  // one batch per level, stop at the first successful level
  TwoBatches,    // level 1, then all of levels 2..q together
  NoLevels,      // every level's trial points in one batch
};

/// Which model builds / subproblem solves run as concurrent tasks.
enum class ParallelModels {
  None,
  Level1,      // component fits and individual minimizations
  Level2Plus,  // joint (Chebyshev) minimizations only
  All,
};

struct SearchStrategy {
  EvalBatching batching = EvalBatching::WithinLevels;
  ParallelModels parallel = ParallelModels::None;
};

struct SearchOptions {
  double radius_factor = 2.0;     // ball radius = factor * alpha
  std::size_t cap_factor = 2;     // at most cap_factor * (n+1)(n+2)/2 points
  std::uint64_t seed = 0;         // forwarded to the Chebyshev multistart
};

struct SearchOutcome {
  bool success = false;
  std::size_t evals_used = 0;
  std::optional<int> level_of_success;  // level of the first point that changed the archive
  bool models_built = false;            // false when the ball held fewer than n + 2 points
  std::vector<std::size_t> subproblems_per_level;  // index l-1
};

/// All l-element subsets of {0..q-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int q, int l);

/// One search step around `center`: quadratic models of every component
/// from cached points in the ball of radius 2 alpha, minimized individually
/// (level 1) and jointly through the Chebyshev scalarization (levels 2..q).
/// Trial points are evaluated per `strategy.batching` and merged into the
/// archive in canonical order (level, then lexicographic combination).
SearchOutcome run_search(const ArchiveEntry& center, Archive& archive, EvalContext& ctx, const SearchStrategy& strategy,
                         const SearchOptions& options = {});

}  // namespace boostdms
