#pragma once

#include <cstddef>
#include <vector>

#include "boostdms/archive.hpp"
#include "boostdms/evaluation.hpp"

namespace boostdms {

/// center.x +/- alpha e_i in the order +e_1, -e_1, +e_2, -e_2, ...; points
/// outside [lb, ub] and cache duplicates removed.
std::vector<Vec> generate_poll_points(const ArchiveEntry& center, const Vec& lb, const Vec& ub, const EvalCache& cache);

struct PollOutcome {
  bool success = false;
  std::size_t evals_used = 0;
};

/// Complete coordinate poll: every filtered poll point is evaluated in one
/// batch (budget permitting) and merged in direction order.
PollOutcome run_poll(const ArchiveEntry& center, Archive& archive, EvalContext& ctx);

}  // namespace boostdms
