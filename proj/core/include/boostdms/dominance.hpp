#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "boostdms/problem.hpp"

namespace boostdms {

/// Pareto dominance: b - a lies in R^q_+ \ {0}. A vector with a +inf component
/// never dominates. Throws std::invalid_argument on length mismatch.
bool dominates(const ObjVector& a, const ObjVector& b);

/// Indices of the mutually nondominated members of `points`, in input order.
/// Exact duplicates are all kept (the zero difference is not dominance).
std::vector<std::size_t> nondominated_indices(std::span<const ObjVector> points);

}  // namespace boostdms
