#pragma once

#include <cstddef>
#include <vector>

#include "boostdms/archive.hpp"

namespace boostdms {

enum class SelectionKind {
  GammaMaxGap,                // largest gap over all components
  GammaNormalized,            // same, after min-max normalization of each component
  GammaCyclic,                // largest gap of one component, rotating every iteration
  MultiCenterSpreadPlusBest,  // q best-value points + the two ends of the cyclic largest gap
  MultiCenterSpreadOrBest,    // gap ends on even iterations, best-value points on odd ones
};

enum class GapMode { Raw, Normalized, Cyclic };

/// Gap between two archive entries that are consecutive when sorted by one
/// objective component. `lower` has the smaller value.
struct Gap {
  double size;
  int component;
  std::size_t lower;
  std::size_t upper;
};

/// Every consecutive gap of the considered components (all of them, or only
/// `component` in Cyclic mode), largest first; equal gaps keep component
/// then position order. Sorting ties are broken by archive index.
std::vector<Gap> ranked_gaps(const Archive& archive, GapMode mode, int component = 0);

/// Archive index of the iterate at the largest gap: of its two endpoints, the
/// one with the larger stepsize (then the lower index). A one-entry archive
/// yields 0. Throws std::invalid_argument on an empty archive.
std::size_t gamma_gap_select(const Archive& archive, GapMode mode, int component = 0);

/// Component whose gap drives cyclic selection at `iteration`.
inline int cyclic_component(std::size_t iteration, int q) { return static_cast<int>(iteration % static_cast<std::size_t>(q)); }

/// Iterate points for one outer iteration, as archive indices in processing
/// order, without repeats. Entries with alpha < min_alpha are never chosen;
/// gap-based rules fall through to the next-largest gap instead.
std::vector<std::size_t> select_iterates(const Archive& archive, SelectionKind kind, std::size_t iteration,
                                         double min_alpha = 0.0);

}  // namespace boostdms
