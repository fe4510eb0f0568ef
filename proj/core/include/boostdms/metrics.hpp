#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "boostdms/problem.hpp"

namespace boostdms {

class MetricsUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Final front of one solver on one problem.
struct FrontSet {
  std::string problem;
  std::string solver;
  std::vector<ObjVector> points;
};

/// Builds a FrontSet after checking that the points are finite and mutually
/// nondominated; throws std::invalid_argument naming the offending pair.
FrontSet make_front(std::string problem, std::string solver, std::vector<ObjVector> points);

/// Cross-solver reference for one problem.
struct ReferenceData {
  std::vector<ObjVector> front;  // nondominated union of all fronts, exact repeats removed
  Vec lower_extreme;             // per component min over the union
  Vec upper_extreme;             // per component max over the union
  Vec upper_corner;              // upper_extreme + 1% of the range (1.0 when the range is 0)
  Vec ideal;                     // same as lower_extreme; lower corner for scaling
};

/// Throws MetricsUnavailable when every front is empty.
ReferenceData build_reference(std::span<const FrontSet> fronts);

/// |front ∩ reference| / |front| by exact vector equality; nullopt for an empty front.
std::optional<double> purity(const FrontSet& front, const ReferenceData& ref);

/// Largest gap between consecutive values of any component, with the
/// reference extremes added at both ends.
double gamma_metric(const FrontSet& front, const ReferenceData& ref);

/// Gap uniformity: max over components of
///   (d_0 + d_N + sum_j |d_j - mean|) / (d_0 + d_N + (N - 1) mean)
/// with d_0, d_N the gaps to the reference extremes and mean the average of
/// the N - 1 interior gaps (the mean term vanishes when N = 1). Components
/// whose gaps are all zero contribute 0.
double delta_metric(const FrontSet& front, const ReferenceData& ref);

/// Volume of the union of boxes [x, upper] for x in points (exact, recursive
/// slicing over the last coordinate). Points must satisfy x <= upper.
double dominated_volume(std::span<const ObjVector> points, const Vec& upper);

/// dominated_volume scaled by the volume of [ideal, upper_corner], in [0, 1].
/// Throws std::invalid_argument if a front point is not <= upper_corner.
double hypervolume(const FrontSet& front, const ReferenceData& ref);

}  // namespace boostdms
