#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace boostdms {

/// Metric table: rows are problems, columns solvers; nullopt marks a failed run.
using MetricTable = std::vector<std::vector<std::optional<double>>>;

struct ProfilePoint {
  double tau;
  double rho;
};

struct PerformanceProfile {
  /// curves[s] samples rho_s at every distinct finite ratio, ascending tau.
  std::vector<std::vector<ProfilePoint>> curves;
  std::size_t problems_used = 0;
  std::vector<std::size_t> dropped_problems;  // rows where every solver failed
};

/// Dolan-More profiles: r_ps = t_ps / min_s t_ps, rho_s(tau) = |{p : r_ps <= tau}| / |P|.
/// With `invert` (higher-is-better metrics) t is replaced by 1/t first.
/// Missing, non-finite or (after inversion) infinite values never count.
/// When the row minimum is 0, entries equal to 0 get ratio 1 and the rest +inf.
PerformanceProfile performance_profile(const MetricTable& table, bool invert);

}  // namespace boostdms
