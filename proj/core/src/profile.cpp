#include "boostdms/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace boostdms {

PerformanceProfile performance_profile(const MetricTable& table, bool invert) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  PerformanceProfile out;
  const std::size_t solvers = table.empty() ? 0 : table.front().size();
  for (const auto& row : table) {
    if (row.size() != solvers) throw std::invalid_argument("performance_profile: ragged metric table");
  }

  std::vector<std::vector<double>> ratios;  // kept problems x solvers
  for (std::size_t p = 0; p < table.size(); ++p) {
    std::vector<double> t(solvers, kInf);
    for (std::size_t s = 0; s < solvers; ++s) {
      if (!table[p][s]) continue;
      double v = *table[p][s];
      if (invert) v = 1.0 / v;
      if (std::isfinite(v) && v >= 0) t[s] = v;
    }
    const double best = *std::min_element(t.begin(), t.end());
    if (!std::isfinite(best)) {
      out.dropped_problems.push_back(p);
      continue;
    }
    std::vector<double> r(solvers, kInf);
    for (std::size_t s = 0; s < solvers; ++s) {
      if (!std::isfinite(t[s])) continue;
      if (best > 0) {
        r[s] = t[s] / best;
      } else {
        r[s] = t[s] == 0 ? 1.0 : kInf;
      }
    }
    ratios.push_back(std::move(r));
  }
  out.problems_used = ratios.size();

  std::vector<double> taus;
  for (const auto& r : ratios) {
    for (double v : r) {
      if (std::isfinite(v)) taus.push_back(v);
    }
  }
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  out.curves.resize(solvers);
  const auto total = static_cast<double>(ratios.size());
  for (std::size_t s = 0; s < solvers; ++s) {
    std::vector<double> mine;
    for (const auto& r : ratios) mine.push_back(r[s]);
    std::sort(mine.begin(), mine.end());
    for (double tau : taus) {
      const auto count = std::upper_bound(mine.begin(), mine.end(), tau) - mine.begin();
      out.curves[s].push_back({tau, static_cast<double>(count) / total});
    }
  }
  return out;
}

}  // namespace boostdms
