#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boostdms/archive.hpp"
#include "boostdms/profile.hpp"

namespace boostdms {

/// Shortest decimal text that parses back to exactly `v`; infinities as "inf" / "-inf".
std::string format_double(double v);

/// Inverse of format_double. Throws std::invalid_argument.
double parse_double(std::string_view text);

/// Header `x1..xn,f1..fq,alpha` then one row per archive entry.
void write_front_csv(std::ostream& os, const Archive& archive, int n, int q);

/// Reads a front CSV back; n and q are taken from the header.
std::vector<ArchiveEntry> read_front_csv(std::istream& is);

struct MetricsRow {
  std::string problem;
  std::string solver;
  std::optional<double> purity;  // empty front: written as 0
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<double> hypervolume;
  std::size_t evals = 0;
  double mean_time_s = 0.0;
};

/// Header `problem,solver,purity,gamma,delta,hypervolume,evals,mean_time_s`.
/// Missing gamma/delta/hypervolume cells are left empty.
void write_metrics_csv(std::ostream& os, const std::vector<MetricsRow>& rows);

/// Header `metric,solver,tau,rho`.
void write_profile_csv(std::ostream& os, std::string_view metric, const std::vector<std::string>& solvers,
                       const PerformanceProfile& profile);
void write_profile_header(std::ostream& os);

}  // namespace boostdms
