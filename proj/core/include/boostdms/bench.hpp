#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boostdms/driver.hpp"
#include "boostdms/external_evaluator.hpp"

namespace boostdms {

/// Unknown problem, suite or strategy, or an invalid numeric setting.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// seq, within-levels, 2-batches, no-levels, gamma-normalized, gamma-cyclic,
/// multicenter-plus, multicenter-alt.
std::vector<std::string> strategy_names();

struct StrategyConfig {
  std::string name;
  DriverOptions options;
  int workers = 1;
};

/// `seq` always runs on one worker; every other strategy gets `workers`.
/// With `model_parallel` the parallel variants also build and minimize
/// models concurrently. Throws UsageError.
StrategyConfig make_strategy(std::string_view name, int workers, const StopRule& stop, std::uint64_t seed = 0,
                             bool model_parallel = false);

struct BenchConfig {
  std::string suite;                  // may be empty when problems are listed
  std::vector<std::string> problems;  // appended after the suite's
  std::vector<std::string> strategies{"seq"};
  int workers = 8;
  StopRule stop;
  std::chrono::microseconds delay{0};
  int repetitions = 5;
  std::filesystem::path out_dir = "bench_out";
  std::optional<ExternalSpec> external;  // replaces the registry problems
  std::uint64_t seed = 0;
  bool model_parallel = false;
};

struct CellResult {
  std::string problem;
  std::string strategy;
  RunReport report;                  // from the last repetition
  std::vector<double> wall_seconds;  // one per repetition
  bool deterministic = true;
  double mean_wall() const;
  double min_wall() const;
};

struct MatrixResult {
  std::vector<CellResult> cells;
  bool deterministic = true;
};

/// Problem names selected by the suite plus the explicit list, without
/// repeats. Throws UsageError.
std::vector<std::string> resolve_problems(const BenchConfig& cfg);

/// Runs every (problem, strategy) cell `repetitions` times, one cell at a
/// time, and writes under cfg.out_dir:
///   fronts/<problem>__<strategy>.csv, metrics.csv, profiles.csv, summary.csv.
/// Progress and determinism diagnostics go to `log`. Throws UsageError
/// before running anything if the configuration is invalid.
MatrixResult run_matrix(const BenchConfig& cfg, std::ostream& log);

}  // namespace boostdms
