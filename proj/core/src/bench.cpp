#include "boostdms/bench.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>

#include "boostdms/front_io.hpp"
#include "boostdms/metrics.hpp"
#include "boostdms/profile.hpp"
#include "boostdms/registry.hpp"

namespace boostdms {

namespace {

bool same_archive(const Archive& a, const Archive& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].x != b[i].x || a[i].fx != b[i].fx || a[i].alpha != b[i].alpha) return false;
  }
  return true;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  return os;
}

void validate(const BenchConfig& cfg) {
  if (cfg.repetitions < 1) throw UsageError("repetitions must be >= 1");
  if (cfg.workers < 1) throw UsageError("workers must be >= 1");
  if (cfg.stop.max_evals == 0) throw UsageError("max-evals must be positive");
  if (!(cfg.stop.min_alpha > 0)) throw UsageError("min-alpha must be positive");
  if (cfg.strategies.empty()) throw UsageError("no strategy given");
  for (const auto& s : cfg.strategies) make_strategy(s, cfg.workers, cfg.stop);
}

}  // namespace

std::vector<std::string> strategy_names() {
  return {"seq", "within-levels", "2-batches", "no-levels", "gamma-normalized", "gamma-cyclic", "multicenter-plus",
          "multicenter-alt"};
}

StrategyConfig make_strategy(std::string_view name, int workers, const StopRule& stop, std::uint64_t seed,
                             bool model_parallel) {
  StrategyConfig s;
  s.name = std::string(name);
  s.workers = workers;
  s.options.stop = stop;
  s.options.seed = seed;
  s.options.search.parallel = model_parallel ? ParallelModels::All : ParallelModels::None;
  if (name == "seq") {
    s.workers = 1;
    s.options.search.parallel = ParallelModels::None;
  } else if (name == "within-levels") {
  } else if (name == "2-batches") {
    s.options.search.batching = EvalBatching::TwoBatches;
  } else if (name == "no-levels") {
    s.options.search.batching = EvalBatching::NoLevels;
  } else if (name == "gamma-normalized") {
    s.options.selection = SelectionKind::GammaNormalized;
  } else if (name == "gamma-cyclic") {
    s.options.selection = SelectionKind::GammaCyclic;
  } else if (name == "multicenter-plus") {
    s.options.selection = SelectionKind::MultiCenterSpreadPlusBest;
  } else if (name == "multicenter-alt") {
    s.options.selection = SelectionKind::MultiCenterSpreadOrBest;
  } else {
    throw UsageError("unknown strategy '" + s.name + "'");
  }
  return s;
}

double CellResult::mean_wall() const {
  if (wall_seconds.empty()) return 0.0;
  return std::accumulate(wall_seconds.begin(), wall_seconds.end(), 0.0) / static_cast<double>(wall_seconds.size());
}

double CellResult::min_wall() const {
  return wall_seconds.empty() ? 0.0 : *std::min_element(wall_seconds.begin(), wall_seconds.end());
}

std::vector<std::string> resolve_problems(const BenchConfig& cfg) {
  if (cfg.external) return {cfg.external->name};
  std::vector<std::string> names;
  if (!cfg.suite.empty()) {
    try {
      names = suite_problems(cfg.suite);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const auto known = registry_names();
  for (const auto& p : cfg.problems) {
    if (std::find(known.begin(), known.end(), p) == known.end()) throw UsageError("unknown problem '" + p + "'");
    if (std::find(names.begin(), names.end(), p) == names.end()) names.push_back(p);
  }
  if (names.empty()) throw UsageError("no problem selected");
  return names;
}

MatrixResult run_matrix(const BenchConfig& cfg, std::ostream& log) {
  validate(cfg);
  const auto problems = resolve_problems(cfg);
  std::filesystem::create_directories(cfg.out_dir / "fronts");

  MatrixResult result;
  for (const auto& pname : problems) {
    const Problem problem = cfg.external ? make_external_problem(*cfg.external) : make_problem(pname);
    for (const auto& sname : cfg.strategies) {
      const StrategyConfig strat = make_strategy(sname, cfg.workers, cfg.stop, cfg.seed, cfg.model_parallel);
      BatchExecutor executor({strat.workers, cfg.delay});
      CellResult cell{pname, sname, RunReport{}, {}, true};
      std::optional<Archive> first;
      for (int rep = 0; rep < cfg.repetitions; ++rep) {
        RunReport report = run(problem, strat.options, executor);
        cell.wall_seconds.push_back(report.wall_seconds);
        if (!first) {
          first = report.archive;
        } else if (!same_archive(*first, report.archive)) {
          cell.deterministic = false;
          log << "determinism check failed: " << pname << " / " << sname << " repetition " << rep + 1
              << " differs from repetition 1 (" << report.archive.size() << " vs " << first->size() << " points)\n";
        }
        cell.report = std::move(report);
      }
      log << pname << " / " << sname << ": " << cell.report.archive.size() << " points, " << cell.report.evals
          << " evals, " << cell.report.iterations << " iterations, mean " << cell.mean_wall() << " s\n";
      auto os = open_out(cfg.out_dir / "fronts" / (pname + "__" + sname + ".csv"));
      write_front_csv(os, cell.report.archive, problem.n(), problem.q());
      result.deterministic = result.deterministic && cell.deterministic;
      result.cells.push_back(std::move(cell));
    }
  }

  // Metrics per problem against the union of all strategies' fronts.
  const std::size_t ns = cfg.strategies.size();
  std::vector<MetricsRow> rows;
  std::map<std::string, MetricTable> tables;
  for (const char* m : {"purity", "gamma", "delta", "hypervolume"}) tables[m] = MetricTable(problems.size());
  for (std::size_t p = 0; p < problems.size(); ++p) {
    std::vector<FrontSet> fronts;
    for (std::size_t s = 0; s < ns; ++s) {
      const CellResult& cell = result.cells[p * ns + s];
      std::vector<ObjVector> pts;
      for (const auto& e : cell.report.archive.entries()) pts.push_back(e.fx);
      fronts.push_back(make_front(cell.problem, cell.strategy, std::move(pts)));
    }
    std::optional<ReferenceData> ref;
    try {
      ref = build_reference(fronts);
    } catch (const MetricsUnavailable& e) {
      log << problems[p] << ": " << e.what() << '\n';
    }
    for (std::size_t s = 0; s < ns; ++s) {
      const CellResult& cell = result.cells[p * ns + s];
      MetricsRow row{cell.problem, cell.strategy, {}, {}, {}, {}, cell.report.evals, cell.mean_wall()};
      if (ref && !fronts[s].points.empty()) {
        row.purity = purity(fronts[s], *ref);
        row.gamma = gamma_metric(fronts[s], *ref);
        row.delta = delta_metric(fronts[s], *ref);
        row.hypervolume = hypervolume(fronts[s], *ref);
      } else {
        log << cell.problem << " / " << cell.strategy << ": empty front, purity reported as 0\n";
      }
      tables["purity"][p].push_back(row.purity);
      tables["gamma"][p].push_back(row.gamma);
      tables["delta"][p].push_back(row.delta);
      tables["hypervolume"][p].push_back(row.hypervolume);
      rows.push_back(std::move(row));
    }
  }
  {
    auto os = open_out(cfg.out_dir / "metrics.csv");
    write_metrics_csv(os, rows);
  }
  {
    auto os = open_out(cfg.out_dir / "profiles.csv");
    write_profile_header(os);
    for (const char* m : {"purity", "gamma", "delta", "hypervolume"}) {
      const bool invert = std::string_view(m) == "purity" || std::string_view(m) == "hypervolume";
      const PerformanceProfile prof = performance_profile(tables[m], invert);
      for (std::size_t p : prof.dropped_problems) {
        log << "profile " << m << ": every strategy failed on " << problems[p] << ", problem dropped\n";
      }
      write_profile_csv(os, m, cfg.strategies, prof);
    }
  }
  {
    auto os = open_out(cfg.out_dir / "summary.csv");
    os << "problem,strategy,workers,reps,evals,iterations,points,mean_wall_s,min_wall_s,deterministic\n";
    for (const auto& c : result.cells) {
      const int workers = make_strategy(c.strategy, cfg.workers, cfg.stop).workers;
      os << c.problem << ',' << c.strategy << ',' << workers << ',' << c.wall_seconds.size() << ',' << c.report.evals
         << ',' << c.report.iterations << ',' << c.report.archive.size() << ',' << format_double(c.mean_wall()) << ','
         << format_double(c.min_wall()) << ',' << (c.deterministic ? "yes" : "no") << '\n';
    }
  }
  return result;
}

}  // namespace boostdms
