#include "boostdms/front_io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace boostdms {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::string optional_cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

void write_front_csv(std::ostream& os, const Archive& archive, int n, int q) {
  for (int i = 1; i <= n; ++i) os << 'x' << i << ',';
  for (int i = 1; i <= q; ++i) os << 'f' << i << ',';
  os << "alpha\n";
  for (const auto& e : archive.entries()) {
    for (Eigen::Index i = 0; i < e.x.size(); ++i) os << format_double(e.x[i]) << ',';
    for (Eigen::Index i = 0; i < e.fx.size(); ++i) os << format_double(e.fx[i]) << ',';
    os << format_double(e.alpha) << '\n';
  }
}

std::vector<ArchiveEntry> read_front_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("front csv: missing header");
  const auto header = split(line);
  int n = 0;
  int q = 0;
  for (const auto& h : header) {
    if (!h.empty() && h[0] == 'x') ++n;
    if (!h.empty() && h[0] == 'f') ++q;
  }
  if (header.empty() || header.back() != "alpha" || static_cast<int>(header.size()) != n + q + 1) {
    throw std::invalid_argument("front csv: bad header '" + line + "'");
  }
  std::vector<ArchiveEntry> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw std::invalid_argument("front csv: bad row '" + line + "'");
    ArchiveEntry e{Vec(n), ObjVector(q), 0.0};
    for (int i = 0; i < n; ++i) e.x[i] = parse_double(cells[static_cast<std::size_t>(i)]);
    for (int i = 0; i < q; ++i) e.fx[i] = parse_double(cells[static_cast<std::size_t>(n + i)]);
    e.alpha = parse_double(cells.back());
    out.push_back(std::move(e));
  }
  return out;
}

void write_metrics_csv(std::ostream& os, const std::vector<MetricsRow>& rows) {
  os << "problem,solver,purity,gamma,delta,hypervolume,evals,mean_time_s\n";
  for (const auto& r : rows) {
    os << r.problem << ',' << r.solver << ',' << format_double(r.purity.value_or(0.0)) << ','
       << optional_cell(r.gamma) << ',' << optional_cell(r.delta) << ',' << optional_cell(r.hypervolume) << ','
       << r.evals << ',' << format_double(r.mean_time_s) << '\n';
  }
}

void write_profile_header(std::ostream& os) { os << "metric,solver,tau,rho\n"; }

void write_profile_csv(std::ostream& os, std::string_view metric, const std::vector<std::string>& solvers,
                       const PerformanceProfile& profile) {
  for (std::size_t s = 0; s < profile.curves.size() && s < solvers.size(); ++s) {
    for (const auto& pt : profile.curves[s]) {
      os << metric << ',' << solvers[s] << ',' << format_double(pt.tau) << ',' << format_double(pt.rho) << '\n';
    }
  }
}

}  // namespace boostdms
