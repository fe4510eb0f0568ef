#include "boostdms/selection.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>

namespace boostdms {

namespace {

int component_count(const Archive& archive) { return static_cast<int>(archive[0].fx.size()); }

// Consecutive gaps in generation order: component, then position.
std::vector<Gap> unranked_gaps(const Archive& archive, GapMode mode, int component) {
  std::vector<Gap> gaps;
  if (archive.size() < 2) return gaps;
  const int q = component_count(archive);
  if (mode == GapMode::Cyclic && (component < 0 || component >= q)) {
    throw std::invalid_argument("ranked_gaps: component out of range");
  }
  const int first = mode == GapMode::Cyclic ? component : 0;
  const int last = mode == GapMode::Cyclic ? component + 1 : q;

  gaps.reserve(static_cast<std::size_t>(last - first) * (archive.size() - 1));
  for (int c = first; c < last; ++c) {
    const auto order = archive.order(c);
    const double lo = archive[order.front()].fx[c];
    const double span = archive[order.back()].fx[c] - lo;
    for (std::size_t j = 0; j + 1 < order.size(); ++j) {
      double delta = archive[order[j + 1]].fx[c] - archive[order[j]].fx[c];
      if (mode == GapMode::Normalized) delta = span > 0 ? delta / span : 0.0;
      gaps.push_back({delta, c, order[j], order[j + 1]});
    }
  }
  return gaps;
}

// Endpoints of a gap ordered by (alpha desc, index asc).
std::array<std::size_t, 2> preferred_endpoints(const Archive& archive, const Gap& gap) {
  const auto& a = archive[gap.lower];
  const auto& b = archive[gap.upper];
  const bool lower_first = a.alpha > b.alpha || (a.alpha == b.alpha && gap.lower < gap.upper);
  return lower_first ? std::array{gap.lower, gap.upper} : std::array{gap.upper, gap.lower};
}

// First gap in ranked order with at least one endpoint of stepsize >= min_alpha.
std::optional<Gap> largest_eligible_gap(const Archive& archive, GapMode mode, int component, double min_alpha) {
  std::optional<Gap> best;
  if (archive.size() < 2) return best;
  const int q = component_count(archive);
  if (mode == GapMode::Cyclic && (component < 0 || component >= q)) {
    throw std::invalid_argument("ranked_gaps: component out of range");
  }
  const int first = mode == GapMode::Cyclic ? component : 0;
  const int last = mode == GapMode::Cyclic ? component + 1 : q;
  for (int c = first; c < last; ++c) {
    const auto order = archive.order(c);
    const double span = archive[order.back()].fx[c] - archive[order.front()].fx[c];
    for (std::size_t j = 0; j + 1 < order.size(); ++j) {
      const auto& lo = archive[order[j]];
      const auto& hi = archive[order[j + 1]];
      if (lo.alpha < min_alpha && hi.alpha < min_alpha) continue;
      double delta = hi.fx[c] - lo.fx[c];
      if (mode == GapMode::Normalized) delta = span > 0 ? delta / span : 0.0;
      if (!best || delta > best->size) best = Gap{delta, c, order[j], order[j + 1]};
    }
  }
  return best;
}

std::optional<std::size_t> first_eligible_by_gap(const Archive& archive, GapMode mode, int component,
                                                 double min_alpha) {
  if (archive.size() == 1) {
    if (archive[0].alpha >= min_alpha) return 0;
    return std::nullopt;
  }
  const auto gap = largest_eligible_gap(archive, mode, component, min_alpha);
  if (!gap) return std::nullopt;
  for (std::size_t i : preferred_endpoints(archive, *gap)) {
    if (archive[i].alpha >= min_alpha) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> best_value_points(const Archive& archive, double min_alpha) {
  std::vector<std::size_t> out;
  for (int c = 0; c < component_count(archive); ++c) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < archive.size(); ++i) {
      if (archive[i].alpha < min_alpha) continue;
      if (!best) {
        best = i;
        continue;
      }
      const auto& e = archive[i];
      const auto& b = archive[*best];
      if (e.fx[c] < b.fx[c] || (e.fx[c] == b.fx[c] && e.alpha > b.alpha)) best = i;
    }
    if (best) out.push_back(*best);
  }
  return out;
}

std::vector<std::size_t> gap_end_points(const Archive& archive, int component, double min_alpha) {
  if (archive.size() == 1) {
    if (archive[0].alpha >= min_alpha) return {0};
    return {};
  }
  const auto gap = largest_eligible_gap(archive, GapMode::Cyclic, component, min_alpha);
  std::vector<std::size_t> ends;
  if (!gap) return ends;
  for (std::size_t i : {gap->lower, gap->upper}) {
    if (archive[i].alpha >= min_alpha) ends.push_back(i);
  }
  return ends;
}

void append_unique(std::vector<std::size_t>& out, const std::vector<std::size_t>& more) {
  for (std::size_t i : more) {
    if (std::find(out.begin(), out.end(), i) == out.end()) out.push_back(i);
  }
}

}  // namespace

std::vector<Gap> ranked_gaps(const Archive& archive, GapMode mode, int component) {
  std::vector<Gap> gaps = unranked_gaps(archive, mode, component);
  std::stable_sort(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.size > b.size; });
  return gaps;
}

std::size_t gamma_gap_select(const Archive& archive, GapMode mode, int component) {
  if (archive.empty()) throw std::invalid_argument("gamma_gap_select: empty archive");
  return *first_eligible_by_gap(archive, mode, component, 0.0);
}

std::vector<std::size_t> select_iterates(const Archive& archive, SelectionKind kind, std::size_t iteration,
                                         double min_alpha) {
  if (archive.empty()) throw std::invalid_argument("select_iterates: empty archive");
  const int q = component_count(archive);
  const int cyc = cyclic_component(iteration, q);
  auto single = [&](GapMode mode, int c) -> std::vector<std::size_t> {
    auto i = first_eligible_by_gap(archive, mode, c, min_alpha);
    if (i) return {*i};
    return {};
  };

  std::vector<std::size_t> out;
  switch (kind) {
    case SelectionKind::GammaMaxGap:
      return single(GapMode::Raw, 0);
    case SelectionKind::GammaNormalized:
      return single(GapMode::Normalized, 0);
    case SelectionKind::GammaCyclic:
      return single(GapMode::Cyclic, cyc);
    case SelectionKind::MultiCenterSpreadPlusBest:
      append_unique(out, best_value_points(archive, min_alpha));
      append_unique(out, gap_end_points(archive, cyc, min_alpha));
      break;
    case SelectionKind::MultiCenterSpreadOrBest:
      if (iteration % 2 == 0) {
        append_unique(out, gap_end_points(archive, cyc, min_alpha));
      } else {
        append_unique(out, best_value_points(archive, min_alpha));
      }
      break;
  }
  if (out.empty()) return single(GapMode::Cyclic, cyc);
  return out;
}

}  // namespace boostdms
