#include "boostdms/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "boostdms/dominance.hpp"

namespace boostdms {

namespace {

std::string describe(const ObjVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// Component values of the front, sorted, framed by the reference extremes.
std::vector<double> framed_values(const FrontSet& front, const ReferenceData& ref, Eigen::Index c) {
  std::vector<double> v;
  v.reserve(front.points.size() + 2);
  v.push_back(ref.lower_extreme[c]);
  for (const auto& p : front.points) v.push_back(p[c]);
  std::sort(v.begin() + 1, v.end());
  v.push_back(ref.upper_extreme[c]);
  return v;
}

void require_nonempty(const FrontSet& front, const char* what) {
  if (front.points.empty()) throw std::invalid_argument(std::string(what) + ": empty front");
}

double volume_2d(std::vector<const ObjVector*> pts, const Vec& upper) {
  std::sort(pts.begin(), pts.end(), [](const ObjVector* a, const ObjVector* b) {
    return (*a)[0] != (*b)[0] ? (*a)[0] < (*b)[0] : (*a)[1] < (*b)[1];
  });
  double area = 0.0;
  double ceiling = upper[1];
  for (const ObjVector* p : pts) {
    if ((*p)[1] < ceiling) {
      area += (upper[0] - (*p)[0]) * (ceiling - (*p)[1]);
      ceiling = (*p)[1];
    }
  }
  return area;
}

double volume_rec(std::vector<const ObjVector*> pts, const Vec& upper, Eigen::Index dims) {
  if (pts.empty()) return 0.0;
  if (dims == 1) {
    double lo = upper[0];
    for (const ObjVector* p : pts) lo = std::min(lo, (*p)[0]);
    return upper[0] - lo;
  }
  if (dims == 2) return volume_2d(std::move(pts), upper);
  const Eigen::Index last = dims - 1;
  std::stable_sort(pts.begin(), pts.end(),
                   [&](const ObjVector* a, const ObjVector* b) { return (*a)[last] < (*b)[last]; });
  double vol = 0.0;
  std::vector<const ObjVector*> slab;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    slab.push_back(pts[k]);
    const double top = k + 1 < pts.size() ? (*pts[k + 1])[last] : upper[last];
    const double height = top - (*pts[k])[last];
    if (height > 0) vol += height * volume_rec(slab, upper, last);
  }
  return vol;
}

}  // namespace

FrontSet make_front(std::string problem, std::string solver, std::vector<ObjVector> points) {
  for (const auto& p : points) {
    if (!all_finite(p)) throw std::invalid_argument("front " + solver + "/" + problem + ": non-finite point " + describe(p));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i != j && dominates(points[i], points[j])) {
        throw std::invalid_argument("front " + solver + "/" + problem + ": point " + describe(points[i]) +
                                    " dominates " + describe(points[j]));
      }
    }
  }
  return {std::move(problem), std::move(solver), std::move(points)};
}

ReferenceData build_reference(std::span<const FrontSet> fronts) {
  std::vector<ObjVector> all;
  for (const auto& f : fronts) all.insert(all.end(), f.points.begin(), f.points.end());
  if (all.empty()) throw MetricsUnavailable("build_reference: every front is empty");

  ReferenceData ref;
  for (std::size_t i : nondominated_indices(all)) {
    const bool repeat = std::any_of(ref.front.begin(), ref.front.end(), [&](const ObjVector& r) { return r == all[i]; });
    if (!repeat) ref.front.push_back(all[i]);
  }
  ref.lower_extreme = all.front();
  ref.upper_extreme = all.front();
  for (const auto& p : all) {
    ref.lower_extreme = ref.lower_extreme.cwiseMin(p);
    ref.upper_extreme = ref.upper_extreme.cwiseMax(p);
  }
  const Vec range = ref.upper_extreme - ref.lower_extreme;
  ref.upper_corner = ref.upper_extreme;
  for (Eigen::Index c = 0; c < range.size(); ++c) {
    ref.upper_corner[c] += range[c] > 0 ? 0.01 * range[c] : 1.0;
  }
  ref.ideal = ref.lower_extreme;
  return ref;
}

std::optional<double> purity(const FrontSet& front, const ReferenceData& ref) {
  if (front.points.empty()) return std::nullopt;
  std::size_t kept = 0;
  for (const auto& p : front.points) {
    if (std::any_of(ref.front.begin(), ref.front.end(), [&](const ObjVector& r) { return r == p; })) ++kept;
  }
  return static_cast<double>(kept) / static_cast<double>(front.points.size());
}

double gamma_metric(const FrontSet& front, const ReferenceData& ref) {
  require_nonempty(front, "gamma_metric");
  double gamma = 0.0;
  for (Eigen::Index c = 0; c < ref.lower_extreme.size(); ++c) {
    const auto v = framed_values(front, ref, c);
    for (std::size_t j = 0; j + 1 < v.size(); ++j) gamma = std::max(gamma, v[j + 1] - v[j]);
  }
  return gamma;
}

double delta_metric(const FrontSet& front, const ReferenceData& ref) {
  require_nonempty(front, "delta_metric");
  const std::size_t n = front.points.size();
  double delta = 0.0;
  for (Eigen::Index c = 0; c < ref.lower_extreme.size(); ++c) {
    const auto v = framed_values(front, ref, c);
    const double first = v[1] - v[0];
    const double last = v[n + 1] - v[n];
    double mean = 0.0;
    for (std::size_t j = 1; j < n; ++j) mean += v[j + 1] - v[j];
    if (n > 1) mean /= static_cast<double>(n - 1);
    double spread = 0.0;
    for (std::size_t j = 1; j < n; ++j) spread += std::abs((v[j + 1] - v[j]) - mean);
    const double denom = first + last + static_cast<double>(n - 1) * mean;
    if (denom > 0) delta = std::max(delta, (first + last + spread) / denom);
  }
  return delta;
}

double dominated_volume(std::span<const ObjVector> points, const Vec& upper) {
  std::vector<const ObjVector*> pts;
  pts.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != upper.size()) throw std::invalid_argument("dominated_volume: dimension mismatch");
    if ((p.array() > upper.array()).any()) {
      throw std::invalid_argument("dominated_volume: point " + describe(p) + " exceeds the upper corner");
    }
    pts.push_back(&p);
  }
  return volume_rec(std::move(pts), upper, upper.size());
}

double hypervolume(const FrontSet& front, const ReferenceData& ref) {
  const double box = (ref.upper_corner - ref.ideal).prod();
  return dominated_volume(front.points, ref.upper_corner) / box;
}

}  // namespace boostdms
