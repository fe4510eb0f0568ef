#include "boostdms/dominance.hpp"

#include <cmath>
#include <stdexcept>

namespace boostdms {

bool dominates(const ObjVector& a, const ObjVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dominates: objective vectors differ in length");
  }
  bool strict = false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::isinf(a[i]) && a[i] > 0) return false;
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

std::vector<std::size_t> nondominated_indices(std::span<const ObjVector> points) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      dominated = j != i && dominates(points[j], points[i]);
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

}  // namespace boostdms
