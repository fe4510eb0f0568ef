#include "boostdms/eval_cache.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace boostdms {

EvalCache::EvalCache(double dup_tol) : dup_tol_(dup_tol) {
  if (!(dup_tol > 0)) throw std::invalid_argument("EvalCache: duplicate tolerance must be positive");
}

double EvalCache::key(const Vec& x) const { return weights_.dot(x); }

std::optional<std::size_t> EvalCache::lookup_index(const Vec& x) const {
  if (records_.empty()) return std::nullopt;
  if (records_.front().x.size() != x.size()) {
    throw std::invalid_argument("EvalCache::lookup: dimension mismatch");
  }
  const double k = key(x);
  const double reach = weights_.cwiseAbs().sum() * dup_tol_ * (1.0 + 1e-9);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (auto it = index_.lower_bound(k - reach); it != index_.end() && it->first <= k + reach; ++it) {
    if (it->second < best && max_norm_distance(records_[it->second].x, x) < dup_tol_) best = it->second;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::vector<std::size_t> EvalCache::within(const Vec& x, double radius) const {
  std::vector<std::size_t> out;
  if (records_.empty()) return out;
  if (records_.front().x.size() != x.size()) throw std::invalid_argument("EvalCache::within: dimension mismatch");
  const double k = key(x);
  const double reach = weights_.cwiseAbs().sum() * radius * (1.0 + 1e-9) + 1e-300;
  for (auto it = index_.lower_bound(k - reach); it != index_.end() && it->first <= k + reach; ++it) {
    if (max_norm_distance(records_[it->second].x, x) <= radius) out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> EvalCache::find_exact(const Vec& x) const {
  for (std::size_t i : within(x, 0.0)) {
    if (records_[i].x == x) return i;
  }
  return std::nullopt;
}

const CacheRecord* EvalCache::lookup(const Vec& x) const {
  auto i = lookup_index(x);
  return i ? &records_[*i] : nullptr;
}

std::size_t EvalCache::record(Vec x, ObjVector fx) {
  if (!records_.empty() && records_.front().x.size() != x.size()) {
    throw std::invalid_argument("EvalCache::record: dimension mismatch");
  }
  if (weights_.size() == 0) {
    // Weights in [1, 2) from a golden-ratio sequence, so poll patterns along one axis do not collide.
    weights_.resize(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      double w = 0.5 + static_cast<double>(i + 1) * 0.6180339887498949;
      weights_[i] = 1.0 + (w - std::floor(w));
    }
  }
  const bool finite = all_finite(fx);
  const double k = key(x);
  records_.push_back({std::move(x), std::move(fx), finite});
  index_.emplace(k, records_.size() - 1);
  ++eval_count_;
  return records_.size() - 1;
}

}  // namespace boostdms
