#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "boostdms/problem.hpp"

namespace boostdms {

struct CacheRecord {
  Vec x;
  ObjVector fx;
  bool finite;  // every component of fx finite; only these feed the models
};

/// Every point evaluated so far, in evaluation order.
///
/// Two points closer than `dup_tol` in max-norm are the same point for the
/// cache. Infinite-valued records are kept so they are never re-evaluated,
/// but they are excluded from model building.
class EvalCache {
 public:
  explicit EvalCache(double dup_tol);

  /// First record (insertion order) with max-norm distance to x strictly below
  /// dup_tol, or nullptr on a miss.
  const CacheRecord* lookup(const Vec& x) const;
  std::optional<std::size_t> lookup_index(const Vec& x) const;

  /// Indices, ascending, of the records with max-norm distance to x at most `radius`.
  std::vector<std::size_t> within(const Vec& x, double radius) const;

  /// Index of the record whose x equals `x` exactly.
  std::optional<std::size_t> find_exact(const Vec& x) const;

  /// Stores the outcome of one true evaluator call and bumps eval_count.
  std::size_t record(Vec x, ObjVector fx);

  std::size_t eval_count() const { return eval_count_; }
  std::size_t size() const { return records_.size(); }
  double dup_tol() const { return dup_tol_; }
  std::span<const CacheRecord> records() const { return records_; }
  const CacheRecord& operator[](std::size_t i) const { return records_[i]; }

 private:
  double key(const Vec& x) const;

  double dup_tol_;
  std::size_t eval_count_ = 0;
  std::vector<CacheRecord> records_;
  // Records indexed by a fixed linear projection w.x; |w.x - w.y| <= |w|_1 * ||x - y||_inf
  // bounds the candidate range for a lookup.
  std::multimap<double, std::size_t> index_;
  Vec weights_;
};

}  // namespace boostdms
