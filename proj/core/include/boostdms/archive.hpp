#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "boostdms/problem.hpp"

namespace boostdms {

/// A feasible nondominated point with its stepsize.
struct ArchiveEntry {
  Vec x;
  ObjVector fx;  // all components finite
  double alpha;  // > 0
};

/// The list of feasible nondominated points. Entries are mutually
/// nondominated and pairwise farther apart than the duplicate tolerance
/// (max-norm) in decision space.
class Archive {
 public:
  explicit Archive(double dup_tol);

  /// Inserts `cand` unless it duplicates or is dominated by an entry (duplicate
  /// test first); on insertion every entry it dominates is dropped, survivors
  /// keep their relative order and `cand` goes last. Returns whether the
  /// archive changed. Throws std::invalid_argument for non-finite fx or alpha <= 0.
  bool insert(ArchiveEntry cand);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const ArchiveEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const ArchiveEntry> entries() const { return entries_; }
  double dup_tol() const { return dup_tol_; }

  /// Index of the entry whose x equals `x` exactly.
  std::optional<std::size_t> find(const Vec& x) const;

  void set_alpha(std::size_t i, double alpha);

  /// Entry indices sorted by objective component c, ties by index.
  /// Kept up to date on every insertion.
  std::span<const std::size_t> order(int c) const { return order_[static_cast<std::size_t>(c)]; }

  /// True when every entry has alpha < threshold (vacuously true when empty).
  bool all_alpha_below(double threshold) const;

 private:
  double dup_tol_;
  std::vector<ArchiveEntry> entries_;
  std::vector<std::vector<std::size_t>> order_;
};

}  // namespace boostdms
