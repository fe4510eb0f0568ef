#include "boostdms/archive.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "boostdms/dominance.hpp"

namespace boostdms {

Archive::Archive(double dup_tol) : dup_tol_(dup_tol) {
  if (!(dup_tol > 0)) throw std::invalid_argument("Archive: duplicate tolerance must be positive");
}

bool Archive::insert(ArchiveEntry cand) {
  if (!all_finite(cand.fx)) throw std::invalid_argument("Archive::insert: objective values must be finite");
  if (!(cand.alpha > 0)) throw std::invalid_argument("Archive::insert: stepsize must be positive");

  for (const auto& e : entries_) {
    if (max_norm_distance(e.x, cand.x) < dup_tol_) return false;
  }
  for (const auto& e : entries_) {
    if (dominates(e.fx, cand.fx)) return false;
  }
  if (order_.empty()) order_.resize(static_cast<std::size_t>(cand.fx.size()));

  // Old index -> new index after dropping dominated entries (npos when dropped).
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(entries_.size(), npos);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!dominates(cand.fx, entries_[i].fx)) remap[i] = kept++;
  }
  if (kept != entries_.size()) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (remap[i] != npos) entries_[w++] = std::move(entries_[i]);
    }
    entries_.resize(w);
    for (auto& ord : order_) {
      std::size_t o = 0;
      for (std::size_t i : ord) {
        if (remap[i] != npos) ord[o++] = remap[i];
      }
      ord.resize(o);
    }
  }

  const std::size_t id = entries_.size();
  for (std::size_t c = 0; c < order_.size(); ++c) {
    const double v = cand.fx[static_cast<Eigen::Index>(c)];
    auto& ord = order_[c];
    // The new entry has the largest index, so it goes after equal values.
    const auto at = std::upper_bound(ord.begin(), ord.end(), v, [&](double value, std::size_t i) {
      return value < entries_[i].fx[static_cast<Eigen::Index>(c)];
    });
    ord.insert(at, id);
  }
  entries_.push_back(std::move(cand));
  return true;
}

std::optional<std::size_t> Archive::find(const Vec& x) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].x.size() == x.size() && entries_[i].x == x) return i;
  }
  return std::nullopt;
}

void Archive::set_alpha(std::size_t i, double alpha) {
  if (!(alpha > 0)) throw std::invalid_argument("Archive::set_alpha: stepsize must be positive");
  entries_.at(i).alpha = alpha;
}

bool Archive::all_alpha_below(double threshold) const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](const ArchiveEntry& e) { return e.alpha < threshold; });
}

}  // namespace boostdms
