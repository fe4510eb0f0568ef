#include "boostdms/problem.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace boostdms {

Problem::Problem(std::string name, Vec lb, Vec ub, int q, Evaluator evaluator)
    : name_(std::move(name)),
      lb_(std::move(lb)),
      ub_(std::move(ub)),
      q_(q),
      evaluator_(std::move(evaluator)) {
  if (lb_.size() == 0 || lb_.size() != ub_.size()) {
    throw std::invalid_argument("problem '" + name_ + "': bound vectors must be nonempty and of equal length");
  }
  if (q_ < 2) {
    throw std::invalid_argument("problem '" + name_ + "': at least two objectives are required");
  }
  for (Eigen::Index i = 0; i < lb_.size(); ++i) {
    if (!std::isfinite(lb_[i]) || !std::isfinite(ub_[i]) || !(lb_[i] < ub_[i])) {
      throw std::invalid_argument("problem '" + name_ + "': require finite lb < ub in every coordinate");
    }
  }
  if (!evaluator_) {
    throw std::invalid_argument("problem '" + name_ + "': missing evaluator");
  }
}

bool Problem::contains(const Vec& x) const {
  if (x.size() != lb_.size()) return false;
  return (x.array() >= lb_.array()).all() && (x.array() <= ub_.array()).all();
}

ObjVector Problem::evaluate(const Vec& x) const {
  if (x.size() != lb_.size()) {
    throw std::invalid_argument("problem '" + name_ + "': point has " + std::to_string(x.size()) +
                                " coordinates, expected " + std::to_string(lb_.size()));
  }
  ObjVector f = evaluator_(x);
  if (f.size() != q_) {
    throw std::runtime_error("problem '" + name_ + "': evaluator returned " + std::to_string(f.size()) +
                             " components, expected " + std::to_string(q_));
  }
  return f;
}

bool coerce_objectives(ObjVector& f) {
  if (!f.array().isNaN().any()) return false;
  f.setConstant(std::numeric_limits<double>::infinity());
  return true;
}

bool all_finite(const ObjVector& f) { return f.allFinite(); }

double max_norm_distance(const Vec& a, const Vec& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace boostdms
