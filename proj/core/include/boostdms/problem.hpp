#pragma once

#include <functional>
#include <string>

#include <Eigen/Core>

namespace boostdms {

/// Decision vector.
using Vec = Eigen::VectorXd;
/// Objective vector; components may be +inf (hidden constraint / failed evaluation).
using ObjVector = Eigen::VectorXd;

/// Bound-constrained multiobjective problem  min F(x) = (f_1..f_q)  s.t. lb <= x <= ub.
///
/// The evaluator must be deterministic and safe to call from several threads
/// at once; the batch executor calls it concurrently.
class Problem {
 public:
  using Evaluator = std::function<ObjVector(const Vec&)>;

  /// Throws std::invalid_argument unless lb < ub componentwise (finite) and q >= 2.
  Problem(std::string name, Vec lb, Vec ub, int q, Evaluator evaluator);

  const std::string& name() const { return name_; }
  int n() const { return static_cast<int>(lb_.size()); }
  int q() const { return q_; }
  const Vec& lb() const { return lb_; }
  const Vec& ub() const { return ub_; }
  Vec centroid() const { return 0.5 * (lb_ + ub_); }
  bool contains(const Vec& x) const;

  /// Raw evaluator call. Throws std::invalid_argument for a point of the wrong
  /// length and std::runtime_error if the result length is not q.
  ObjVector evaluate(const Vec& x) const;

 private:
  std::string name_;
  Vec lb_;
  Vec ub_;
  int q_;
  Evaluator evaluator_;
};

/// Maps an evaluator result onto the admissible value set: any NaN turns the
/// whole vector into +inf. Returns true when a NaN was found.
bool coerce_objectives(ObjVector& f);

bool all_finite(const ObjVector& f);

/// max_i |a_i - b_i|
double max_norm_distance(const Vec& a, const Vec& b);

}  // namespace boostdms
