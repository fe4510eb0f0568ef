#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "boostdms/eval_cache.hpp"
#include "boostdms/problem.hpp"

namespace boostdms {

/// m(x) = f_center + g'(x - center) + 1/2 (x - center)' H (x - center), H symmetric.
struct QuadraticModel {
  Vec center;
  double f_center = 0.0;
  Vec g;
  Eigen::MatrixXd H;

  double operator()(const Vec& x) const;
  Vec gradient(const Vec& x) const;
};

inline double eval_model(const QuadraticModel& m, const Vec& x) { return m(x); }

/// Cached points around a model center. The center is points[0]; `values`
/// holds one row per point and one column per objective component.
struct InterpolationSet {
  Vec center;
  double radius = 0.0;
  std::vector<Vec> points;
  Eigen::MatrixXd values;

  std::size_t size() const { return points.size(); }
};

/// All finite-valued cache records within max-norm distance `radius` of
/// `center`: the center first, the rest by increasing distance (ties by
/// cache order), at most `cap` points. Throws std::invalid_argument when the
/// center is not cached with finite values.
InterpolationSet select_points(const EvalCache& cache, const Vec& center, double radius, std::size_t cap);

/// (n + 1)(n + 2) / 2, the dimension of the quadratic polynomials in R^n.
std::size_t quadratic_basis_size(int n);

enum class ModelRegime { MinimumFrobenius, Determined, Regression };

ModelRegime regime_for(std::size_t points, int n);

/// The interpolation geometry of one InterpolationSet, factorized once and
/// reused for every objective component.
///
/// Displacements are scaled by the set radius before factorization. The
/// quadratic basis is scaled so that the Euclidean norm of its coefficients
/// equals the Frobenius norm of the Hessian, which turns the minimum
/// Frobenius norm model into a minimum-norm KKT solve.
class ModelFactory {
 public:
  /// nullopt when the pivots reveal a numerically singular geometry; throws
  /// std::invalid_argument for sets with fewer than n + 2 points.
  static std::optional<ModelFactory> factor(const InterpolationSet& set);

  /// Fits one component; `values[j]` belongs to set.points[j]. nullopt when
  /// an interpolating fit misses its data by more than 1e-6 (1 + max |f|).
  std::optional<QuadraticModel> fit(const Eigen::VectorXd& values) const;

  ModelRegime regime() const { return regime_; }

  static constexpr double kPivotRatio = 1e-12;
  static constexpr double kResidualTol = 1e-6;

 private:
  ModelFactory() = default;

  int n_ = 0;
  ModelRegime regime_ = ModelRegime::Determined;
  Vec center_;
  double scale_ = 1.0;
  Eigen::MatrixXd linear_;     // (p-1) x n
  Eigen::MatrixXd quadratic_;  // (p-1) x n(n+1)/2
  std::variant<Eigen::PartialPivLU<Eigen::MatrixXd>, Eigen::ColPivHouseholderQR<Eigen::MatrixXd>> solver_;
};

/// One component model; nullopt when the geometry or the fit is degenerate.
std::optional<QuadraticModel> build_model(const InterpolationSet& set, const Eigen::VectorXd& component_values);

/// Models for every column of set.values from a single factorization.
std::vector<std::optional<QuadraticModel>> build_models(const InterpolationSet& set);

}  // namespace boostdms
