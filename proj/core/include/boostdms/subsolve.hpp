#pragma once

#include <cstdint>
#include <vector>

#include "boostdms/models.hpp"

namespace boostdms {

/// Global minimizer of g's + 1/2 s'Hs over the Euclidean ball ||s|| <= radius
/// (eigendecomposition of H plus Newton iteration on the secular equation,
/// hard case included).
Vec solve_trust_region(const Vec& g, const Eigen::MatrixXd& H, double radius);

/// Minimizes one model over the Euclidean ball of `radius` around its
/// center and projects the result onto [lb, ub]. If the projection lands
/// above m(center), the best point on the segment from the center to the
/// projected point is returned instead, so m(result) <= m(center).
Vec min_single_model(const QuadraticModel& m, double radius, const Vec& lb, const Vec& ub);

/// min max_{i} m_i(x)  s.t.  ||x - center||_inf <= radius, lb <= x <= ub.
struct ChebyshevSubproblem {
  std::vector<QuadraticModel> models;  // at least two
  Vec center;
  double radius = 0.0;
  Vec lb;
  Vec ub;
  std::uint64_t seed = 0;  // offsets the quasi-random starting points
};

/// Multistart projected descent on the pointwise maximum of the models.
/// Starts: the center, each single-model minimizer clipped into the feasible
/// box, and two quasi-random points. Each start follows the min-norm element
/// of the convex hull of the near-active gradients with Armijo backtracking.
/// Guarantees feasibility and phi(result) <= phi(center); not global
/// optimality. Throws std::invalid_argument for fewer than two models.
Vec min_chebyshev(const ChebyshevSubproblem& problem);

/// Minimum-norm point of the convex hull of the rows of `vectors` (at most
/// a handful of rows; subsets are enumerated).
Vec min_norm_hull_point(const Eigen::MatrixXd& vectors);

}  // namespace boostdms
