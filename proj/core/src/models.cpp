#include "boostdms/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace boostdms {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Basis for the quadratic part in scaled coordinates u: u_i^2 / 2 on the
// diagonal, u_i u_j / sqrt(2) off it, pairs (i <= j) in row-major order.
void fill_quadratic_row(const Vec& u, Eigen::Ref<Eigen::RowVectorXd, 0, Eigen::InnerStride<>> row) {
  const Eigen::Index n = u.size();
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    row[k++] = 0.5 * u[i] * u[i];
    for (Eigen::Index j = i + 1; j < n; ++j) row[k++] = kInvSqrt2 * u[i] * u[j];
  }
}

Eigen::MatrixXd hessian_from_coefficients(const Eigen::VectorXd& c, Eigen::Index n) {
  Eigen::MatrixXd H(n, n);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    H(i, i) = c[k++];
    for (Eigen::Index j = i + 1; j < n; ++j) {
      H(i, j) = kInvSqrt2 * c[k];
      H(j, i) = H(i, j);
      ++k;
    }
  }
  return H;
}

template <typename Diag>
bool pivots_ok(const Diag& diag) {
  if (diag.size() == 0) return true;
  const double big = diag.cwiseAbs().maxCoeff();
  const double small = diag.cwiseAbs().minCoeff();
  return big > 0 && std::isfinite(big) && small >= ModelFactory::kPivotRatio * big;
}

}  // namespace

double QuadraticModel::operator()(const Vec& x) const {
  const Vec s = x - center;
  return f_center + g.dot(s) + 0.5 * s.dot(H * s);
}

Vec QuadraticModel::gradient(const Vec& x) const { return g + H * (x - center); }

InterpolationSet select_points(const EvalCache& cache, const Vec& center, double radius, std::size_t cap) {
  const auto records = cache.records();
  std::optional<std::size_t> center_index = cache.find_exact(center);
  if (!center_index) center_index = cache.lookup_index(center);
  if (!center_index || !records[*center_index].finite) {
    throw std::invalid_argument("select_points: the center must be a cached finite-valued point");
  }

  struct Candidate {
    double distance;
    std::size_t index;
  };
  std::vector<Candidate> near;
  for (std::size_t i : cache.within(center, radius)) {
    if (i == *center_index || !records[i].finite) continue;
    near.push_back({max_norm_distance(records[i].x, center), i});
  }
  std::sort(near.begin(), near.end(), [](const Candidate& a, const Candidate& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
  });

  const std::size_t p = std::min(cap, near.size() + 1);
  InterpolationSet set;
  set.center = records[*center_index].x;
  set.radius = radius;
  set.points.reserve(p);
  set.values.resize(static_cast<Eigen::Index>(p), records[*center_index].fx.size());
  set.points.push_back(records[*center_index].x);
  set.values.row(0) = records[*center_index].fx.transpose();
  for (std::size_t k = 1; k < p; ++k) {
    const auto& r = records[near[k - 1].index];
    set.points.push_back(r.x);
    set.values.row(static_cast<Eigen::Index>(k)) = r.fx.transpose();
  }
  return set;
}

std::size_t quadratic_basis_size(int n) {
  const auto m = static_cast<std::size_t>(n);
  return (m + 1) * (m + 2) / 2;
}

ModelRegime regime_for(std::size_t points, int n) {
  const std::size_t q = quadratic_basis_size(n);
  if (points < q) return ModelRegime::MinimumFrobenius;
  if (points == q) return ModelRegime::Determined;
  return ModelRegime::Regression;
}

std::optional<ModelFactory> ModelFactory::factor(const InterpolationSet& set) {
  const int n = static_cast<int>(set.center.size());
  const std::size_t p = set.size();
  if (p < static_cast<std::size_t>(n) + 2) {
    throw std::invalid_argument("ModelFactory: need at least n + 2 points");
  }
  if (!(set.radius > 0)) throw std::invalid_argument("ModelFactory: radius must be positive");

  ModelFactory f;
  f.n_ = n;
  f.regime_ = regime_for(p, n);
  f.center_ = set.center;
  f.scale_ = set.radius;

  const auto rows = static_cast<Eigen::Index>(p - 1);
  const Eigen::Index nq = static_cast<Eigen::Index>(n) * (n + 1) / 2;
  f.linear_.resize(rows, n);
  f.quadratic_.resize(rows, nq);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const Vec u = (set.points[static_cast<std::size_t>(j + 1)] - set.center) / f.scale_;
    f.linear_.row(j) = u.transpose();
    fill_quadratic_row(u, f.quadratic_.row(j));
  }

  switch (f.regime_) {
    case ModelRegime::MinimumFrobenius: {
      const Eigen::Index dim = rows + n;
      Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(dim, dim);
      kkt.topLeftCorner(rows, rows) = f.quadratic_ * f.quadratic_.transpose();
      kkt.topRightCorner(rows, n) = f.linear_;
      kkt.bottomLeftCorner(n, rows) = f.linear_.transpose();
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);
      if (!pivots_ok(lu.matrixLU().diagonal())) return std::nullopt;
      f.solver_ = std::move(lu);
      break;
    }
    case ModelRegime::Determined: {
      Eigen::MatrixXd a(rows, n + nq);
      a << f.linear_, f.quadratic_;
      Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
      if (!pivots_ok(lu.matrixLU().diagonal())) return std::nullopt;
      f.solver_ = std::move(lu);
      break;
    }
    case ModelRegime::Regression: {
      Eigen::MatrixXd a(rows, n + nq);
      a << f.linear_, f.quadratic_;
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
      const Eigen::Index k = std::min(a.rows(), a.cols());
      if (!pivots_ok(qr.matrixQR().diagonal().head(k))) return std::nullopt;
      f.solver_ = std::move(qr);
      break;
    }
  }
  return f;
}

std::optional<QuadraticModel> ModelFactory::fit(const Eigen::VectorXd& values) const {
  const Eigen::Index rows = linear_.rows();
  if (values.size() != rows + 1) throw std::invalid_argument("ModelFactory::fit: value count mismatch");
  const double f0 = values[0];
  const Eigen::VectorXd rhs = values.tail(rows).array() - f0;
  if (!std::isfinite(f0) || !rhs.allFinite()) return std::nullopt;

  Eigen::VectorXd gu;
  Eigen::VectorXd coeffs;
  if (regime_ == ModelRegime::MinimumFrobenius) {
    Eigen::VectorXd full(rows + n_);
    full << rhs, Eigen::VectorXd::Zero(n_);
    const Eigen::VectorXd sol = std::get<0>(solver_).solve(full);
    const Eigen::VectorXd lambda = sol.head(rows);
    gu = sol.tail(n_);
    coeffs = quadratic_.transpose() * lambda;
  } else {
    const Eigen::VectorXd sol = regime_ == ModelRegime::Determined ? Eigen::VectorXd(std::get<0>(solver_).solve(rhs))
                                                                  : Eigen::VectorXd(std::get<1>(solver_).solve(rhs));
    gu = sol.head(n_);
    coeffs = sol.tail(sol.size() - n_);
  }
  if (!gu.allFinite() || !coeffs.allFinite()) return std::nullopt;

  if (regime_ != ModelRegime::Regression) {
    const Eigen::VectorXd predicted = linear_ * gu + quadratic_ * coeffs;
    const double residual = (predicted - rhs).cwiseAbs().maxCoeff();
    if (residual > kResidualTol * (1.0 + values.cwiseAbs().maxCoeff())) return std::nullopt;
  }

  QuadraticModel m;
  m.center = center_;
  m.f_center = f0;
  m.g = gu / scale_;
  Eigen::MatrixXd H = hessian_from_coefficients(coeffs, n_) / (scale_ * scale_);
  m.H = 0.5 * (H + H.transpose());
  return m;
}

std::optional<QuadraticModel> build_model(const InterpolationSet& set, const Eigen::VectorXd& component_values) {
  auto factory = ModelFactory::factor(set);
  if (!factory) return std::nullopt;
  return factory->fit(component_values);
}

std::vector<std::optional<QuadraticModel>> build_models(const InterpolationSet& set) {
  std::vector<std::optional<QuadraticModel>> models(static_cast<std::size_t>(set.values.cols()));
  auto factory = ModelFactory::factor(set);
  if (!factory) return models;
  for (Eigen::Index i = 0; i < set.values.cols(); ++i) {
    models[static_cast<std::size_t>(i)] = factory->fit(set.values.col(i));
  }
  return models;
}

}  // namespace boostdms
