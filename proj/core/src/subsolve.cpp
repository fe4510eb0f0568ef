#include "boostdms/subsolve.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace boostdms {

namespace {

Vec clip(const Vec& x, const Vec& lo, const Vec& hi) { return x.cwiseMax(lo).cwiseMin(hi); }

double phi(const std::vector<QuadraticModel>& models, const Vec& x) {
  double v = -std::numeric_limits<double>::infinity();
  for (const auto& m : models) v = std::max(v, m(x));
  return v;
}

// Kronecker sequence with the generalized golden ratio of dimension n.
Vec quasi_random_unit(Eigen::Index n, std::uint64_t index) {
  double g = 2.0;
  for (int it = 0; it < 64; ++it) g = std::pow(1.0 + g, 1.0 / static_cast<double>(n + 1));
  Vec u(n);
  double power = 1.0;
  for (Eigen::Index d = 0; d < n; ++d) {
    power /= g;
    const double v = 0.5 + static_cast<double>(index) * power;
    u[d] = v - std::floor(v);
  }
  return u;
}

// Descent direction for max_i m_i at x over the box [lo, hi]: minus the
// min-norm convex combination of the rows of `grads`, with coordinates that
// would leave the box held at zero.
Vec projected_direction(const Eigen::MatrixXd& grads, const Vec& x, const Vec& lo, const Vec& hi) {
  const Eigen::Index n = x.size();
  std::vector<bool> fixed(static_cast<std::size_t>(n), false);
  Vec d = Vec::Zero(n);
  for (Eigen::Index pass = 0; pass <= n; ++pass) {
    Eigen::MatrixXd g = grads;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (fixed[static_cast<std::size_t>(i)]) g.col(i).setZero();
    }
    d = -min_norm_hull_point(g);
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (fixed[static_cast<std::size_t>(i)]) continue;
      if ((x[i] <= lo[i] && d[i] < 0) || (x[i] >= hi[i] && d[i] > 0)) {
        fixed[static_cast<std::size_t>(i)] = true;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (fixed[static_cast<std::size_t>(i)]) d[i] = 0.0;
  }
  return d;
}

Vec descend(const std::vector<QuadraticModel>& models, Vec x, const Vec& lo, const Vec& hi, double radius) {
  constexpr std::array<double, 3> kActiveTol{1e-8, 1e-4, 1e-2};
  constexpr double kArmijo = 1e-4;
  constexpr double kStepTol = 1e-10;
  const Eigen::Index n = x.size();
  const long max_iter = 50L * static_cast<long>(n);

  for (long it = 0; it < max_iter; ++it) {
    const double fx = phi(models, x);
    bool accepted = false;
    Vec next = x;
    for (std::size_t level = 0; level < kActiveTol.size() && !accepted; ++level) {
      const double eps = kActiveTol[level] * (1.0 + std::abs(fx));
      std::vector<Eigen::Index> active;
      for (std::size_t i = 0; i < models.size(); ++i) {
        if (models[i](x) >= fx - eps) active.push_back(static_cast<Eigen::Index>(i));
      }
      Eigen::MatrixXd grads(static_cast<Eigen::Index>(active.size()), n);
      for (std::size_t k = 0; k < active.size(); ++k) {
        grads.row(static_cast<Eigen::Index>(k)) = models[static_cast<std::size_t>(active[k])].gradient(x).transpose();
      }
      const Vec d = projected_direction(grads, x, lo, hi);
      const double dn = d.norm();
      if (!(dn > 1e-14)) {
        if (level == 0) return x;  // stationary for the tightest active set
        continue;
      }
      double t = 2.0 * radius / dn;
      for (int bt = 0; bt < 60; ++bt, t *= 0.5) {
        const Vec trial = clip(x + t * d, lo, hi);
        const double moved = (trial - x).squaredNorm();
        if (moved == 0.0) break;
        if (phi(models, trial) <= fx - kArmijo * moved / t) {
          next = trial;
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) return x;
    const double step = (next - x).norm();
    x = std::move(next);
    if (step < kStepTol) return x;
  }
  return x;
}

}  // namespace

Vec solve_trust_region(const Vec& g, const Eigen::MatrixXd& H, double radius) {
  const Eigen::Index n = g.size();
  if (!(radius > 0)) throw std::invalid_argument("solve_trust_region: radius must be positive");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success || !g.allFinite()) return Vec::Zero(n);
  const Vec& lam = es.eigenvalues();
  const Eigen::MatrixXd& V = es.eigenvectors();
  const Vec a = V.transpose() * g;
  const double gnorm = g.norm();
  const double tol = 1e-12 * std::max(1.0, lam.cwiseAbs().maxCoeff());
  const double lmin = lam[0];

  auto coeffs = [&](double mu, bool skip_singular) {
    Vec c(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double den = lam[i] + mu;
      if (den <= tol) {
        c[i] = skip_singular ? 0.0 : -std::copysign(std::numeric_limits<double>::infinity(), a[i]);
        if (!skip_singular && a[i] == 0.0) c[i] = 0.0;
      } else {
        c[i] = -a[i] / den;
      }
    }
    return c;
  };

  if (lmin > tol) {
    const Vec c = coeffs(0.0, false);
    if (c.norm() <= radius) return V * c;
  }

  const double mu_low = std::max(0.0, -lmin);
  double low_weight = 0.0;
  for (Eigen::Index i = 0; i < n && lam[i] <= lmin + tol; ++i) low_weight += a[i] * a[i];
  const bool maybe_hard = gnorm == 0.0 || std::sqrt(low_weight) <= 1e-10 * gnorm;
  if (maybe_hard) {
    Vec c = coeffs(mu_low, true);
    const double cn = c.norm();
    if (cn <= radius) {
      if (lmin < -tol) c[0] += std::sqrt(std::max(0.0, radius * radius - cn * cn));
      return V * c;
    }
  }

  // ||s(mu)|| = radius on (mu_low, inf); Newton on 1/||s|| - 1/radius, safeguarded by bisection.
  double lo = mu_low;
  double hi = std::max(mu_low, gnorm / radius - lmin) + tol + std::numeric_limits<double>::min();
  double mu = hi;
  Vec c = coeffs(mu, maybe_hard);
  for (int it = 0; it < 200; ++it) {
    c = coeffs(mu, maybe_hard);
    const double cn = c.norm();
    if (std::abs(cn - radius) <= 1e-12 * radius) break;
    if (cn > radius) {
      lo = mu;
    } else {
      hi = mu;
    }
    double cube = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double den = lam[i] + mu;
      if (den > tol) cube += a[i] * a[i] / (den * den * den);
    }
    double next = std::numeric_limits<double>::quiet_NaN();
    if (std::isfinite(cn) && cube > 0) {
      const double value = 1.0 / cn - 1.0 / radius;
      const double slope = cube / (cn * cn * cn);
      next = mu - value / slope;
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (hi - lo <= 1e-15 * std::max(1.0, hi)) break;
    mu = next;
  }
  Vec s = V * c;
  const double sn = s.norm();
  if (!std::isfinite(sn)) return Vec::Zero(n);
  if (sn > radius) s *= radius / sn;
  return s;
}

Vec min_single_model(const QuadraticModel& m, double radius, const Vec& lb, const Vec& ub) {
  const Vec& c = m.center;
  Vec s = solve_trust_region(m.g, m.H, radius);
  if (!s.allFinite()) return clip(c, lb, ub);
  const Vec x = clip(c + s, lb, ub);
  if (m(x) <= m.f_center + 1e-10) return x;

  // Clipping raised the model value: fall back to the best point on [c, x].
  const Vec d = x - c;
  const double gd = m.g.dot(d);
  const double dHd = d.dot(m.H * d);
  double t = 0.0;
  if (dHd > 0) t = std::clamp(-gd / dHd, 0.0, 1.0);
  return clip(c + t * d, lb, ub);
}

Vec min_norm_hull_point(const Eigen::MatrixXd& vectors) {
  const Eigen::Index k = vectors.rows();
  if (k == 0) throw std::invalid_argument("min_norm_hull_point: no vectors");
  if (k > 16) throw std::invalid_argument("min_norm_hull_point: too many vectors for subset enumeration");
  Vec best = vectors.row(0).transpose();
  double best_norm = best.squaredNorm();
  for (Eigen::Index i = 1; i < k; ++i) {
    const double v = vectors.row(i).squaredNorm();
    if (v < best_norm) {
      best_norm = v;
      best = vectors.row(i).transpose();
    }
  }
  const unsigned limit = 1u << static_cast<unsigned>(k);
  for (unsigned mask = 1; mask < limit; ++mask) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (mask & (1u << static_cast<unsigned>(i))) idx.push_back(i);
    }
    if (idx.size() < 2) continue;
    const auto s = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd sub(s, vectors.cols());
    for (Eigen::Index r = 0; r < s; ++r) sub.row(r) = vectors.row(idx[static_cast<std::size_t>(r)]);
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(s + 1, s + 1);
    kkt.topLeftCorner(s, s) = sub * sub.transpose();
    kkt.topRightCorner(s, 1).setOnes();
    kkt.bottomLeftCorner(1, s).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s + 1);
    rhs[s] = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd sol = lu.solve(rhs);
    Eigen::VectorXd w = sol.head(s);
    if (!w.allFinite() || w.minCoeff() < -1e-12) continue;
    w = w.cwiseMax(0.0);
    w /= w.sum();
    const Vec point = sub.transpose() * w;
    const double v = point.squaredNorm();
    if (v < best_norm) {
      best_norm = v;
      best = point;
    }
  }
  return best;
}

Vec min_chebyshev(const ChebyshevSubproblem& problem) {
  if (problem.models.size() < 2) throw std::invalid_argument("min_chebyshev: needs at least two models");
  if (!(problem.radius > 0)) throw std::invalid_argument("min_chebyshev: radius must be positive");
  const Vec& c = problem.center;
  const Vec lo = problem.lb.cwiseMax((c.array() - problem.radius).matrix());
  const Vec hi = problem.ub.cwiseMin((c.array() + problem.radius).matrix());
  if ((lo.array() > hi.array()).any()) throw std::logic_error("min_chebyshev: empty feasible box");

  std::vector<Vec> starts;
  starts.push_back(clip(c, lo, hi));
  for (const auto& m : problem.models) starts.push_back(min_single_model(m, problem.radius, lo, hi));
  const std::uint64_t base = 1 + (problem.seed % 1000003ULL) * 2;
  for (std::uint64_t k = 0; k < 2; ++k) {
    const Vec u = quasi_random_unit(c.size(), base + k);
    starts.push_back(lo + u.cwiseProduct(hi - lo));
  }

  Vec best = starts.front();
  double best_value = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    Vec x = clip(descend(problem.models, s, lo, hi, problem.radius), lo, hi);
    const double v = phi(problem.models, x);
    if (v < best_value) {
      best_value = v;
      best = std::move(x);
    }
  }
  return best;
}

}  // namespace boostdms
