#include "boostdms/registry.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>

namespace boostdms {

namespace {

constexpr double kPi = std::numbers::pi;

struct Entry {
  int n;
  int q;
  double lo;
  double hi;
  Problem::Evaluator f;
  // Optional per-coordinate override of the bounds.
  std::function<void(Vec&, Vec&)> bounds;
};

// ---- ZDT -----------------------------------------------------------------

double zdt_g_sum(const Vec& x) { return 1.0 + 9.0 * x.tail(x.size() - 1).sum() / static_cast<double>(x.size() - 1); }

ObjVector zdt1(const Vec& x) {
  const double g = zdt_g_sum(x);
  return ObjVector{{x[0], g * (1.0 - std::sqrt(x[0] / g))}};
}

ObjVector zdt2(const Vec& x) {
  const double g = zdt_g_sum(x);
  const double r = x[0] / g;
  return ObjVector{{x[0], g * (1.0 - r * r)}};
}

ObjVector zdt3(const Vec& x) {
  const double g = zdt_g_sum(x);
  const double r = x[0] / g;
  return ObjVector{{x[0], g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * x[0]))}};
}

ObjVector zdt4(const Vec& x) {
  double g = 1.0 + 10.0 * static_cast<double>(x.size() - 1);
  for (Eigen::Index i = 1; i < x.size(); ++i) g += x[i] * x[i] - 10.0 * std::cos(4.0 * kPi * x[i]);
  return ObjVector{{x[0], g * (1.0 - std::sqrt(x[0] / g))}};
}

ObjVector zdt6(const Vec& x) {
  const double f1 = 1.0 - std::exp(-4.0 * x[0]) * std::pow(std::sin(6.0 * kPi * x[0]), 6);
  const double g = 1.0 + 9.0 * std::pow(x.tail(x.size() - 1).sum() / static_cast<double>(x.size() - 1), 0.25);
  const double r = f1 / g;
  return ObjVector{{f1, g * (1.0 - r * r)}};
}

// ---- DTLZ ----------------------------------------------------------------

double dtlz_rastrigin_g(const Vec& xm) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < xm.size(); ++i) {
    const double d = xm[i] - 0.5;
    s += d * d - std::cos(20.0 * kPi * d);
  }
  return 100.0 * (static_cast<double>(xm.size()) + s);
}

double dtlz_sphere_g(const Vec& xm) { return (xm.array() - 0.5).square().sum(); }

ObjVector dtlz1_eval(const Vec& x, int q) {
  const Vec xm = x.tail(x.size() - (q - 1));
  const double g = dtlz_rastrigin_g(xm);
  ObjVector f(q);
  for (int m = 0; m < q; ++m) {
    double v = 0.5 * (1.0 + g);
    for (int j = 0; j < q - 1 - m; ++j) v *= x[j];
    if (m > 0) v *= 1.0 - x[q - 1 - m];
    f[m] = v;
  }
  return f;
}

ObjVector dtlz_spherical(const Vec& x, int q, double g, double power) {
  ObjVector f(q);
  for (int m = 0; m < q; ++m) {
    double v = 1.0 + g;
    for (int j = 0; j < q - 1 - m; ++j) v *= std::cos(std::pow(x[j], power) * kPi / 2.0);
    if (m > 0) v *= std::sin(std::pow(x[q - 1 - m], power) * kPi / 2.0);
    f[m] = v;
  }
  return f;
}

ObjVector dtlz7_eval(const Vec& x, int q) {
  const Vec xm = x.tail(x.size() - (q - 1));
  const double g = 1.0 + 9.0 * xm.sum() / static_cast<double>(xm.size());
  ObjVector f(q);
  double h = static_cast<double>(q);
  for (int i = 0; i < q - 1; ++i) {
    f[i] = x[i];
    h -= f[i] / (1.0 + g) * (1.0 + std::sin(3.0 * kPi * f[i]));
  }
  f[q - 1] = (1.0 + g) * h;
  return f;
}

// ---- Classic low-dimensional problems -----------------------------------

ObjVector fonseca(const Vec& x) {
  const double c = 1.0 / std::sqrt(static_cast<double>(x.size()));
  const double a = (x.array() - c).square().sum();
  const double b = (x.array() + c).square().sum();
  return ObjVector{{1.0 - std::exp(-a), 1.0 - std::exp(-b)}};
}

ObjVector kursawe(const Vec& x) {
  double f1 = 0.0;
  double f2 = 0.0;
  for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
    f1 += -10.0 * std::exp(-0.2 * std::sqrt(x[i] * x[i] + x[i + 1] * x[i + 1]));
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    f2 += std::pow(std::abs(x[i]), 0.8) + 5.0 * std::sin(x[i] * x[i] * x[i]);
  }
  return ObjVector{{f1, f2}};
}

ObjVector schaffer(const Vec& x) { return ObjVector{{x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)}}; }

ObjVector poloni(const Vec& x) {
  const double a1 = 0.5 * std::sin(1.0) - 2.0 * std::cos(1.0) + std::sin(2.0) - 1.5 * std::cos(2.0);
  const double a2 = 1.5 * std::sin(1.0) - std::cos(1.0) + 2.0 * std::sin(2.0) - 0.5 * std::cos(2.0);
  const double b1 = 0.5 * std::sin(x[0]) - 2.0 * std::cos(x[0]) + std::sin(x[1]) - 1.5 * std::cos(x[1]);
  const double b2 = 1.5 * std::sin(x[0]) - std::cos(x[0]) + 2.0 * std::sin(x[1]) - 0.5 * std::cos(x[1]);
  return ObjVector{{1.0 + (a1 - b1) * (a1 - b1) + (a2 - b2) * (a2 - b2),
                    (x[0] + 3.0) * (x[0] + 3.0) + (x[1] + 1.0) * (x[1] + 1.0)}};
}

ObjVector viennet3(const Vec& x) {
  const double r = x[0] * x[0] + x[1] * x[1];
  const double f1 = 0.5 * r + std::sin(r);
  const double u = 3.0 * x[0] - 2.0 * x[1] + 4.0;
  const double v = x[0] - x[1] + 1.0;
  const double f2 = u * u / 8.0 + v * v / 27.0 + 15.0;
  const double f3 = 1.0 / (r + 1.0) - 1.1 * std::exp(-r);
  return ObjVector{{f1, f2, f3}};
}

// ---- Shifted convex quadratics ------------------------------------------

Problem::Evaluator sum_of_squares(std::vector<Vec> centers) {
  return [centers = std::move(centers)](const Vec& x) {
    ObjVector f(static_cast<Eigen::Index>(centers.size()));
    for (std::size_t k = 0; k < centers.size(); ++k) f[static_cast<Eigen::Index>(k)] = (x - centers[k]).squaredNorm();
    return f;
  };
}

std::vector<Vec> simplex_centers(int n, int q) {
  std::vector<Vec> centers;
  for (int k = 0; k < q; ++k) {
    Vec c = Vec::Zero(n);
    c[k % n] = 1.0;
    c[(k + 1) % n] -= 0.5;
    centers.push_back(c);
  }
  return centers;
}

const std::map<std::string, Entry, std::less<>>& registry() {
  static const std::map<std::string, Entry, std::less<>> table = [] {
    std::map<std::string, Entry, std::less<>> t;
    t["zdt1"] = {30, 2, 0.0, 1.0, zdt1, {}};
    t["zdt2"] = {30, 2, 0.0, 1.0, zdt2, {}};
    t["zdt3"] = {30, 2, 0.0, 1.0, zdt3, {}};
    t["zdt4"] = {10, 2, -5.0, 5.0, zdt4, [](Vec& lb, Vec& ub) {
                   lb[0] = 0.0;
                   ub[0] = 1.0;
                 }};
    t["zdt6"] = {10, 2, 0.0, 1.0, zdt6, {}};
    t["dtlz1"] = {7, 3, 0.0, 1.0, [](const Vec& x) { return dtlz1_eval(x, 3); }, {}};
    t["dtlz2"] = {12, 3, 0.0, 1.0, [](const Vec& x) { return dtlz_spherical(x, 3, dtlz_sphere_g(x.tail(10)), 1.0); }, {}};
    t["dtlz3"] = {12, 3, 0.0, 1.0,
                  [](const Vec& x) { return dtlz_spherical(x, 3, dtlz_rastrigin_g(x.tail(10)), 1.0); }, {}};
    t["dtlz4"] = {12, 3, 0.0, 1.0,
                  [](const Vec& x) { return dtlz_spherical(x, 3, dtlz_sphere_g(x.tail(10)), 100.0); }, {}};
    t["dtlz7"] = {22, 3, 0.0, 1.0, [](const Vec& x) { return dtlz7_eval(x, 3); }, {}};
    t["dtlz2_q4"] = {13, 4, 0.0, 1.0,
                     [](const Vec& x) { return dtlz_spherical(x, 4, dtlz_sphere_g(x.tail(10)), 1.0); }, {}};
    t["fonseca"] = {3, 2, -4.0, 4.0, fonseca, {}};
    t["kursawe"] = {3, 2, -5.0, 5.0, kursawe, {}};
    t["schaffer"] = {1, 2, -10.0, 10.0, schaffer, {}};
    t["poloni"] = {2, 2, -kPi, kPi, poloni, {}};
    t["viennet3"] = {2, 3, -3.0, 3.0, viennet3, {}};
    for (int n : {2, 5, 10}) {
      const QuadraticPair ab = biquad_minimizers(n);
      t["biquad" + std::to_string(n)] = {n, 2, -2.0, 3.0, sum_of_squares({ab.a, ab.b}), {}};
    }
    t["triquad4"] = {4, 3, -2.0, 2.0, sum_of_squares(simplex_centers(4, 3)), {}};
    t["quadq4"] = {5, 4, -2.0, 2.0, sum_of_squares(simplex_centers(5, 4)), {}};
    return t;
  }();
  return table;
}

}  // namespace

QuadraticPair biquad_minimizers(int n) {
  QuadraticPair ab{Vec(n), Vec(n)};
  for (int i = 0; i < n; ++i) {
    ab.a[i] = i % 2 == 0 ? -0.5 : 0.5;
    ab.b[i] = -ab.a[i];
  }
  return ab;
}

std::vector<std::string> registry_names() {
  // Registry order groups by family rather than alphabetically.
  return {"zdt1",     "zdt2",    "zdt3",     "zdt4",     "zdt6",    "dtlz1",   "dtlz2",
          "dtlz3",    "dtlz4",   "dtlz7",    "dtlz2_q4", "fonseca", "kursawe", "schaffer",
          "poloni",   "viennet3", "biquad2", "biquad5",  "biquad10", "triquad4", "quadq4"};
}

Problem make_problem(std::string_view name) {
  const auto& table = registry();
  const auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown problem '" + std::string(name) + "'");
  const Entry& e = it->second;
  Vec lb = Vec::Constant(e.n, e.lo);
  Vec ub = Vec::Constant(e.n, e.hi);
  if (e.bounds) e.bounds(lb, ub);
  return Problem(it->first, std::move(lb), std::move(ub), e.q, e.f);
}

std::vector<std::string> suite_problems(std::string_view suite) {
  if (suite == "all") return registry_names();
  if (suite == "smoke") return {"schaffer", "fonseca", "biquad2", "poloni", "viennet3", "triquad4"};
  if (suite == "speed") return {"biquad5", "zdt6", "dtlz1", "quadq4", "biquad10", "zdt4"};
  if (suite == "biobjective") {
    std::vector<std::string> out;
    for (const auto& name : registry_names()) {
      if (registry().find(name)->second.q == 2) out.push_back(name);
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace boostdms
