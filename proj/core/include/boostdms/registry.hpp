#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boostdms/problem.hpp"

namespace boostdms {

/// Names of the built-in analytic test problems, in registry order.
///
/// The set covers n in [1, 30] and q in {2, 3, 4}: ZDT1-4, ZDT6, DTLZ1-4,
/// DTLZ7, DTLZ2 with four objectives, Fonseca-Fleming, Kursawe, Schaffer,
/// Poloni, Viennet (variant 3) and shifted convex quadratics (two, three and
/// four objectives) whose efficient sets are known in closed form.
std::vector<std::string> registry_names();

/// Throws std::invalid_argument for an unknown name.
Problem make_problem(std::string_view name);

/// Named problem subsets: "all", "smoke" (fast, low dimension), "speed"
/// (n >= 5, used for parallel timing), "biobjective". Throws
/// std::invalid_argument for an unknown suite.
std::vector<std::string> suite_problems(std::string_view suite);

/// Minimizers of the shifted quadratics "biquad<n>": f1 = |x - a|^2, f2 = |x - b|^2.
/// The efficient set is the segment [a, b].
struct QuadraticPair {
  Vec a;
  Vec b;
};
QuadraticPair biquad_minimizers(int n);

}  // namespace boostdms
